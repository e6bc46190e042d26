#include "mfn/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace mfn {
namespace {

// Abscissae / weights of 15-point Gauss-Legendre on [-1, 1] (positive half;
// the rule is symmetric).
constexpr double kX15[8] = {
    0.000000000000000000000000000000000, 0.201194093997434522300628303394596,
    0.394151347077563369897207370981045, 0.570972172608538847537226737253911,
    0.724417731360170047416186054613938, 0.848206583410427216200648320774217,
    0.937273392400705904307758947710209, 0.987992518020485428489565718586613};
constexpr double kW15[8] = {
    0.202578241925561272880620199967519, 0.198431485327111576456118326443839,
    0.186161000015562211026800561866423, 0.166269205816993933553200860481209,
    0.139570677926154314447804794511028, 0.107159220467171935011869546685869,
    0.070366047488108124709267416450667, 0.030753241996117268354628393577204};

struct PanelVal {
  cplx v{0.0, 0.0};
  double absmass = 0.0;  // integral of |f|, same rule
};

struct PanelState {
  double a, b;
  PanelVal value;
  int depth;
};

class Engine {
 public:
  Engine(ComplexSampler f, const QuadConfig& cfg, double total_width)
      : f_(f), cfg_(cfg), total_width_(total_width) {}

  PanelVal panel(double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const cplx fc = f_(c);
    cplx s = kW15[0] * fc;
    double sa = kW15[0] * std::abs(fc);
    for (int i = 1; i < 8; ++i) {
      const double d = h * kX15[i];
      const cplx f1 = f_(c - d), f2 = f_(c + d);
      s += kW15[i] * (f1 + f2);
      sa += kW15[i] * (std::abs(f1) + std::abs(f2));
    }
    evals_ += 15;
    abs_mass_ += sa * h;
    return {h * s, h * sa};
  }

  // Depth-first refinement; deterministic left-to-right accumulation.
  void refine(const PanelState& p) {
    if (diverged_) return;
    const double m = 0.5 * (p.a + p.b);
    const PanelVal vl = panel(p.a, m);
    const PanelVal vr = panel(m, p.b);
    const cplx sum = vl.v + vr.v;
    const double delta = std::abs(p.value.v - sum);
    if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag()) ||
        abs_mass_ > cfg_.divergence_cap) {
      diverged_ = true;
      return;
    }
    const double width = p.b - p.a;
    // A delta below the panel's own rounding mass carries no information,
    // and panels too thin for interior nodes cannot be split meaningfully.
    const double noise_floor = 32.0 * 2.2e-16 * (vl.absmass + vr.absmass);
    const bool tiny =
        width <= 2048.0 * 2.2e-16 * std::max(std::abs(p.a), std::abs(p.b));
    if (delta <= std::max(tol_ * width / total_width_, noise_floor) || tiny) {
      value_ += sum;
      err_ += delta;
      return;
    }
    if (p.depth >= cfg_.max_depth) {
      value_ += sum;
      err_ += delta;
      unconverged_ = true;
      return;
    }
    refine({p.a, m, vl, p.depth + 1});
    refine({m, p.b, vr, p.depth + 1});
  }

  QuadResult run(std::span<const double> edges) {
    // First pass sets the refinement budget. The budget scales with the
    // absolute mass, so heavily cancelling integrands (oscillatory windows)
    // stop at the roundoff floor instead of refining without progress.
    std::vector<PanelVal> first(edges.size() - 1);
    cplx est(0.0, 0.0);
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
      first[i] = panel(edges[i], edges[i + 1]);
      est += first[i].v;
      if (abs_mass_ > cfg_.divergence_cap || !std::isfinite(est.real())) {
        return {est, std::abs(est), evals_, true};
      }
    }
    tol_ = std::max(cfg_.abs_tol,
                    cfg_.rel_tol * std::max(std::abs(est), 1e-3 * abs_mass_));
    for (size_t i = 0; i + 1 < edges.size() && !diverged_; ++i) {
      refine({edges[i], edges[i + 1], first[i], 0});
    }
    QuadResult r;
    r.value = value_;
    r.abs_error_estimate = err_;
    r.evaluations = evals_;
    r.diverged = diverged_ || (unconverged_ && err_ > 100.0 * tol_);
    return r;
  }

 private:
  ComplexSampler f_;
  QuadConfig cfg_;
  double total_width_;
  double tol_ = 0.0;
  cplx value_{0.0, 0.0};
  double err_ = 0.0;
  double abs_mass_ = 0.0;
  std::int64_t evals_ = 0;
  bool diverged_ = false;
  bool unconverged_ = false;
};

}  // namespace

cplx gauss15(ComplexSampler f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  cplx s = kW15[0] * f(c);
  for (int i = 1; i < 8; ++i) {
    const double d = h * kX15[i];
    s += kW15[i] * (f(c - d) + f(c + d));
  }
  return h * s;
}

std::vector<double> graded_edges(double a, double b, int levels, double ratio) {
  // Ladders stop once a panel becomes so thin that its interior quadrature
  // nodes would round onto the endpoint; near 0 the spacing is denormal-fine
  // and the full depth is available for the singular fiber bottoms.
  const double floor_a = 1024.0 * 2.2e-16 * std::abs(a);
  const double floor_b = 1024.0 * 2.2e-16 * std::abs(b);
  const double m = 0.5 * (a + b);
  std::vector<double> e;
  e.reserve(2 * levels + 3);
  e.push_back(a);
  for (int k = levels; k >= 1; --k) {
    const double t = a + (m - a) * std::pow(ratio, k);
    if (t - a >= floor_a && t > e.back()) e.push_back(t);
  }
  if (m > e.back()) e.push_back(m);
  for (int k = 1; k <= levels; ++k) {
    const double t = b - (b - m) * std::pow(ratio, k);
    if (b - t >= floor_b && t > e.back() && t < b) e.push_back(t);
  }
  e.push_back(b);
  return e;
}

QuadResult integrate_edges(ComplexSampler f, std::span<const double> edges,
                           const QuadConfig& cfg) {
  Engine eng(f, cfg, edges.back() - edges.front());
  return eng.run(edges);
}

QuadResult integrate_interval(ComplexSampler f, double a, double b,
                              const QuadConfig& cfg) {
  const auto edges = graded_edges(a, b);
  return integrate_edges(f, edges, cfg);
}

QuadResult integrate_halfline(ComplexSampler f, double decay_hint,
                              const QuadConfig& cfg) {
  const double t0 = decay_hint > 0 ? std::clamp(3.0 / decay_hint, 1e-3, 64.0) : 1.0;
  QuadResult total;
  double lo = 0.0, hi = t0;
  double last_mag = -1.0;
  int tiny_streak = 0, grow_streak = 0;
  for (int k = 0; k < 64; ++k) {
    // Grade toward 0 on the first window only; later windows are smooth.
    QuadResult w = (k == 0) ? integrate_interval(f, lo, hi, cfg)
                            : integrate_edges(f, graded_edges(lo, hi, 20), cfg);
    total.value += w.value;
    total.abs_error_estimate += w.abs_error_estimate;
    total.evaluations += w.evaluations;
    if (w.diverged || std::abs(total.value) > cfg.divergence_cap ||
        std::abs(w.value) > cfg.divergence_cap) {
      total.diverged = true;
      return total;
    }
    const double mag = std::abs(w.value);
    grow_streak = (last_mag >= 0.0 && mag > last_mag) ? grow_streak + 1 : 0;
    if (grow_streak >= 3) {
      total.diverged = true;
      return total;
    }
    tiny_streak = (mag < cfg.abs_tol) ? tiny_streak + 1 : 0;
    if (tiny_streak >= 2) return total;
    last_mag = mag;
    lo = hi;
    hi *= 2.0;
  }
  return total;
}

cplx integrate_periodic(ComplexSampler f, int n) {
  cplx s(0.0, 0.0);
  for (int k = 0; k < n; ++k) s += f(double(k) / double(n));
  return s / double(n);
}

}  // namespace mfn
