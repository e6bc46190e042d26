#include "mfn/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>

#include "mfn/parallel.hpp"

namespace mfn {
namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kLogGuard = 300.0;

struct SliceValue {
  cplx uhat{0.0, 0.0};
  double noise = 0.0;  // absolute uncertainty of uhat
};

// Transform of one (xi, y) point together with a noise estimate: rounding of
// the sample sums plus the window-truncation boundary term, the latter
// discounted by the oscillatory averaging gain.
SliceValue measure_uhat(const TestFunction& f, const SpaceConfig& cfg,
                        DualFrequency xi, double y) {
  SliceValue out;
  if (cfg.x.geometry.discrete_dual()) {
    const long n = lround(xi.value);
    out.uhat = fourier_coeff_circle(f.source.sampler, n, y, cfg.n_circle_samples);
    double scale = 0.0;
    for (int k = 0; k < cfg.n_circle_samples; ++k) {
      scale = std::max(scale,
                       std::abs(f.source.sampler(double(k) / cfg.n_circle_samples, y)));
    }
    out.noise = 64.0 * 2.2e-16 * scale;
    return out;
  }
  const double W = f.source.window ? f.source.window(xi.value) : 32.0;
  QuadResult r = fourier_slice_line(f.source.sampler, xi.value, y, W, cfg.quad,
                                    f.source.feature_scale, f.source.outer_scale);
  out.uhat = r.value;
  const double ax = std::abs(xi.value);
  const double edge = std::abs(f.source.sampler(W, y)) + std::abs(f.source.sampler(-W, y));
  double tail = edge * std::min(2.0 * W, ax > 0.0 ? 1.0 / (M_PI * ax) : 2.0 * W);
  const double osc = kTwoPi * ax * W;
  if (osc > 1.0) tail *= 30.0 / std::pow(osc, 4.0);
  out.noise = tail + 1e-13 * std::abs(r.value) + r.abs_error_estimate;
  return out;
}

cplx rescale_u0(cplx uhat, double xi, double y_ref) {
  const double ex = kTwoPi * xi * y_ref;
  if (std::abs(uhat) == 0.0) return {0.0, 0.0};
  if (ex <= kLogGuard) return uhat * std::exp(ex);
  return std::exp(std::log(uhat) + ex);
}

double grid_l2_mass(const ModelGeometry& geo, const FiberProfile& prof) {
  double s = 0.0;
  for (size_t i = 0; i < prof.grid->nodes.size(); ++i) {
    s += prof.grid->weights[i] * fiber_density(geo, prof.grid->nodes[i]) *
         std::norm(prof.values[i]);
  }
  return s;
}

}  // namespace

cplx extract_u0(const TestFunction& f, const SpaceConfig& cfg, DualFrequency xi,
                double y_ref) {
  return rescale_u0(measure_uhat(f, cfg, xi, y_ref).uhat, xi.value, y_ref);
}

std::vector<cplx> extract_u0_table(const TestFunction& f, const SpaceConfig& cfg,
                                   double y_ref) {
  const auto freqs = cfg.xi.frequencies();
  std::vector<SliceValue> vals(freqs.size());
  parallel_for(freqs.size(), cfg.threads, [&](size_t j) {
    vals[j] = measure_uhat(f, cfg, freqs[j], y_ref);
  });
  double scale = 0.0;
  for (const auto& v : vals) scale = std::max(scale, std::abs(v.uhat));
  std::vector<cplx> out(freqs.size());
  for (size_t j = 0; j < freqs.size(); ++j) {
    // Values at the noise level are exact zeros of the boundary density;
    // rescaling noise would otherwise plant spurious mass, in particular at
    // frequencies where the weight is infinite.
    const double floor = std::max(1e-12 * scale, vals[j].noise);
    out[j] = std::abs(vals[j].uhat) <= floor
                 ? cplx(0.0, 0.0)
                 : rescale_u0(vals[j].uhat, freqs[j].value, y_ref);
  }
  return out;
}

FactorizationReport factorization_test(const TestFunction& f, const SpaceConfig& cfg,
                                       std::span<const double> y_slices, double tol) {
  if (y_slices.size() < 2) {
    throw std::invalid_argument("factorization_test: need at least two slices");
  }
  const auto freqs = cfg.xi.frequencies();
  const size_t nf = freqs.size(), ns = y_slices.size();

  std::vector<SliceValue> vals(nf * ns);
  parallel_for(nf * ns, cfg.threads, [&](size_t idx) {
    const size_t j = idx / ns, s = idx % ns;
    vals[idx] = measure_uhat(f, cfg, freqs[j], y_slices[s]);
  });

  double uhat_scale = 0.0;
  for (const auto& v : vals) uhat_scale = std::max(uhat_scale, std::abs(v.uhat));
  const double zero_floor = 1e-12 * uhat_scale;

  // Rescale, treating noise-level values as exact zeros, and carry the
  // rescaled measurement uncertainty alongside each value.
  std::vector<cplx> u0(nf * ns);
  std::vector<double> unc(nf * ns);
  std::vector<bool> has_signal(nf * ns);
  for (size_t j = 0; j < nf; ++j) {
    for (size_t s = 0; s < ns; ++s) {
      const size_t idx = j * ns + s;
      const auto& v = vals[idx];
      const double floor = std::max(zero_floor, v.noise);
      has_signal[idx] = std::abs(v.uhat) > floor;
      const cplx eff = has_signal[idx] ? v.uhat : cplx(0.0, 0.0);
      u0[idx] = rescale_u0(eff, freqs[j].value, y_slices[s]);
      const double ex = kTwoPi * freqs[j].value * y_slices[s];
      unc[idx] = ex <= kLogGuard ? floor * std::exp(ex)
                                 : std::numeric_limits<double>::infinity();
    }
  }

  // Global spectral scale from the values with genuine signal.
  double scale = 0.0;
  for (size_t idx = 0; idx < u0.size(); ++idx) {
    if (has_signal[idx]) scale = std::max(scale, std::abs(u0[idx]));
  }
  if (scale == 0.0) scale = 1.0;

  // A deviation counts only for the part that exceeds the combined
  // measurement uncertainty of the pair.
  FactorizationReport rep;
  rep.tolerance = tol;
  for (size_t j = 0; j < nf; ++j) {
    for (size_t i = 0; i < ns; ++i) {
      for (size_t k = i + 1; k < ns; ++k) {
        const size_t a = j * ns + i, b = j * ns + k;
        if (has_signal[a] && has_signal[b]) ++rep.informative_pairs;
        const double d = std::abs(u0[a] - u0[b]);
        const double budget = unc[a] + unc[b];
        if (!(d > budget)) continue;
        const double rel = (d - budget) / scale;
        if (rel > rep.max_rel_deviation) {
          rep.max_rel_deviation = rel;
          rep.worst_xi = freqs[j].value;
          rep.worst_y_i = y_slices[i];
          rep.worst_y_j = y_slices[k];
        }
      }
    }
  }
  rep.u0_table.reserve(nf);
  for (size_t j = 0; j < nf; ++j) rep.u0_table.emplace_back(freqs[j].value, u0[j * ns]);
  rep.pass = rep.max_rel_deviation <= tol;
  return rep;
}

double pw_support_test(const TestFunction& f, const SpaceConfig& cfg, bool* zero_total) {
  SpectralData sd = spectral_table(f.source, cfg);
  double neg = 0.0, total = 0.0;
  const auto wq = cfg.xi.q_weights();
  for (size_t j = 0; j < sd.frequencies.size(); ++j) {
    const double mass = wq[j] * grid_l2_mass(cfg.x.geometry, sd.profiles[j]);
    total += mass;
    if (sd.frequencies[j].value < 0.0) neg += mass;
  }
  if (zero_total) *zero_total = total <= 0.0;
  if (total <= 0.0) return 0.0;
  return neg / total;
}

PWReport pw_condition_check(const SpaceConfig& cfg, std::span<const double> xi_probe,
                            double y0) {
  PWReport rep;
  rep.y0 = y0;
  bool all_neg_infinite = true;
  bool any_neg = false;

  std::vector<double> pos;
  std::vector<double> cond;
  for (double xi : xi_probe) {
    const ExtReal r = rho_numeric(xi, cfg.x, cfg.quad);
    if (xi < 0.0) {
      any_neg = true;
      if (!r.is_infinite()) all_neg_infinite = false;
      continue;
    }
    pos.push_back(xi);
    // e^{-2 pi y0 xi} / rho(xi), with 1/inf = 0.
    cond.push_back(r.is_infinite() ? 0.0
                                   : std::exp(-kTwoPi * y0 * xi) / r.value());
  }
  rep.rho_infinite_on_negatives = any_neg && all_neg_infinite;

  double sup = 0.0;
  size_t arg = 0;
  for (size_t i = 0; i < cond.size(); ++i) {
    if (cond[i] > sup) {
      sup = cond[i];
      arg = i;
    }
  }
  rep.sup_probe = sup;
  // A supremum attained at the end of a growing tail is reported as infinite:
  // the probe sequence gives no upper bound.
  bool growing_tail = cond.size() >= 3 && arg == cond.size() - 1;
  if (growing_tail) {
    for (size_t i = cond.size() - 3; i + 1 < cond.size(); ++i) {
      if (!(cond[i + 1] > cond[i])) growing_tail = false;
    }
  }
  rep.bdd_condition_sup = growing_tail ? ExtReal::infinite() : ExtReal(sup);
  return rep;
}

BoundednessProbe pw_boundedness_probe(const TestFunction& f, const SpaceConfig& cfg,
                                      double y1, std::span<const double> x_grid,
                                      std::span<const double> y_grid) {
  BoundednessProbe probe;
  probe.y1 = y1;
  if (cfg.x.geometry.kind == GeometryKind::Hyperbolic) {
    // Bounded fiber direction: there is no y -> +inf regime to probe.
    probe.applicable = false;
    return probe;
  }
  if (cfg.x.geometry.kind == GeometryKind::Elliptic) {
    probe.r0 = radial_from_fiber(y1);
  }
  double sup = 0.0;
  for (double y : y_grid) {
    if (!(y > y1)) continue;
    for (double x : x_grid) {
      sup = std::max(sup, std::abs(f.source.sampler(x, y)));
    }
  }
  probe.sup = sup;
  return probe;
}

PlancherelResult plancherel_test(const TestFunction& f, const SpaceConfig& cfg) {
  PlancherelResult res;
  SpaceConfig l2 = cfg;
  l2.x.p = 2.0;
  l2.q = 2.0;

  // Direct side: ||f||_{L^2(mu)}, the x-integral adaptive per fiber node.
  // Both sides share the fiber rule, so the comparison isolates the
  // Parseval identity in the group direction.
  const FiberGrid grid = make_fiber_grid(l2.x.geometry, l2.fiber);
  std::vector<double> xmass(grid.nodes.size());
  std::atomic<bool> diverged{false};
  parallel_for(grid.nodes.size(), l2.threads, [&](size_t i) {
    const double y = grid.nodes[i];
    auto mag2 = [&](double x) { return cplx(std::norm(f.source.sampler(x, y)), 0.0); };
    if (l2.x.geometry.discrete_dual()) {
      xmass[i] = integrate_periodic(mag2, l2.n_circle_samples).real();
    } else {
      const double W = f.source.window ? f.source.window(0.0) : 32.0;
      QuadResult r = integrate_interval(mag2, -W, W, l2.quad);
      if (r.diverged) diverged = true;
      xmass[i] = r.value.real();
    }
  });
  if (diverged) {
    res.diverged = true;
    return res;
  }
  double direct2 = 0.0;
  for (size_t i = 0; i < grid.nodes.size(); ++i) {
    direct2 += grid.weights[i] * fiber_density(l2.x.geometry, grid.nodes[i]) * xmass[i];
  }
  res.direct = std::sqrt(std::max(0.0, direct2));

  // Spectral side: mixed norm at p = q = 2 is exactly ||f_hat||_{L^2(mu_hat)}.
  const ExtReal spec = mixed_norm(spectral_table(f.source, l2), l2);
  if (spec.is_infinite()) {
    res.diverged = true;
    return res;
  }
  res.spectral = spec.value();
  res.rel_err = std::abs(res.direct - res.spectral) / std::max(res.direct, kRelErrFloor);
  return res;
}

NormReport isometry_report(const TestFunction& f, const SpaceConfig& cfg,
                           double tolerance) {
  const auto u0 = extract_u0_table(f, cfg, cfg.y_ref);
  return isometry_report(f.source, u0, cfg, tolerance);
}

}  // namespace mfn
