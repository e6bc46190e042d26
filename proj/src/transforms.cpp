#include "mfn/transforms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "mfn/parallel.hpp"

namespace mfn {
namespace {

constexpr double kTwoPi = 2.0 * M_PI;

// Gauss-Legendre 15 abscissae/weights in ascending order, matching grids.cpp.
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

struct OscPartition {
  std::vector<double> core;                 // edges of [-W, W]
  std::vector<std::vector<double>> incs;    // per mark: edges of [W_{j-1}, W_j]
  int marks = 1;
};

// Uniform edge list over [a, b] with width at most h.
std::vector<double> uniform_edges(double a, double b, double h) {
  const int n = std::max(1, int(std::ceil((b - a) / h - 1e-9)));
  std::vector<double> e(n + 1);
  for (int i = 0; i <= n; ++i) e[i] = a + (b - a) * double(i) / double(n);
  return e;
}

// Two-zone partition of [-W, W]: fine panels in the central feature zone,
// wider ones outside, both capped by the oscillation quarter-period.
std::vector<double> core_edges(double W, double xi, double feature, double outer) {
  const double hosc = xi != 0.0 ? 1.0 / (4.0 * std::abs(xi)) : W;
  const double hc = std::min(feature, hosc);
  const double ho = std::min(outer, hosc);
  const double Z = std::min(W, 8.0);
  std::vector<double> edges;
  if (Z < W) {
    auto left = uniform_edges(-W, -Z, ho);
    auto mid = uniform_edges(-Z, Z, hc);
    auto right = uniform_edges(Z, W, ho);
    edges = left;
    edges.insert(edges.end(), mid.begin() + 1, mid.end());
    edges.insert(edges.end(), right.begin() + 1, right.end());
  } else {
    edges = uniform_edges(-W, W, hc);
  }
  return edges;
}

OscPartition make_partition(double W, double xi, double feature, double outer,
                            int marks_wanted) {
  OscPartition p;
  const double ax = std::abs(xi);
  p.marks = (ax * W >= 2.0 && ax > 0.0) ? marks_wanted : 1;
  p.core = core_edges(W, xi, feature, outer);
  const double half_period = p.marks > 1 ? 1.0 / (2.0 * ax) : 0.0;
  double prev = W;
  for (int j = 1; j < p.marks; ++j) {
    const double next = W + j * half_period;
    p.incs.push_back(uniform_edges(prev, next, half_period / 2.0));
    prev = next;
  }
  return p;
}

// Binomial weights (Euler averaging) over the window marks.
std::vector<double> mark_weights(int m) {
  std::vector<double> w(m, 1.0);
  for (int i = 1; i < m; ++i) w[i] = w[i - 1] * double(m - i) / double(i);
  double s = 0.0;
  for (double v : w) s += v;
  for (double& v : w) v /= s;
  return w;
}

QuadResult osc_line(const std::function<cplx(double)>& h, double xi, double W,
                    double feature, double outer, const QuadConfig& cfg,
                    int marks_wanted = 10) {
  const auto part = make_partition(W, xi, feature, outer, marks_wanted);
  auto g = [&](double x) { return h(x) * std::exp(cplx(0.0, -kTwoPi * x * xi)); };
  QuadResult core = integrate_edges(g, part.core, cfg);
  if (part.marks == 1) return core;

  std::vector<cplx> partials;
  partials.reserve(part.marks);
  partials.push_back(core.value);
  QuadResult acc = core;
  for (const auto& inc_edges : part.incs) {
    QuadResult right = integrate_edges(g, inc_edges, cfg);
    std::vector<double> neg(inc_edges.rbegin(), inc_edges.rend());
    for (double& e : neg) e = -e;
    QuadResult left = integrate_edges(g, neg, cfg);
    acc.value += right.value + left.value;
    acc.abs_error_estimate += right.abs_error_estimate + left.abs_error_estimate;
    acc.evaluations += right.evaluations + left.evaluations;
    acc.diverged = acc.diverged || right.diverged || left.diverged;
    partials.push_back(acc.value);
  }
  const auto bw = mark_weights(part.marks);
  cplx averaged(0.0, 0.0);
  for (int j = 0; j < part.marks; ++j) averaged += bw[j] * partials[j];
  QuadResult out = acc;
  out.value = averaged;
  out.abs_error_estimate += std::abs(partials.back() - averaged);
  return out;
}

// Two-sided windowed line integral with doubling spans, for integrands that
// decay in both directions (Mellin in the log variable, strip transforms).
QuadResult doubling_line(const std::function<cplx(double)>& g, double xi,
                         const QuadConfig& cfg) {
  const double h = std::min(0.5, xi != 0.0 ? 1.0 / (4.0 * std::abs(xi)) : 0.5);
  QuadResult total;
  double t = 4.0;
  QuadResult first = integrate_edges(g, uniform_edges(-t, t, h), cfg);
  total = first;
  if (total.diverged) return total;
  for (int side = 0; side < 2; ++side) {
    double lo = t;
    int tiny = 0, grow = 0;
    double last = -1.0;
    for (int k = 0; k < 32; ++k) {
      const double hi = lo * 2.0;
      auto edges = uniform_edges(side == 0 ? lo : -hi, side == 0 ? hi : -lo, h);
      QuadResult w = integrate_edges(g, edges, cfg);
      total.value += w.value;
      total.abs_error_estimate += w.abs_error_estimate;
      total.evaluations += w.evaluations;
      const double mag = std::abs(w.value);
      if (w.diverged || mag > cfg.divergence_cap ||
          std::abs(total.value) > cfg.divergence_cap) {
        total.diverged = true;
        return total;
      }
      grow = (last >= 0.0 && mag > last) ? grow + 1 : 0;
      if (grow >= 3) {
        total.diverged = true;
        return total;
      }
      tiny = (mag < cfg.abs_tol) ? tiny + 1 : 0;
      if (tiny >= 2) break;
      last = mag;
      lo = hi;
    }
  }
  return total;
}

double fiber_mass_l2(const ModelGeometry& geo, const FiberGrid& grid,
                     const std::vector<cplx>& v) {
  double s = 0.0;
  for (size_t i = 0; i < grid.nodes.size(); ++i) {
    s += grid.weights[i] * fiber_density(geo, grid.nodes[i]) * std::norm(v[i]);
  }
  return s;
}

}  // namespace

cplx fourier_coeff_circle(const Sampler2& f, long xi, double y, int n_samples) {
  if (n_samples <= 2 * std::labs(xi) + 2) {
    throw std::invalid_argument("fourier_coeff_circle: n_samples below Nyquist margin");
  }
  cplx s(0.0, 0.0);
  for (int k = 0; k < n_samples; ++k) {
    const double x = double(k) / double(n_samples);
    s += f(x, y) * std::exp(cplx(0.0, -kTwoPi * x * double(xi)));
  }
  return s / double(n_samples);
}

QuadResult fourier_slice_line(const Sampler2& f, double xi, double y, double window,
                              const QuadConfig& cfg, double feature_scale,
                              double outer_scale) {
  auto h = [&](double x) { return f(x, y); };
  return osc_line(h, xi, window, feature_scale, outer_scale, cfg);
}

QuadResult mellin_slice(const PolarSampler& f, double xi, double y, double lambda,
                        const QuadConfig& cfg) {
  auto g = [&](double t) {
    return std::exp((lambda / 2.0 + 1.0) * t) * f(std::exp(t), y) *
           std::exp(cplx(0.0, -kTwoPi * xi * t));
  };
  return doubling_line(g, xi, cfg);
}

QuadResult mellin_fourier_residual(const PolarSampler& f, double lambda, double xi,
                                   double y, const QuadConfig& cfg) {
  QuadResult mel = mellin_slice(f, xi, y, lambda, cfg);

  // Fourier route: transform of T_lam f on the strip at height y.
  auto strip = [&](double x) {
    const cplx z(x, y);
    return std::exp((lambda / 2.0 + 1.0) * z) * f(std::exp(x), y) *
           std::exp(cplx(0.0, -kTwoPi * xi * x));
  };
  QuadResult fou = doubling_line(strip, xi, cfg);

  QuadResult out;
  out.evaluations = mel.evaluations + fou.evaluations;
  out.diverged = mel.diverged || fou.diverged;
  const cplx phase = std::exp(cplx(0.0, -y * (1.0 + lambda / 2.0)));
  const double floor = 1e-290;
  const double resid =
      std::abs(mel.value - phase * fou.value) / std::max(std::abs(mel.value), floor);
  out.value = cplx(resid, 0.0);
  out.abs_error_estimate = mel.abs_error_estimate + fou.abs_error_estimate;
  return out;
}

SpectralData spectral_table(const SourceFunction& f, const SpaceConfig& cfg) {
  cfg.validate();
  const auto freqs = cfg.xi.frequencies();
  auto grid = std::make_shared<const FiberGrid>(
      make_fiber_grid(cfg.x.geometry, cfg.fiber));
  const size_t ny = grid->nodes.size();

  SpectralData out;
  out.frequencies = freqs;
  out.profiles.assign(freqs.size(), FiberProfile{});

  if (freqs.empty()) {
    // Degenerate window: report the total energy as the missed mass.
    double total = 0.0;
    if (cfg.x.geometry.discrete_dual()) {
      std::vector<cplx> col(ny);
      for (size_t i = 0; i < ny; ++i) {
        auto mag2 = [&](double x) {
          return cplx(std::norm(f.sampler(x, grid->nodes[i])), 0.0);
        };
        col[i] = integrate_periodic(mag2, cfg.n_circle_samples);
      }
      for (size_t i = 0; i < ny; ++i) {
        total += grid->weights[i] * fiber_density(cfg.x.geometry, grid->nodes[i]) *
                 col[i].real();
      }
    } else {
      const double W = f.window ? f.window(0.0) : 32.0;
      for (size_t i = 0; i < ny; ++i) {
        const double yv = grid->nodes[i];
        auto mag2 = [&](double x) { return cplx(std::norm(f.sampler(x, yv)), 0.0); };
        QuadResult r = integrate_interval(mag2, -W, W, cfg.quad);
        total += grid->weights[i] * fiber_density(cfg.x.geometry, yv) * r.value.real();
      }
    }
    out.truncation_note = total;
    return out;
  }

  if (cfg.x.geometry.discrete_dual()) {
    // Shared sample columns + an exact root-of-unity table: the phase
    // e^{-2 pi i n k / N} is table[(n k) mod N], no drift across n.
    const int N = cfg.n_circle_samples;
    const long max_abs = std::max(std::labs(cfg.xi.n_min), std::labs(cfg.xi.n_max));
    if (N <= 2 * max_abs + 2) {
      throw std::invalid_argument("spectral_table: n_circle_samples below Nyquist");
    }
    std::vector<cplx> root(N);
    for (int k = 0; k < N; ++k) {
      root[k] = std::exp(cplx(0.0, -kTwoPi * double(k) / double(N)));
    }
    std::vector<std::vector<cplx>> samples(ny, std::vector<cplx>(N));
    parallel_for(ny, cfg.threads, [&](size_t i) {
      for (int k = 0; k < N; ++k) {
        samples[i][k] = f.sampler(double(k) / double(N), grid->nodes[i]);
      }
    });
    parallel_for(freqs.size(), cfg.threads, [&](size_t j) {
      const long n = lround(freqs[j].value);
      FiberProfile prof;
      prof.grid = grid;
      prof.values.resize(ny);
      for (size_t i = 0; i < ny; ++i) {
        cplx s(0.0, 0.0);
        for (int k = 0; k < N; ++k) {
          const long idx = ((n * k) % N + N) % N;
          s += samples[i][k] * root[idx];
        }
        prof.values[i] = s / double(N);
      }
      out.profiles[j] = std::move(prof);
    });
  } else {
    if (!f.window) throw std::invalid_argument("spectral_table: source needs a window");
    parallel_for(freqs.size(), cfg.threads, [&](size_t j) {
      const double xi = freqs[j].value;
      const double W = f.window(xi);
      const auto part = make_partition(W, xi, f.feature_scale, f.outer_scale, 10);
      const auto bw = mark_weights(part.marks);

      // Panel tables shared across fiber nodes: per panel a center phase and
      // per distinct half-width a weighted abscissa-phase table.
      struct Panel {
        double c, h;
        cplx phase;
        int tbl;
        int region;  // 0 = core, 1.. = mark increments
      };
      std::vector<Panel> panels;
      std::vector<double> hs;
      std::vector<std::array<cplx, 15>> tables;
      auto add_edges = [&](const std::vector<double>& e, int region) {
        for (size_t i = 0; i + 1 < e.size(); ++i) {
          Panel p;
          p.c = 0.5 * (e[i] + e[i + 1]);
          p.h = 0.5 * (e[i + 1] - e[i]);
          p.phase = std::exp(cplx(0.0, -kTwoPi * xi * p.c));
          p.region = region;
          int t = -1;
          for (size_t k = 0; k < hs.size(); ++k) {
            if (std::abs(hs[k] - p.h) < 1e-12 * p.h) { t = int(k); break; }
          }
          if (t < 0) {
            std::array<cplx, 15> tbl;
            int idx = 0;
            for (int i2 = 7; i2 >= 1; --i2) {
              tbl[idx++] = kW15[i2] * std::exp(cplx(0.0, kTwoPi * xi * p.h * kX15[i2]));
            }
            tbl[idx++] = kW15[0] * cplx(1.0, 0.0);
            for (int i2 = 1; i2 <= 7; ++i2) {
              tbl[idx++] = kW15[i2] * std::exp(cplx(0.0, -kTwoPi * xi * p.h * kX15[i2]));
            }
            hs.push_back(p.h);
            tables.push_back(tbl);
            t = int(hs.size()) - 1;
          }
          p.tbl = t;
          panels.push_back(p);
        }
      };
      add_edges(part.core, 0);
      for (size_t m = 0; m < part.incs.size(); ++m) {
        add_edges(part.incs[m], int(m) + 1);
        std::vector<double> neg(part.incs[m].rbegin(), part.incs[m].rend());
        for (double& e : neg) e = -e;
        add_edges(neg, int(m) + 1);
      }

      FiberProfile prof;
      prof.grid = grid;
      prof.values.resize(ny);
      std::vector<double> xs(15);
      for (size_t i = 0; i < ny; ++i) {
        const double yv = grid->nodes[i];
        std::vector<cplx> region_sum(part.marks, cplx(0.0, 0.0));
        for (const Panel& p : panels) {
          const auto& tbl = tables[size_t(p.tbl)];
          int idx = 0;
          cplx s(0.0, 0.0);
          for (int i2 = 7; i2 >= 1; --i2) {
            s += f.sampler(p.c - p.h * kX15[i2], yv) * tbl[idx++];
          }
          s += f.sampler(p.c, yv) * tbl[idx++];
          for (int i2 = 1; i2 <= 7; ++i2) {
            s += f.sampler(p.c + p.h * kX15[i2], yv) * tbl[idx++];
          }
          region_sum[size_t(p.region)] += p.h * p.phase * s;
        }
        cplx run(0.0, 0.0), avg(0.0, 0.0);
        for (int m = 0; m < part.marks; ++m) {
          run += region_sum[size_t(m)];
          avg += bw[size_t(m)] * run;
        }
        prof.values[i] = avg;
      }
      out.profiles[j] = std::move(prof);
    });
  }

  // Window-truncation estimate from the two outermost bins on each side,
  // extrapolated geometrically when they decay.
  auto bin_mass = [&](size_t j) {
    return fiber_mass_l2(cfg.x.geometry, *grid, out.profiles[j].values);
  };
  const size_t nf = freqs.size();
  double note = 0.0;
  if (nf >= 2) {
    const double wq = cfg.xi.discrete ? 1.0 : cfg.xi.step;
    auto side_tail = [&](size_t last, size_t prev) {
      const double m1 = bin_mass(last) * wq;
      const double m0 = bin_mass(prev) * wq;
      if (m0 > 0.0 && m1 < m0) {
        const double r = m1 / m0;
        return m1 * r / (1.0 - r);
      }
      return m1;
    };
    note = side_tail(nf - 1, nf - 2) + side_tail(0, 1);
  }
  out.truncation_note = note;
  return out;
}

}  // namespace mfn
