#include "mfn/spaces.hpp"

#include <cmath>

#include "mfn/special.hpp"

namespace mfn {
namespace {

constexpr double kTwoPi = 2.0 * M_PI;

double pow_abs(const cplx& v, double p) {
  if (p == 2.0) return std::norm(v);
  if (p == 1.0) return std::abs(v);
  return std::pow(std::abs(v), p);
}

}  // namespace

ExtReal x_norm(const FiberProfile& g, const XSpaceSpec& spec, const QuadConfig& cfg) {
  if (!g.grid) throw std::invalid_argument("x_norm: profile has no grid");
  double s = 0.0;
  const auto& grid = *g.grid;
  for (size_t i = 0; i < grid.nodes.size(); ++i) {
    s += grid.weights[i] * fiber_density(spec.geometry, grid.nodes[i]) *
         pow_abs(g.values[i], spec.p);
  }
  if (!std::isfinite(s) || s > cfg.divergence_cap) return ExtReal::infinite();
  return ExtReal(std::pow(s, 1.0 / spec.p));
}

ExtReal x_norm(const std::function<cplx(double)>& g, const XSpaceSpec& spec,
               const QuadConfig& cfg) {
  const FiberDomain dom = fiber_domain(spec.geometry);
  auto integrand = [&](double y) {
    return cplx(fiber_density(spec.geometry, y) * pow_abs(g(y), spec.p), 0.0);
  };
  QuadResult r;
  if (dom.unbounded()) {
    r = integrate_halfline(integrand, 1.0, cfg);
  } else {
    r = integrate_interval(integrand, dom.lower, dom.upper, cfg);
  }
  if (r.diverged || !(r.value.real() >= 0.0) || r.value.real() > cfg.divergence_cap) {
    return ExtReal::infinite();
  }
  return ExtReal(std::pow(r.value.real(), 1.0 / spec.p));
}

ExtReal rho_numeric(double xi, const XSpaceSpec& spec, const QuadConfig& cfg) {
  const double rate = kTwoPi * spec.p * xi;
  const FiberDomain dom = fiber_domain(spec.geometry);
  auto integrand = [&](double y) {
    return cplx(std::exp(-rate * y) * fiber_density(spec.geometry, y), 0.0);
  };
  QuadResult r;
  if (dom.unbounded()) {
    const double hint = spec.geometry.kind == GeometryKind::Elliptic
                            ? rate + 4.0 * M_PI
                            : std::max(rate, 0.5);
    r = integrate_halfline(integrand, hint, cfg);
  } else {
    r = integrate_interval(integrand, dom.lower, dom.upper, cfg);
  }
  if (r.diverged || !(r.value.real() >= 0.0) || r.value.real() > cfg.divergence_cap) {
    return ExtReal::infinite();
  }
  return ExtReal(std::pow(r.value.real(), 1.0 / spec.p));
}

ExtReal rho_closed_form(double xi, const XSpaceSpec& spec) {
  const double p = spec.p;
  const double lam = spec.geometry.lambda;
  switch (spec.geometry.kind) {
    case GeometryKind::Elliptic: {
      // int_0^1 r^{p xi} 2r dr = 2/(p xi + 2), finite iff p xi > -2.
      if (!(p * xi > -2.0)) return ExtReal::infinite();
      return ExtReal(std::pow(2.0 / (p * xi + 2.0), 1.0 / p));
    }
    case GeometryKind::Parabolic: {
      if (!(xi > 0.0)) return ExtReal::infinite();
      // rho^p = 2^lam Gamma(lam+2) / ((2 pi p xi)^{lam+1})
      const double ln_rho_p = lam * std::log(2.0) + ln_gamma(lam + 2.0) -
                              (lam + 1.0) * std::log(kTwoPi * p * xi);
      return ExtReal(std::exp(ln_rho_p / p));
    }
    case GeometryKind::Hyperbolic: {
      // rho^p = pi Gamma(lam+2) e^{-p pi^2 xi} / |Gamma((lam+2)/2 + i pi p xi)|^2
      const double ln_rho_p = std::log(M_PI) + ln_gamma(lam + 2.0) -
                              p * M_PI * M_PI * xi -
                              2.0 * ln_abs_gamma({(lam + 2.0) / 2.0, M_PI * p * xi});
      return ExtReal(std::exp(ln_rho_p / p));
    }
  }
  return ExtReal::infinite();
}

ExtReal rho_printed(double xi, const XSpaceSpec& spec) {
  const double p = spec.p;
  const double lam = spec.geometry.lambda;
  switch (spec.geometry.kind) {
    case GeometryKind::Elliptic:
      return rho_closed_form(xi, spec);
    case GeometryKind::Parabolic: {
      if (!(xi > 0.0)) return ExtReal::infinite();
      const double ln_rho = -(lam + 1.0) / p * std::log(xi) +
                            (lam * std::log(2.0) + ln_gamma(lam + 2.0) -
                             (lam + 1.0) * std::log(p)) / p;
      return ExtReal(std::exp(ln_rho));
    }
    case GeometryKind::Hyperbolic: {
      const double ln_rho =
          (std::log(M_PI) + ln_gamma(lam + 2.0) -
           ln_abs_gamma({(lam + 2.0) / 2.0, p * xi / 2.0})) / p -
          M_PI * xi / 2.0;
      return ExtReal(std::exp(ln_rho));
    }
  }
  return ExtReal::infinite();
}

Weight make_weight(const XSpaceSpec& spec, const QuadConfig& cfg) {
  return Weight{[spec, cfg](double xi) { return rho_numeric(xi, spec, cfg); }};
}

ExtReal mixed_norm(const SpectralData& sd, const SpaceConfig& cfg) {
  cfg.validate();
  const auto wq = cfg.xi.q_weights();
  if (sd.profiles.size() != wq.size()) {
    throw std::invalid_argument("mixed_norm: table does not match the xi window");
  }
  double acc = 0.0;
  for (size_t j = 0; j < sd.profiles.size(); ++j) {
    const ExtReal nj = x_norm(sd.profiles[j], cfg.x, cfg.quad);
    if (nj.is_infinite()) return ExtReal::infinite();
    acc += wq[j] * std::pow(nj.value(), cfg.q);
    if (acc > cfg.quad.divergence_cap) return ExtReal::infinite();
  }
  return ExtReal(std::pow(acc, 1.0 / cfg.q));
}

ExtReal weighted_spectral_norm(const std::vector<cplx>& u0, const Weight& rho,
                               const SpaceConfig& cfg) {
  cfg.validate();
  const auto freqs = cfg.xi.frequencies();
  const auto wq = cfg.xi.q_weights();
  if (u0.size() != freqs.size()) {
    throw std::invalid_argument("weighted_spectral_norm: u0 does not match the window");
  }
  double scale = 0.0;
  for (const cplx& v : u0) scale = std::max(scale, std::abs(v));
  const double support_tol = 1e-10 * scale;

  double acc = 0.0;
  for (size_t j = 0; j < freqs.size(); ++j) {
    const double mag = std::abs(u0[j]);
    const ExtReal r = rho(freqs[j].value);
    if (r.is_infinite()) {
      if (mag > support_tol) return ExtReal::infinite();
      continue;  // u0 vanishes where rho is infinite, by contract
    }
    acc += wq[j] * std::pow(mag, cfg.q) * std::pow(r.value(), cfg.q);
    if (acc > cfg.quad.divergence_cap) return ExtReal::infinite();
  }
  return ExtReal(std::pow(acc, 1.0 / cfg.q));
}

NormReport isometry_report(const SourceFunction& f, const std::vector<cplx>& u0,
                           const SpaceConfig& cfg, double tolerance) {
  NormReport rep;
  rep.tolerance = tolerance;
  SpectralData sd = spectral_table(f, cfg);
  rep.truncation_note = sd.truncation_note;
  rep.direct = mixed_norm(sd, cfg);
  rep.via_weight = weighted_spectral_norm(u0, make_weight(cfg.x, cfg.quad), cfg);
  if (rep.direct.is_infinite() || rep.via_weight.is_infinite()) {
    rep.rel_err = rep.direct == rep.via_weight ? 0.0 : 1.0;
    rep.pass = rep.direct == rep.via_weight;
    return rep;
  }
  rep.rel_err = std::abs(rep.direct.value() - rep.via_weight.value()) /
                std::max(rep.direct.value(), kRelErrFloor);
  rep.pass = rep.rel_err <= tolerance;
  return rep;
}

}  // namespace mfn
