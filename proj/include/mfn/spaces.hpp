#pragma once

#include <functional>
#include <optional>
#include <string>

#include "mfn/extreal.hpp"
#include "mfn/transforms.hpp"

namespace mfn {

// Weight rho as an extended-real function of frequency.
struct Weight {
  std::function<ExtReal(double)> evaluator;
  ExtReal operator()(double xi) const { return evaluator(xi); }
};

// Result of comparing the two independently computed norm routes.
struct NormReport {
  ExtReal direct;
  ExtReal via_weight;
  double rel_err = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double truncation_note = 0.0;
};

// Relative-error floor: avoids 0/0 on identically-zero cases without ever
// masking a real discrepancy.
inline constexpr double kRelErrFloor = 1e-290;

// L^p(nu) norm of a materialized fiber profile over its fixed grid.
ExtReal x_norm(const FiberProfile& g, const XSpaceSpec& spec,
               const QuadConfig& cfg);

// L^p(nu) norm of a sampler by adaptive quadrature over the fiber domain,
// with divergence encoded as Infinite.
ExtReal x_norm(const std::function<cplx(double)>& g, const XSpaceSpec& spec,
               const QuadConfig& cfg);

// The weight rho(xi) = || e^{-2 pi xi .} ||_X by direct quadrature of the
// defining integral. This value is the toolkit's authoritative rho.
ExtReal rho_numeric(double xi, const XSpaceSpec& spec, const QuadConfig& cfg);

// Closed forms derived from the fiber integrals (gamma-function based for the
// half-plane models); they agree with rho_numeric to quadrature accuracy.
ExtReal rho_closed_form(double xi, const XSpaceSpec& spec);

// The closed forms exactly as printed in the source material; for the
// parabolic and hyperbolic models these differ from the quadrature value by
// convention-dependent constant factors, so they are reported, not asserted.
ExtReal rho_printed(double xi, const XSpaceSpec& spec);

Weight make_weight(const XSpaceSpec& spec, const QuadConfig& cfg);

// Mixed norm: q-sum (discrete dual) or trapezoid q-integral (continuous dual)
// of the fiber norms of a spectral table.
ExtReal mixed_norm(const SpectralData& sd, const SpaceConfig& cfg);

// Weighted spectral norm of a boundary density table u0 aligned with the
// frequency window: (sum or integral of |u0|^q rho^q)^(1/q). Infinite when
// u0 has mass above tolerance where rho is infinite.
ExtReal weighted_spectral_norm(const std::vector<cplx>& u0, const Weight& rho,
                               const SpaceConfig& cfg);

// Both routes of the isometry: the mixed norm of the measured spectral table
// against the weighted norm of a boundary density table aligned with the
// frequency window (extraction is the caller's job; see verify::extract_u0).
NormReport isometry_report(const SourceFunction& f, const std::vector<cplx>& u0,
                           const SpaceConfig& cfg, double tolerance);

}  // namespace mfn
