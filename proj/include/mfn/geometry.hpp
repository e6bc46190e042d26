#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace mfn {

using cplx = std::complex<double>;

enum class GeometryKind { Elliptic, Parabolic, Hyperbolic };

// One of the three model geometries. `lambda` parametrizes the fiber measure
// for the half-plane models and must exceed -1; it is ignored for the disc.
struct ModelGeometry {
  GeometryKind kind = GeometryKind::Elliptic;
  double lambda = 0.0;

  static ModelGeometry elliptic() { return {GeometryKind::Elliptic, 0.0}; }
  static ModelGeometry parabolic(double lam);
  static ModelGeometry hyperbolic(double lam);

  // True when the dual group is Z (circle action) rather than R.
  bool discrete_dual() const { return kind == GeometryKind::Elliptic; }
};

struct FiberDomain {
  double lower = 0.0;
  double upper = 0.0;  // +inf for the half-line fibers
  bool unbounded() const { return !std::isfinite(upper); }
};

FiberDomain fiber_domain(const ModelGeometry& g);

// Density of the invariant fiber measure at an interior point y.
// Elliptic: 4*pi*e^{-4*pi*y}; parabolic: (lam+1)(2y)^lam on (0, inf);
// hyperbolic: (lam+1) 2^lam sin^lam(y) on (0, pi).
double fiber_density(const ModelGeometry& g, double y);

// Biholomorphism from model coordinates (x, y) into the classical domain.
cplx map_to_domain(const ModelGeometry& g, double x, double y);

// Radial change of variables for the disc model, r = e^{-2*pi*y}.
double radial_from_fiber(double y);
double fiber_from_radial(double r);

// Intertwiner between the half-plane (polar) and the strip:
// (T_lam f)(z) = e^{(lam/2+1) z} f(e^z) for z in the strip R x (0, pi).
template <class F>
cplx t_lambda_apply(F&& f, double lambda, cplx z) {
  return std::exp((lambda / 2.0 + 1.0) * z) * f(std::exp(z));
}

}  // namespace mfn
