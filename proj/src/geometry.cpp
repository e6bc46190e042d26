#include "mfn/geometry.hpp"

#include <cmath>
#include <limits>

namespace mfn {

ModelGeometry ModelGeometry::parabolic(double lam) {
  if (!(lam > -1.0)) throw std::invalid_argument("parabolic lambda must be > -1");
  return {GeometryKind::Parabolic, lam};
}

ModelGeometry ModelGeometry::hyperbolic(double lam) {
  if (!(lam > -1.0)) throw std::invalid_argument("hyperbolic lambda must be > -1");
  return {GeometryKind::Hyperbolic, lam};
}

FiberDomain fiber_domain(const ModelGeometry& g) {
  switch (g.kind) {
    case GeometryKind::Elliptic:
    case GeometryKind::Parabolic:
      return {0.0, std::numeric_limits<double>::infinity()};
    case GeometryKind::Hyperbolic:
      return {0.0, M_PI};
  }
  return {};
}

double fiber_density(const ModelGeometry& g, double y) {
  const FiberDomain dom = fiber_domain(g);
  if (!(y > dom.lower) || !(y < dom.upper)) {
    throw std::domain_error("fiber_density: y outside the open fiber domain");
  }
  switch (g.kind) {
    case GeometryKind::Elliptic:
      return 4.0 * M_PI * std::exp(-4.0 * M_PI * y);
    case GeometryKind::Parabolic:
      return (g.lambda + 1.0) * std::pow(2.0 * y, g.lambda);
    case GeometryKind::Hyperbolic:
      return (g.lambda + 1.0) * std::pow(2.0, g.lambda) *
             std::pow(std::sin(y), g.lambda);
  }
  return 0.0;
}

cplx map_to_domain(const ModelGeometry& g, double x, double y) {
  switch (g.kind) {
    case GeometryKind::Elliptic:
      return std::exp(2.0 * M_PI * cplx(-y, x));
    case GeometryKind::Parabolic:
      return cplx(x, y);
    case GeometryKind::Hyperbolic:
      return std::exp(cplx(x, y));
  }
  return {};
}

double radial_from_fiber(double y) {
  if (!(y > 0.0)) throw std::domain_error("radial_from_fiber: y must be > 0");
  return std::exp(-2.0 * M_PI * y);
}

double fiber_from_radial(double r) {
  if (!(r > 0.0) || !(r < 1.0)) {
    throw std::domain_error("fiber_from_radial: r must lie in (0, 1)");
  }
  return -std::log(r) / (2.0 * M_PI);
}

}  // namespace mfn
