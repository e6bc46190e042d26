#pragma once

#include <stdexcept>

#include "mfn/geometry.hpp"
#include "mfn/grids.hpp"
#include "mfn/quadrature.hpp"

namespace mfn {

// Fiber Banach space X = L^p(Y, nu) with nu induced by the geometry.
struct XSpaceSpec {
  double p = 2.0;
  ModelGeometry geometry;
};

// Everything a norm computation needs: the fiber space, the outer q-norm,
// the frequency window, the fiber quadrature grid, and quadrature tolerances.
struct SpaceConfig {
  XSpaceSpec x;
  double q = 2.0;
  XiSpec xi;
  FiberGridSpec fiber;
  QuadConfig quad;

  int n_circle_samples = 128;  // uniform-mean rule size on the circle
  double y_ref = 0.25;         // reference fiber slice for u0 extraction
  int threads = 1;

  void validate() const {
    if (!(x.p >= 1.0)) throw std::invalid_argument("p must be >= 1");
    if (!(q >= 1.0)) throw std::invalid_argument("q must be >= 1");
    if (x.geometry.kind != GeometryKind::Elliptic && xi.discrete) {
      throw std::invalid_argument("continuous geometry needs a real xi grid");
    }
    if (x.geometry.kind == GeometryKind::Elliptic && !xi.discrete) {
      throw std::invalid_argument("elliptic geometry needs an integer xi range");
    }
  }
};

}  // namespace mfn
