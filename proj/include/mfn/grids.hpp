#pragma once

#include <vector>

#include "mfn/geometry.hpp"

namespace mfn {

// Frequency on the dual group: an integer index for the circle, a real
// frequency for the line.
struct DualFrequency {
  double value = 0.0;
  bool discrete = false;

  static DualFrequency integer(long n) { return {double(n), true}; }
  static DualFrequency real(double xi) { return {xi, false}; }
};

// Frequency window: an integer range for the disc, a uniform real grid for
// the half-plane models.
struct XiSpec {
  bool discrete = false;
  long n_min = 0, n_max = 0;                // discrete case
  double min = 0.0, max = 0.0, step = 0.0;  // continuous case

  static XiSpec integers(long n_min, long n_max);
  static XiSpec grid(double min, double max, double step);

  std::vector<DualFrequency> frequencies() const;
  // Trapezoid weights aligned with frequencies(); all ones for the disc.
  std::vector<double> q_weights() const;
};

struct FiberGridSpec {
  int n = 24;            // composite panel count
  double grading = 0.5;  // geometric ratio toward singular endpoints
  double span = 0.0;     // half-line truncation; 0 = derive from geometry
};

// Fixed quadrature rule over the open fiber domain: interior nodes with
// positive weights (composite Gauss-Legendre panels, geometrically graded
// toward the endpoints). The same nodes serve as the profile sampling grid.
struct FiberGrid {
  std::vector<double> nodes;
  std::vector<double> weights;
  double lo = 0.0;
  double hi = 0.0;  // truncation point for half-line fibers
};

FiberGrid make_fiber_grid(const ModelGeometry& g, const FiberGridSpec& spec);

}  // namespace mfn
