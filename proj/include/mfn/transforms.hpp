#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <vector>

#include "mfn/space_config.hpp"

namespace mfn {

// One fiber of the spectral table: values of u_hat(xi, .) on the fiber grid.
struct FiberProfile {
  std::shared_ptr<const FiberGrid> grid;
  std::vector<cplx> values;
};

// Table xi -> fiber profile of the half-Fourier (or Mellin) image.
// truncation_note estimates the q-th-power mass outside the xi window
// (continuous duals; kept at the L^2 scale for discrete ones).
struct SpectralData {
  std::vector<DualFrequency> frequencies;
  std::vector<FiberProfile> profiles;
  double truncation_note = 0.0;
};

using Sampler2 = std::function<cplx(double, double)>;
using PolarSampler = std::function<cplx(double, double)>;  // (r, y)

// A function on the model space together with what the transform engine needs
// to integrate it: window sizes for the continuous dual and the panel-width
// caps that resolve its own features.
struct SourceFunction {
  Sampler2 sampler;
  std::function<double(double)> window;  // half-window W(xi); continuous G only
  double feature_scale = 0.5;            // panel cap near x = 0
  double outer_scale = 4.0;              // panel cap away from the origin
};

// Fourier coefficient on the circle: uniform-mean rule with n_samples points.
// Requires the Nyquist margin n_samples > 2|xi| + 2.
cplx fourier_coeff_circle(const Sampler2& f, long xi, double y, int n_samples);

// Windowed line transform: integral over [-W, W] of f(x, y) e^{-2 pi i x xi}.
// For oscillatory integrands the window is extended by half-period marks and
// the partial integrals are binomially averaged, which suppresses the
// truncation boundary term by several orders of (2 pi xi W)^-1.
QuadResult fourier_slice_line(const Sampler2& f, double xi, double y, double window,
                              const QuadConfig& cfg, double feature_scale = 0.5,
                              double outer_scale = 4.0);

// Mellin transform slice: integral over (0, inf) of r^{-2 pi i xi + lam/2} f(r, y) dr,
// computed after the substitution r = e^t as a two-sided windowed line integral.
QuadResult mellin_slice(const PolarSampler& f, double xi, double y, double lambda,
                        const QuadConfig& cfg);

// Relative residual of the Mellin-Fourier relation
//   M f(xi, y) = e^{-i y (1 + lam/2)} F[T_lam f](xi, y).
// Returns the residual in `value.real()`; diverged propagates from either side.
QuadResult mellin_fourier_residual(const PolarSampler& f, double lambda, double xi,
                                   double y, const QuadConfig& cfg);

// Assembles u_hat over the configured frequency window and fiber grid.
SpectralData spectral_table(const SourceFunction& f, const SpaceConfig& cfg);

}  // namespace mfn
