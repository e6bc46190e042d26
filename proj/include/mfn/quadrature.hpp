#pragma once

#include <complex>
#include <cstdint>
#include <type_traits>
#include <memory>
#include <span>
#include <vector>

namespace mfn {

using cplx = std::complex<double>;

// Non-owning callable view, cheap enough for tens of millions of samples.
// The referenced callable must outlive the view (immediate-call usage only).
template <class Sig>
class FnRef;

template <class R, class... Args>
class FnRef<R(Args...)> {
 public:
  template <class F>
    requires(!std::is_same_v<std::remove_cvref_t<F>, FnRef>)
  FnRef(F&& f) noexcept
      : obj_(const_cast<void*>(static_cast<const void*>(std::addressof(f)))),
        call_([](void* o, Args... a) -> R {
          return (*static_cast<std::remove_reference_t<F>*>(o))(a...);
        }) {}

  FnRef(const FnRef&) = default;
  FnRef& operator=(const FnRef&) = default;

  R operator()(Args... a) const { return call_(obj_, a...); }

 private:
  void* obj_;
  R (*call_)(void*, Args...);
};

using ComplexSampler = FnRef<cplx(double)>;

struct QuadConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_depth = 40;
  double divergence_cap = 1e12;
};

struct QuadResult {
  cplx value{0.0, 0.0};
  double abs_error_estimate = 0.0;
  std::int64_t evaluations = 0;
  bool diverged = false;
};

// 15-point Gauss-Legendre on [a, b]; exact for polynomial degree <= 29.
cplx gauss15(ComplexSampler f, double a, double b);

// Adaptive Gauss-Legendre with bisection over a caller-supplied initial
// partition. Edges must be strictly increasing.
QuadResult integrate_edges(ComplexSampler f, std::span<const double> edges,
                           const QuadConfig& cfg = {});

// Adaptive integral over [a, b]. The initial partition is geometrically
// graded toward both endpoints, so integrable power singularities at a or b
// (exponent > -1) converge without the sampler ever being evaluated there.
QuadResult integrate_interval(ComplexSampler f, double a, double b,
                              const QuadConfig& cfg = {});

// Integral over (0, inf) by windows [0, T], [T, 2T], ... with doubling spans.
// Stops once two consecutive windows contribute below abs_tol; flags
// divergence when window contributions grow three times in a row or any
// partial sum exceeds divergence_cap.
QuadResult integrate_halfline(ComplexSampler f, double decay_hint,
                              const QuadConfig& cfg = {});

// Uniform-mean rule for 1-periodic samplers: (1/n) sum f(k/n). Spectrally
// accurate for smooth periodic integrands.
cplx integrate_periodic(ComplexSampler f, int n);

// Geometrically graded edge set on [a, b]: `levels` panels shrinking by
// `ratio` toward each endpoint around the midpoint.
std::vector<double> graded_edges(double a, double b, int levels = 54,
                                 double ratio = 0.5);

}  // namespace mfn
