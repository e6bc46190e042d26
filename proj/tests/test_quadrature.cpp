#include "mfn/quadrature.hpp"

#include <cmath>

#include "doctest.h"

using namespace mfn;

TEST_CASE("single-panel Gauss-Legendre is exact through degree 29") {
  // int_0^1 x^d dx = 1/(d+1)
  for (int d : {5, 17, 29}) {
    auto f = [d](double x) { return cplx(std::pow(x, double(d)), 0.0); };
    const cplx v = gauss15(f, 0.0, 1.0);
    CHECK(v.real() == doctest::Approx(1.0 / double(d + 1)).epsilon(1e-13));
  }
}

TEST_CASE("integrate_interval basics") {
  QuadConfig cfg;
  auto one = [](double) { return cplx(1.0, 0.0); };
  CHECK(integrate_interval(one, 0.0, 1.0, cfg).value.real() ==
        doctest::Approx(1.0).epsilon(1e-13));

  // Hyperbolic weight at xi = 1, lambda = 0, p = 2.
  auto decay = [](double y) { return cplx(std::exp(-4.0 * M_PI * y), 0.0); };
  const double expected = (1.0 - std::exp(-4.0 * M_PI * M_PI)) / (4.0 * M_PI);
  CHECK(integrate_interval(decay, 0.0, M_PI, cfg).value.real() ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("integrate_interval endpoint singularity y^{-1/2}") {
  QuadConfig cfg;
  auto f = [](double y) { return cplx(1.0 / std::sqrt(y), 0.0); };
  QuadResult r = integrate_interval(f, 0.0, 1.0, cfg);
  CHECK(!r.diverged);
  CHECK(std::abs(r.value.real() - 2.0) < 1e-8);
}

TEST_CASE("integrate_halfline exponential and divergence cases") {
  QuadConfig cfg;
  auto density = [](double y) { return cplx(4.0 * M_PI * std::exp(-4.0 * M_PI * y), 0.0); };
  QuadResult r = integrate_halfline(density, 4.0 * M_PI, cfg);
  CHECK(!r.diverged);
  CHECK(r.value.real() == doctest::Approx(1.0).epsilon(1e-11));

  auto shifted = [](double y) { return cplx(std::exp(-4.0 * M_PI * y * 4.0), 0.0); };
  QuadResult r2 = integrate_halfline(shifted, 16.0 * M_PI, cfg);
  CHECK(r2.value.real() == doctest::Approx(1.0 / (16.0 * M_PI)).epsilon(1e-10));

  auto growing = [](double y) { return cplx(std::exp(4.0 * M_PI * y), 0.0); };
  CHECK(integrate_halfline(growing, 1.0, cfg).diverged);

  // Polynomial growth must also register as divergent.
  auto flat = [](double) { return cplx(1.0, 0.0); };
  CHECK(integrate_halfline(flat, 1.0, cfg).diverged);
}

TEST_CASE("integrate_periodic is the uniform mean") {
  auto one = [](double) { return cplx(1.0, 0.0); };
  CHECK(integrate_periodic(one, 16).real() == doctest::Approx(1.0).epsilon(1e-15));

  auto character = [](double x) { return std::exp(cplx(0.0, 2.0 * M_PI * 3.0 * x)); };
  CHECK(std::abs(integrate_periodic(character, 16)) < 1e-14);
}

TEST_CASE("periodic rule reproduces trig-polynomial coefficients below Nyquist") {
  // f(x) = 2 + e^{2 pi i 5 x} - 3 e^{-2 pi i 2 x}; coefficient at 5 is 1.
  auto f = [](double x) {
    return cplx(2.0, 0.0) + std::exp(cplx(0.0, 2.0 * M_PI * 5.0 * x)) -
           3.0 * std::exp(cplx(0.0, -2.0 * M_PI * 2.0 * x));
  };
  auto g = [&](double x) { return f(x) * std::exp(cplx(0.0, -2.0 * M_PI * 5.0 * x)); };
  CHECK(std::abs(integrate_periodic(g, 16) - cplx(1.0, 0.0)) < 1e-13);
}

TEST_CASE("monotone refinement: halving rel_tol never raises the error estimate") {
  for (auto f : {+[](double x) { return cplx(std::exp(-x * x), 0.0); },
                 +[](double x) { return cplx(std::cos(3.0 * x) / (1.0 + x * x), 0.0); },
                 +[](double x) { return cplx(std::exp(std::sin(x)), 0.0); }}) {
    double last = 1e300;
    for (double rel = 1e-4; rel >= 1e-12; rel *= 0.5) {
      QuadConfig cfg;
      cfg.rel_tol = rel;
      QuadResult r = integrate_interval(f, -2.0, 5.0, cfg);
      CHECK(r.abs_error_estimate <= last * (1.0 + 1e-12));
      last = r.abs_error_estimate;
    }
  }
}

TEST_CASE("divergence cap trips on blowing integrands") {
  QuadConfig cfg;
  auto f = [](double y) { return cplx(1.0 / (y * y), 0.0); };  // non-integrable at 0
  QuadResult r = integrate_interval(f, 0.0, 1.0, cfg);
  CHECK(r.diverged);
}
