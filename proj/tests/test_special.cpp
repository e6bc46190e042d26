#include "mfn/special.hpp"

#include <cmath>

#include "doctest.h"

using namespace mfn;

TEST_CASE("ln_gamma at small integers and half-integer") {
  CHECK(ln_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(ln_gamma(2.0) == doctest::Approx(0.0).epsilon(1e-14));
  // Gamma(1/2) = sqrt(pi)
  CHECK(ln_gamma(0.5) == doctest::Approx(0.57236494292470008707).epsilon(1e-13));
}

TEST_CASE("exp(ln_gamma) reproduces factorials exactly to 1e-12") {
  double fact = 1.0;
  for (int n = 1; n <= 20; ++n) {
    if (n > 1) fact *= double(n - 1);
    CHECK(std::exp(ln_gamma(double(n))) == doctest::Approx(fact).epsilon(1e-12));
  }
}

TEST_CASE("ln_gamma large argument") {
  // Reference value from 30-digit arithmetic.
  CHECK(ln_gamma(170.0) == doctest::Approx(701.43726380873708535).epsilon(1e-13));
}

TEST_CASE("ln_gamma rejects non-positive arguments") {
  CHECK_THROWS_AS(ln_gamma(0.0), GammaDomainError);
  CHECK_THROWS_AS(ln_gamma(-3.5), GammaDomainError);
}

TEST_CASE("abs_gamma on the imaginary shifted line matches |Gamma(1+iy)|") {
  // |Gamma(1+iy)|^2 = pi y / sinh(pi y)
  for (double y : {0.1, 1.0, 5.0, 2.0 * M_PI}) {
    const double expected = std::sqrt(M_PI * y / std::sinh(M_PI * y));
    CHECK(abs_gamma({1.0, y}) == doctest::Approx(expected).epsilon(1e-9));
    CHECK(abs_gamma({1.0, -y}) == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("abs_gamma acceptance points") {
  CHECK(abs_gamma({2.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(abs_gamma({1.0, 1.0}) ==
        doctest::Approx(std::sqrt(M_PI / std::sinh(M_PI))).epsilon(1e-10));
  const double y = 2.0 * M_PI;
  CHECK(abs_gamma({1.0, -y}) ==
        doctest::Approx(std::sqrt(2.0 * M_PI * M_PI / std::sinh(2.0 * M_PI * M_PI)))
            .epsilon(1e-10));
}

TEST_CASE("recurrence |Gamma(z+1)| = |z| |Gamma(z)| over a grid") {
  for (double re = 0.5; re <= 10.0; re += 1.9) {
    for (double im = -20.0; im <= 20.0; im += 4.1) {
      const double lhs = abs_gamma({re + 1.0, im});
      const double rhs = std::hypot(re, im) * abs_gamma({re, im});
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
  }
}

TEST_CASE("reflection region: |Gamma| left of the critical line") {
  // Gamma(-1/2) = -2 sqrt(pi)
  CHECK(abs_gamma({-0.5, 0.0}) == doctest::Approx(2.0 * std::sqrt(M_PI)).epsilon(1e-11));
}

TEST_CASE("abs_gamma pole detection") {
  CHECK_THROWS_AS(abs_gamma({0.0, 0.0}), GammaDomainError);
  CHECK_THROWS_AS(abs_gamma({-3.0, 0.0}), GammaDomainError);
  CHECK_NOTHROW(abs_gamma({-3.0, 0.5}));
}
