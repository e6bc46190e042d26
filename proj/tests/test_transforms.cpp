#include "mfn/transforms.hpp"

#include <cmath>

#include "doctest.h"
#include "mfn/catalog.hpp"
#include "mfn/special.hpp"

using namespace mfn;

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

SpaceConfig disc_config(long n_min = -4, long n_max = 8) {
  SpaceConfig cfg;
  cfg.x.geometry = ModelGeometry::elliptic();
  cfg.xi = XiSpec::integers(n_min, n_max);
  cfg.fiber.span = 8.0;
  return cfg;
}

}  // namespace

TEST_CASE("circle coefficients: orthogonality") {
  auto f = [](double x, double y) {
    return std::exp(cplx(0.0, kTwoPi * 3.0 * x)) * cplx(std::cos(y), 0.0);
  };
  const cplx on = fourier_coeff_circle(f, 3, 0.7, 16);
  CHECK(std::abs(on - cplx(std::cos(0.7), 0.0)) < 1e-13);
  CHECK(std::abs(fourier_coeff_circle(f, 2, 0.7, 16)) < 1e-14);
}

TEST_CASE("circle coefficients: disc monomial factorization") {
  // Pullback of w -> w^n at xi = n gives e^{-2 pi n y}.
  const long n = 4;
  auto u = [n](double x, double y) { return std::exp(kTwoPi * double(n) * cplx(-y, x)); };
  for (double y : {0.1, 0.5}) {
    const cplx v = fourier_coeff_circle(u, n, y, 64);
    CHECK(std::abs(v - cplx(std::exp(-kTwoPi * double(n) * y), 0.0)) < 1e-13);
  }
  CHECK(std::abs(fourier_coeff_circle(u, 3, 0.5, 64)) < 1e-15);
}

TEST_CASE("circle coefficients: anti-holomorphic support at xi = -1") {
  auto u = [](double x, double y) { return std::exp(kTwoPi * cplx(-y, -x)); };
  const cplx v = fourier_coeff_circle(u, -1, 0.3, 64);
  CHECK(std::abs(v - cplx(std::exp(-kTwoPi * 0.3), 0.0)) < 1e-14);
  for (long xi = 0; xi <= 4; ++xi) {
    CHECK(std::abs(fourier_coeff_circle(u, xi, 0.3, 64)) < 1e-15);
  }
}

TEST_CASE("circle coefficients: Nyquist precondition enforced") {
  auto f = [](double, double) { return cplx(1.0, 0.0); };
  CHECK_THROWS_AS(fourier_coeff_circle(f, 8, 0.1, 16), std::invalid_argument);
}

TEST_CASE("line slice: Gaussian self-duality") {
  auto f = [](double x, double) { return cplx(std::exp(-M_PI * x * x), 0.0); };
  for (double xi : {0.0, 0.5, 2.0}) {
    QuadResult r = fourier_slice_line(f, xi, 0.0, 7.0, {}, 0.4);
    CHECK(!r.diverged);
    CHECK(std::abs(r.value - cplx(std::exp(-M_PI * xi * xi), 0.0)) < 1e-12);
  }
}

TEST_CASE("line slice: residue oracle for the half-plane kernel") {
  // f(x, y) = (x + i(y+1))^{-2}; f_hat(xi, y) = -4 pi^2 xi e^{-2 pi xi (y+1)}
  // for xi > 0 and 0 for xi < 0 (contour closes in the empty half-plane).
  auto f = [](double x, double y) { return std::pow(cplx(x, y + 1.0), -2.0); };
  auto window = [](double xi) {
    return std::clamp(xi != 0.0 ? 2.0 / std::abs(xi) : 1200.0, 60.0, 1200.0);
  };
  for (double y : {0.0, 0.5}) {
    for (double xi : {0.25, 1.0, 2.0}) {
      QuadResult r = fourier_slice_line(f, xi, y, window(xi), {});
      const double expected = -4.0 * M_PI * M_PI * xi * std::exp(-kTwoPi * xi * (y + 1.0));
      CHECK(std::abs(r.value - cplx(expected, 0.0)) < 1e-9);
    }
  }
  QuadResult neg = fourier_slice_line(f, -1.0, 0.0, window(-1.0), {});
  CHECK(std::abs(neg.value) < 1e-8);
}

TEST_CASE("mellin slice: Gamma oracle for e^{-r}") {
  auto f = [](double r, double) { return cplx(std::exp(-r), 0.0); };
  QuadResult r0 = mellin_slice(f, 0.0, 0.0, 0.0, {});
  CHECK(std::abs(r0.value - cplx(1.0, 0.0)) < 1e-11);

  // Mellin of e^{-r} is Gamma(1 - 2 pi i xi): check the modulus at xi = 0.1.
  QuadResult r1 = mellin_slice(f, 0.1, 0.0, 0.0, {});
  CHECK(std::abs(std::abs(r1.value) - abs_gamma({1.0, -0.2 * M_PI})) < 1e-10);
}

TEST_CASE("mellin slice: rotated exponential against the frozen oracle") {
  // Mellin of e^{i r e^{iy}} at (xi, y) = (0.25, pi/3), lambda = 0 equals
  // Gamma(s) b^{-s}, s = 1 - pi i/2, b = e^{i(y - pi/2)}; value frozen from
  // 30-digit arithmetic.
  auto f = [](double r, double y) {
    return std::exp(cplx(0.0, 1.0) * r * std::exp(cplx(0.0, y)));
  };
  const cplx expected(0.4814595730866951849, 0.3687071255788765493);
  QuadResult r = mellin_slice(f, 0.25, M_PI / 3.0, 0.0, {});
  CHECK(std::abs(r.value - expected) < 1e-10);
}

TEST_CASE("mellin-fourier relation for e^{iw} and the annulus bump") {
  const auto hyp0 = ModelGeometry::hyperbolic(0.0);
  TestFunction expw = make_test_function("hyperbolic_exp", {}, hyp0);
  for (double lam : {0.0, 1.0}) {
    for (double xi : {0.0, 0.25}) {
      QuadResult r = mellin_fourier_residual(expw.polar, lam, xi, M_PI / 2.0, {});
      CHECK(!r.diverged);
      CHECK(r.value.real() < 1e-8);
    }
  }
  TestFunction bump = make_test_function("annulus_bump", {}, hyp0);
  for (double xi : {0.25, 1.0}) {
    for (double y : {1.0, 2.0}) {
      QuadResult r = mellin_fourier_residual(bump.polar, 0.0, xi, y, {});
      CHECK(!r.diverged);
      CHECK(r.value.real() < 1e-7);
    }
  }
}

TEST_CASE("derivative identity: transform of d/dx f equals 2 pi i xi f_hat") {
  // f(x, y) = sin(2 pi x) g(y); the x-derivative via a 5-point stencil.
  auto g = [](double y) { return std::exp(-y); };
  auto f = [&](double x, double y) { return cplx(std::sin(kTwoPi * x) * g(y), 0.0); };
  auto df = [&](double x, double y) {
    const double h = 5e-4;
    const cplx d = (8.0 * (f(x + h, y) - f(x - h, y)) - (f(x + 2 * h, y) - f(x - 2 * h, y))) /
                   (12.0 * h);
    return d;
  };
  const double y = 0.4;
  for (long xi : {1L, -1L}) {
    const cplx lhs = fourier_coeff_circle(df, xi, y, 32);
    const cplx rhs = cplx(0.0, kTwoPi * double(xi)) * fourier_coeff_circle(f, xi, y, 32);
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }
}

TEST_CASE("linearity of the circle transform") {
  auto f = [](double x, double y) { return std::exp(kTwoPi * cplx(-y, x)); };
  auto g = [](double x, double y) { return cplx(std::cos(kTwoPi * x) * y, 0.0); };
  const cplx alpha(0.7, -0.3);
  auto combo = [&](double x, double y) { return alpha * f(x, y) + g(x, y); };
  for (long xi : {0L, 1L, 2L}) {
    const cplx lhs = fourier_coeff_circle(combo, xi, 0.6, 32);
    const cplx rhs = alpha * fourier_coeff_circle(f, xi, 0.6, 32) +
                     fourier_coeff_circle(g, xi, 0.6, 32);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("conjugation symmetry for real-valued samplers") {
  auto f = [](double x, double y) {
    return cplx(std::cos(kTwoPi * x) + 0.3 * std::sin(kTwoPi * 2.0 * x) * y, 0.0);
  };
  for (long xi : {1L, 2L, 3L}) {
    const cplx plus = fourier_coeff_circle(f, xi, 0.8, 32);
    const cplx minus = fourier_coeff_circle(f, -xi, 0.8, 32);
    CHECK(std::abs(minus - std::conj(plus)) < 1e-12);
  }
}

TEST_CASE("spectral_table: disc monomial occupies a single frequency") {
  SpaceConfig cfg = disc_config();
  TestFunction f = make_test_function("disc_monomial", {{"n", 2}}, cfg.x.geometry);
  SpectralData sd = spectral_table(f.source, cfg);
  REQUIRE(sd.frequencies.size() == 13);
  for (size_t j = 0; j < sd.frequencies.size(); ++j) {
    double mx = 0.0;
    for (const cplx& v : sd.profiles[j].values) mx = std::max(mx, std::abs(v));
    if (lround(sd.frequencies[j].value) == 2) {
      CHECK(mx > 0.1);
    } else {
      CHECK(mx < 1e-13);
    }
  }
}

TEST_CASE("spectral_table: empty window reports the total energy") {
  SpaceConfig cfg = disc_config(1, 0);  // n_max < n_min: empty window
  TestFunction f = make_test_function("disc_monomial", {{"n", 0}}, cfg.x.geometry);
  SpectralData sd = spectral_table(f.source, cfg);
  CHECK(sd.frequencies.empty());
  CHECK(sd.profiles.empty());
  // |w^0| = 1, so the total energy is the full measure of the disc.
  CHECK(sd.truncation_note == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("spectral_table: parabolic kernel peaks near xi = 1/(2 pi)") {
  SpaceConfig cfg;
  cfg.x.geometry = ModelGeometry::parabolic(0.0);
  cfg.xi = XiSpec::grid(-0.5, 1.5, 0.05);
  cfg.fiber.n = 16;
  cfg.fiber.span = 60.0;
  TestFunction f = make_test_function("halfplane_kernel", {{"k", 2}}, cfg.x.geometry);
  SpectralData sd = spectral_table(f.source, cfg);

  // |u0(xi)| = 4 pi^2 xi e^{-2 pi xi} peaks at xi = 1/(2 pi) ~ 0.159.
  double best = 0.0, best_xi = -1.0;
  for (size_t j = 0; j < sd.frequencies.size(); ++j) {
    const double mag = std::abs(sd.profiles[j].values[0]);
    if (mag > best) {
      best = mag;
      best_xi = sd.frequencies[j].value;
    }
  }
  CHECK(best_xi == doctest::Approx(0.15).epsilon(0.35));
  CHECK(sd.truncation_note >= 0.0);
}
