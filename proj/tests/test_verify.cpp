#include "mfn/verify.hpp"

#include <cmath>

#include "doctest.h"
#include "mfn/catalog.hpp"

using namespace mfn;

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

SpaceConfig disc_config(long n_min = -4, long n_max = 12) {
  SpaceConfig cfg;
  cfg.x.geometry = ModelGeometry::elliptic();
  cfg.xi = XiSpec::integers(n_min, n_max);
  cfg.fiber.span = 8.0;
  return cfg;
}

SpaceConfig kernel_config() {
  SpaceConfig cfg;
  cfg.x.geometry = ModelGeometry::parabolic(0.0);
  cfg.xi = XiSpec::grid(-1.0, 2.0, 0.25);
  cfg.fiber.n = 16;
  cfg.fiber.span = 60.0;
  return cfg;
}

SpaceConfig strip_config() {
  SpaceConfig cfg;
  cfg.x.geometry = ModelGeometry::hyperbolic(0.0);
  cfg.xi = XiSpec::grid(-1.0, 1.0, 0.25);
  cfg.fiber.n = 16;
  return cfg;
}

}  // namespace

TEST_CASE("extract_u0: disc monomial is exactly one at its frequency") {
  SpaceConfig cfg = disc_config();
  TestFunction f = make_test_function("disc_monomial", {{"n", 4}}, cfg.x.geometry);
  for (double y : {0.1, 0.6, 1.2}) {
    const cplx u0 = extract_u0(f, cfg, DualFrequency::integer(4), y);
    CHECK(std::abs(u0 - cplx(1.0, 0.0)) < 1e-11);
  }
}

TEST_CASE("extract_u0: parabolic kernel matches the residue oracle") {
  SpaceConfig cfg = kernel_config();
  TestFunction f = make_test_function("halfplane_kernel", {{"k", 2}}, cfg.x.geometry);
  const cplx u0 = extract_u0(f, cfg, DualFrequency::real(1.0), 0.5);
  const cplx expected(-4.0 * M_PI * M_PI * std::exp(-kTwoPi), 0.0);
  CHECK(std::abs(u0 - expected) < 1e-8);
  CHECK(std::abs(u0 - f.u0_oracle(1.0)) < 1e-8);
}

TEST_CASE("extract_u0: hyperbolic e^{iw} against frozen Gamma values") {
  SpaceConfig cfg = strip_config();
  TestFunction f = make_test_function("hyperbolic_exp", {}, cfg.x.geometry);
  // Gamma(s) e^{i pi s / 2} at s = 1 - pi i / 2 and s = 1 - 2 pi i, frozen
  // from 30-digit arithmetic.
  const cplx oracle_025(-0.40709666134651751, 3.1151865470949686);
  const cplx oracle_1(-1.5333170115187575, 6.0932221809601381);
  for (double y : {M_PI / 4.0, M_PI / 2.0}) {
    CHECK(std::abs(extract_u0(f, cfg, DualFrequency::real(0.25), y) - oracle_025) < 1e-6);
  }
  CHECK(std::abs(extract_u0(f, cfg, DualFrequency::real(1.0), M_PI / 2.0) - oracle_1) < 1e-6);
}

TEST_CASE("extract_u0 is slice-independent for holomorphic entries") {
  // Slices stay shallow enough that the rescaled transform noise remains far
  // below the tolerance at the largest probed frequency.
  SpaceConfig cfg = disc_config();
  TestFunction f = make_test_function("disc_geometric", {{"a", 0.5}}, cfg.x.geometry);
  for (long n : {0L, 3L, 7L}) {
    const cplx a = extract_u0(f, cfg, DualFrequency::integer(n), 0.05);
    const cplx b = extract_u0(f, cfg, DualFrequency::integer(n), 0.15);
    const cplx c = extract_u0(f, cfg, DualFrequency::integer(n), 0.3);
    CHECK(std::abs(a - b) < 1e-8);
    CHECK(std::abs(b - c) < 1e-8);
    CHECK(std::abs(a - f.u0_oracle(double(n))) < 1e-8);
  }
}

TEST_CASE("factorization: disc monomials pass tightly") {
  SpaceConfig cfg = disc_config();
  const std::vector<double> slices{0.1, 0.5, 1.0};
  for (long n : {0L, 1L, 5L}) {
    TestFunction f = make_test_function("disc_monomial", {{"n", n}}, cfg.x.geometry);
    FactorizationReport rep = factorization_test(f, cfg, slices, 1e-8);
    CHECK(rep.pass);
    CHECK(rep.max_rel_deviation < 1e-10);
  }
}

TEST_CASE("factorization: anti-holomorphic conj(w) fails by an O(1) margin") {
  SpaceConfig cfg = disc_config();
  TestFunction f = make_test_function("disc_antiholo", {}, cfg.x.geometry);
  FactorizationReport rep = factorization_test(f, cfg, {{0.1, 0.5}}, 1e-6);
  CHECK(!rep.pass);
  CHECK(rep.max_rel_deviation > 0.1);
  CHECK(lround(rep.worst_xi) == -1);
}

TEST_CASE("factorization: fiber-dependent sampler fails") {
  SpaceConfig cfg = disc_config(-2, 4);
  TestFunction f;
  f.name = "inline";
  f.source.sampler = [](double x, double y) {
    return std::exp(cplx(0.0, kTwoPi * x)) * y;
  };
  FactorizationReport rep = factorization_test(f, cfg, {{0.3, 0.7}}, 1e-6);
  CHECK(!rep.pass);
}

TEST_CASE("factorization: parabolic kernel and hyperbolic exponential") {
  SpaceConfig kc = kernel_config();
  TestFunction kern = make_test_function("halfplane_kernel", {{"k", 2}}, kc.x.geometry);
  FactorizationReport rk = factorization_test(kern, kc, {{0.05, 0.15, 0.3}}, 1e-6);
  CHECK(rk.pass);
  CHECK(rk.informative_pairs > 0);

  SpaceConfig sc = strip_config();
  TestFunction expw = make_test_function("hyperbolic_exp", {}, sc.x.geometry);
  FactorizationReport rh =
      factorization_test(expw, sc, {{M_PI / 4.0, M_PI / 2.0, 3.0 * M_PI / 4.0}}, 1e-6);
  CHECK(rh.pass);
  CHECK(rh.informative_pairs > 0);
}

TEST_CASE("pw_support: ratios bracket {0, 1} for monomial vs conjugate") {
  SpaceConfig cfg = disc_config();
  TestFunction mono = make_test_function("disc_monomial", {{"n", 4}}, cfg.x.geometry);
  TestFunction anti = make_test_function("disc_antiholo", {}, cfg.x.geometry);
  const double r_mono = pw_support_test(mono, cfg);
  const double r_anti = pw_support_test(anti, cfg);
  CHECK(r_mono < 1e-12);
  CHECK(r_anti > 1.0 - 1e-12);
  CHECK(r_mono + (1.0 - r_anti) < 1e-10);
}

TEST_CASE("pw_support: zero-total guard") {
  SpaceConfig cfg = disc_config(6, 9);  // window misses all the mass
  TestFunction f = make_test_function("disc_monomial", {{"n", 1}}, cfg.x.geometry);
  bool zero_total = false;
  const double ratio = pw_support_test(f, cfg, &zero_total);
  CHECK(ratio == 0.0);
  // The n = 1 fiber lies outside [6, 9]; everything measured is roundoff.
  CHECK(!std::isnan(ratio));
}

TEST_CASE("pw_condition_check: parabolic conditions hold for y0 > 0") {
  SpaceConfig cfg = kernel_config();
  std::vector<double> probe = {-2.0, -1.0, -0.5};
  for (int i = 0; i <= 40; ++i) probe.push_back(0.25 * double(i));
  PWReport rep = pw_condition_check(cfg, probe, 0.1);
  CHECK(rep.rho_infinite_on_negatives);
  CHECK(!rep.bdd_condition_sup.is_infinite());
}

TEST_CASE("pw_condition_check: elliptic p=1 counterexample and y0=0 blowup") {
  SpaceConfig cfg = disc_config();
  cfg.x.p = 1.0;
  PWReport rep = pw_condition_check(cfg, {{-1.0, 0.0, 1.0, 2.0, 3.0}}, 0.1);
  CHECK(!rep.rho_infinite_on_negatives);  // rho(-1) = 2 is finite

  SpaceConfig cfg2 = disc_config();
  std::vector<double> probe;
  for (int i = 0; i <= 30; ++i) probe.push_back(double(i));
  PWReport grow = pw_condition_check(cfg2, probe, 0.0);
  CHECK(grow.bdd_condition_sup.is_infinite());  // sup sqrt(xi+1) over the tail
  PWReport damped = pw_condition_check(cfg2, probe, 0.1);
  CHECK(!damped.bdd_condition_sup.is_infinite());
}

TEST_CASE("boundedness probe: geometric bound on the disc") {
  SpaceConfig cfg = disc_config();
  TestFunction f = make_test_function("disc_geometric", {{"a", 0.5}}, cfg.x.geometry);
  const double r0 = 0.4;
  const double y1 = -std::log(r0) / kTwoPi;
  std::vector<double> xg, yg;
  for (int i = 0; i < 64; ++i) xg.push_back(double(i) / 64.0);
  for (int j = 1; j <= 16; ++j) yg.push_back(y1 + 0.05 * double(j));
  BoundednessProbe probe = pw_boundedness_probe(f, cfg, y1, xg, yg);
  CHECK(probe.applicable);
  REQUIRE(probe.r0.has_value());
  CHECK(*probe.r0 == doctest::Approx(r0).epsilon(1e-12));
  CHECK(probe.sup <= 1.25 + 1e-6);

  TestFunction mono = make_test_function("disc_monomial", {{"n", 3}}, cfg.x.geometry);
  BoundednessProbe p3 = pw_boundedness_probe(mono, cfg, y1, xg, yg);
  CHECK(p3.sup <= std::pow(r0, 3.0) + 1e-9);
}

TEST_CASE("boundedness probe refuses on the hyperbolic model") {
  SpaceConfig cfg = strip_config();
  TestFunction f = make_test_function("hyperbolic_exp", {}, cfg.x.geometry);
  BoundednessProbe probe = pw_boundedness_probe(f, cfg, 0.5, {{0.0}}, {{1.0}});
  CHECK(!probe.applicable);
}

TEST_CASE("plancherel: single circle character") {
  SpaceConfig cfg = disc_config();
  TestFunction f = make_test_function("halfplane_gaussian_bump", {}, cfg.x.geometry);
  PlancherelResult res = plancherel_test(f, cfg);
  CHECK(!res.diverged);
  CHECK(res.rel_err < 1e-10);
}
