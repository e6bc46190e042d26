#include "mfn/config.hpp"

#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "mfn/catalog.hpp"
#include "mfn/report.hpp"
#include "mfn/suites.hpp"

using namespace mfn;
using nlohmann::json;

TEST_CASE("config defaults and geometry selection") {
  RunConfig rc = default_config();
  apply_json(rc, json::parse(R"({"geometry":"parabolic","lambda":1.0,"p":2,"q":2})"));
  finalize_defaults(rc);
  CHECK(rc.geometry.kind == GeometryKind::Parabolic);
  CHECK(rc.geometry.lambda == 1.0);
  CHECK(!rc.xi.discrete);
  CHECK(!rc.y_slices.empty());
}

TEST_CASE("config rejects invalid exponents and geometries") {
  RunConfig rc = default_config();
  CHECK_THROWS_AS(apply_json(rc, json::parse(R"({"p":0.5})")), ConfigError);
  CHECK_THROWS_AS(apply_json(rc, json::parse(R"({"q":0})")), ConfigError);
  CHECK_THROWS_AS(apply_json(rc, json::parse(R"({"geometry":"sphere"})")), ConfigError);
  CHECK_THROWS_AS(apply_json(rc, json::parse(R"({"geometry":"parabolic","lambda":-2})")),
                  ConfigError);
}

TEST_CASE("xi window parsing, both flavors") {
  RunConfig rc = default_config();
  apply_json(rc, json::parse(R"({"xi":{"n_min":-3,"n_max":5}})"));
  CHECK(rc.xi.discrete);
  CHECK(rc.xi.frequencies().size() == 9);

  RunConfig rc2 = default_config();
  apply_json(rc2, json::parse(
      R"({"geometry":"parabolic","lambda":0,"xi":{"min":0.0,"max":1.0,"step":0.25}})"));
  const auto freqs = rc2.xi.frequencies();
  REQUIRE(freqs.size() == 5);
  CHECK(freqs[2].value == doctest::Approx(0.5));

  // Mismatched window type is rejected when the space is assembled.
  RunConfig rc3 = default_config();
  apply_json(rc3, json::parse(R"({"geometry":"parabolic","lambda":0,"xi":{"n_min":0,"n_max":4}})"));
  CHECK_THROWS_AS((void)rc3.space(), std::invalid_argument);
}

TEST_CASE("function selector with parameters") {
  RunConfig rc = default_config();
  apply_json(rc, json::parse(R"({"function":{"name":"disc_monomial","n":3}})"));
  CHECK(rc.function_name == "disc_monomial");
  CHECK(rc.function_params["n"] == 3);
}

TEST_CASE("trapezoid weights halve the endpoints") {
  const XiSpec grid = XiSpec::grid(0.0, 1.0, 0.25);
  const auto w = grid.q_weights();
  REQUIRE(w.size() == 5);
  CHECK(w.front() == doctest::Approx(0.125));
  CHECK(w[2] == doctest::Approx(0.25));
  CHECK(w.back() == doctest::Approx(0.125));
}

TEST_CASE("fmt17 round-trips doubles") {
  for (double v : {1.0 / 3.0, 0.1, 6.62607015e-34, -2.718281828459045}) {
    const std::string s = fmt17(v);
    CHECK(std::stod(s) == v);
  }
}

TEST_CASE("suite runner: unknown suite is a config error") {
  RunConfig rc = default_config();
  finalize_defaults(rc);
  CHECK_THROWS_AS(run_verify_suite(rc, "nonsense"), ConfigError);
}

TEST_CASE("catalog listing is stable and complete") {
  const auto& entries = catalog_entries();
  REQUIRE(entries.size() == 8);
  CHECK(entries.front().name == "disc_monomial");
  CHECK(entries.back().name == "grid_csv");
  const char* expected[] = {"disc_monomial",        "disc_geometric",
                            "disc_antiholo",        "halfplane_kernel",
                            "halfplane_gaussian_bump", "hyperbolic_exp",
                            "annulus_bump",         "grid_csv"};
  for (size_t i = 0; i < entries.size(); ++i) CHECK(entries[i].name == expected[i]);
}

TEST_CASE("grid_csv loads a tensor grid and interpolates") {
  const std::string path = "test_grid_tmp.csv";
  {
    std::ofstream out(path);
    out << "x,y,re,im\n";
    for (double x : {0.0, 0.5, 1.0}) {
      for (double y : {0.0, 1.0}) {
        out << x << "," << y << "," << (x + y) << "," << 0.0 << "\n";
      }
    }
  }
  TestFunction tf = make_test_function("grid_csv", {{"path", path}},
                                       ModelGeometry::parabolic(0.0));
  CHECK(std::abs(tf.source.sampler(0.25, 0.5) - cplx(0.75, 0.0)) < 1e-12);
  CHECK(std::abs(tf.source.sampler(5.0, 0.5)) == 0.0);  // outside the hull
  std::remove(path.c_str());
}
