#include "mfn/config.hpp"

#include <cmath>
#include <fstream>

namespace mfn {

using nlohmann::json;

namespace {

double num(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) throw ConfigError(std::string("'") + key + "' must be a number");
  return j[key].get<double>();
}

}  // namespace

SpaceConfig RunConfig::space() const {
  SpaceConfig cfg;
  cfg.x.p = p;
  cfg.x.geometry = geometry;
  cfg.q = q;
  cfg.xi = xi;
  cfg.fiber = fiber;
  cfg.quad = quad;
  cfg.n_circle_samples = n_circle_samples;
  cfg.y_ref = y_slices.empty() ? 0.25 : y_slices.front();
  cfg.threads = threads;
  cfg.validate();
  return cfg;
}

RunConfig default_config() { return RunConfig{}; }

void apply_json(RunConfig& rc, const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");

  double lambda = rc.geometry.lambda;
  std::string geom;
  switch (rc.geometry.kind) {
    case GeometryKind::Elliptic: geom = "elliptic"; break;
    case GeometryKind::Parabolic: geom = "parabolic"; break;
    case GeometryKind::Hyperbolic: geom = "hyperbolic"; break;
  }
  if (j.contains("geometry")) {
    if (!j["geometry"].is_string()) throw ConfigError("'geometry' must be a string");
    geom = j["geometry"].get<std::string>();
  }
  lambda = num(j, "lambda", lambda);
  if (geom == "elliptic") {
    rc.geometry = ModelGeometry::elliptic();
  } else if (geom == "parabolic") {
    if (!(lambda > -1.0)) throw ConfigError("lambda must be > -1");
    rc.geometry = ModelGeometry::parabolic(lambda);
  } else if (geom == "hyperbolic") {
    if (!(lambda > -1.0)) throw ConfigError("lambda must be > -1");
    rc.geometry = ModelGeometry::hyperbolic(lambda);
  } else {
    throw ConfigError("unknown geometry '" + geom + "'");
  }

  rc.p = num(j, "p", rc.p);
  rc.q = num(j, "q", rc.q);
  if (!(rc.p >= 1.0)) throw ConfigError("p must be >= 1");
  if (!(rc.q >= 1.0)) throw ConfigError("q must be >= 1");

  if (j.contains("xi")) {
    const json& x = j["xi"];
    if (!x.is_object()) throw ConfigError("'xi' must be an object");
    if (x.contains("n_min") || x.contains("n_max")) {
      const long lo = lround(num(x, "n_min", 0.0));
      const long hi = lround(num(x, "n_max", lo));
      rc.xi = XiSpec::integers(lo, hi);
    } else if (x.contains("min") || x.contains("max")) {
      const double lo = num(x, "min", 0.0);
      const double hi = num(x, "max", lo);
      const double st = num(x, "step", 0.05);
      if (!(st > 0.0) || !(hi >= lo)) throw ConfigError("bad xi grid");
      rc.xi = XiSpec::grid(lo, hi, st);
    } else {
      throw ConfigError("'xi' needs {n_min,n_max} or {min,max,step}");
    }
    rc.xi_given = true;
  }

  if (j.contains("fiber_grid")) {
    const json& g = j["fiber_grid"];
    rc.fiber.n = int(lround(num(g, "n", double(rc.fiber.n))));
    rc.fiber.grading = num(g, "grading", rc.fiber.grading);
    rc.fiber.span = num(g, "span", rc.fiber.span);
    if (rc.fiber.n < 4 || !(rc.fiber.grading > 0.0) || !(rc.fiber.grading < 1.0)) {
      throw ConfigError("bad fiber_grid");
    }
  }

  if (j.contains("quad")) {
    const json& qd = j["quad"];
    rc.quad.rel_tol = num(qd, "rel_tol", rc.quad.rel_tol);
    rc.quad.abs_tol = num(qd, "abs_tol", rc.quad.abs_tol);
    rc.quad.max_depth = int(lround(num(qd, "max_depth", double(rc.quad.max_depth))));
    rc.quad.divergence_cap = num(qd, "divergence_cap", rc.quad.divergence_cap);
    if (!(rc.quad.rel_tol > 0.0) || !(rc.quad.abs_tol > 0.0) || rc.quad.max_depth < 1) {
      throw ConfigError("bad quad tolerances");
    }
  }

  if (j.contains("function")) {
    const json& f = j["function"];
    if (!f.is_object() || !f.contains("name") || !f["name"].is_string()) {
      throw ConfigError("'function' needs a 'name'");
    }
    rc.function_name = f["name"].get<std::string>();
    rc.function_params = f;
    rc.function_params.erase("name");
  }

  if (j.contains("y_slices")) {
    if (!j["y_slices"].is_array()) throw ConfigError("'y_slices' must be an array");
    rc.y_slices.clear();
    for (const auto& v : j["y_slices"]) {
      if (!v.is_number()) throw ConfigError("'y_slices' entries must be numbers");
      rc.y_slices.push_back(v.get<double>());
    }
  }

  rc.y0 = num(j, "y0", rc.y0);
  rc.y1 = num(j, "y1", rc.y1);

  if (j.contains("out")) {
    const json& o = j["out"];
    if (o.contains("dir")) rc.out_dir = o["dir"].get<std::string>();
    if (o.contains("format")) rc.out_format = o["format"].get<std::string>();
    if (rc.out_format != "csv" && rc.out_format != "json") {
      throw ConfigError("out.format must be csv or json");
    }
  }

  rc.threads = int(lround(num(j, "threads", double(rc.threads))));
  if (rc.threads < 1) throw ConfigError("threads must be >= 1");
  rc.n_circle_samples = int(lround(num(j, "n_samples", double(rc.n_circle_samples))));
  rc.tolerance = num(j, "tolerance", rc.tolerance);
}

void finalize_defaults(RunConfig& rc) {
  if (!rc.xi_given) {
    switch (rc.geometry.kind) {
      case GeometryKind::Elliptic:
        rc.xi = XiSpec::integers(-8, 24);
        break;
      case GeometryKind::Parabolic:
        rc.xi = XiSpec::grid(-0.5, 3.0, 0.01);
        break;
      case GeometryKind::Hyperbolic:
        rc.xi = XiSpec::grid(-2.0, 2.0, 0.04);
        break;
    }
  }
  if (rc.y_slices.empty()) {
    switch (rc.geometry.kind) {
      case GeometryKind::Elliptic:
        rc.y_slices = {0.1, 0.35, 0.8};
        break;
      case GeometryKind::Parabolic:
        rc.y_slices = {0.05, 0.15, 0.3};
        break;
      case GeometryKind::Hyperbolic:
        rc.y_slices = {M_PI / 4.0, M_PI / 2.0, 3.0 * M_PI / 4.0};
        break;
    }
  }
}

json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  return j;
}

}  // namespace mfn
