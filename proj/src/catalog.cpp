#include "mfn/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

namespace mfn {
namespace {

constexpr double kTwoPi = 2.0 * M_PI;

cplx disc_map(double x, double y) { return std::exp(kTwoPi * cplx(-y, x)); }

double require_number(const nlohmann::json& params, const char* key, double fallback,
                      bool required = false) {
  if (params.contains(key)) {
    if (!params[key].is_number()) {
      throw std::invalid_argument(std::string("parameter '") + key + "' must be a number");
    }
    return params[key].get<double>();
  }
  if (required) throw std::invalid_argument(std::string("missing parameter '") + key + "'");
  return fallback;
}

void require_kind(const ModelGeometry& geo, GeometryKind kind, const std::string& name) {
  if (geo.kind != kind) {
    throw std::invalid_argument("function '" + name + "' is not defined for this geometry");
  }
}

// Bilinear interpolation over a tensor grid loaded from CSV rows x,y,re,im.
struct GridData {
  std::vector<double> xs, ys;
  std::vector<cplx> v;  // row-major [ix * ys.size() + iy]

  cplx eval(double x, double y) const {
    if (x < xs.front() || x > xs.back() || y < ys.front() || y > ys.back()) {
      return {0.0, 0.0};
    }
    auto locate = [](const std::vector<double>& g, double t) {
      const auto it = std::upper_bound(g.begin(), g.end(), t);
      size_t i = size_t(std::distance(g.begin(), it));
      if (i == 0) i = 1;
      if (i >= g.size()) i = g.size() - 1;
      return i - 1;
    };
    const size_t ix = locate(xs, x), iy = locate(ys, y);
    const double tx = (x - xs[ix]) / (xs[ix + 1] - xs[ix]);
    const double ty = (y - ys[iy]) / (ys[iy + 1] - ys[iy]);
    const size_t n = ys.size();
    const cplx v00 = v[ix * n + iy], v01 = v[ix * n + iy + 1];
    const cplx v10 = v[(ix + 1) * n + iy], v11 = v[(ix + 1) * n + iy + 1];
    return (1 - tx) * ((1 - ty) * v00 + ty * v01) + tx * ((1 - ty) * v10 + ty * v11);
  }
};

GridData load_grid_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("grid_csv: cannot open " + path);
  std::map<double, std::map<double, cplx>> rows;
  std::string line;
  bool header_checked = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (!header_checked) {
      header_checked = true;
      if (line.find("x") != std::string::npos && !std::isdigit(line[0]) &&
          line[0] != '-' && line[0] != '+') {
        continue;  // header row
      }
    }
    std::istringstream ss(line);
    double x, y, re, im;
    char c;
    if (!(ss >> x >> c >> y >> c >> re >> c >> im)) {
      throw std::invalid_argument("grid_csv: malformed row: " + line);
    }
    rows[x][y] = cplx(re, im);
  }
  if (rows.empty()) throw std::invalid_argument("grid_csv: no data rows");
  GridData g;
  for (const auto& [x, col] : rows) g.xs.push_back(x);
  for (const auto& [y, val] : rows.begin()->second) g.ys.push_back(y);
  for (const auto& [x, col] : rows) {
    if (col.size() != g.ys.size()) {
      throw std::invalid_argument("grid_csv: rows do not form a tensor grid");
    }
    for (const auto& [y, val] : col) g.v.push_back(val);
  }
  return g;
}

}  // namespace

double smooth_bump(double t, double lo, double hi) {
  const double u = (2.0 * t - (lo + hi)) / (hi - lo);
  if (!(std::abs(u) < 1.0)) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - u * u));
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"disc_monomial", "elliptic", "{\"n\": int >= 0}", "w^n on the disc"},
      {"disc_geometric", "elliptic", "{\"a\": real, |a| < 1}",
       "1/(1 - a w), geometric boundary density a^n"},
      {"disc_antiholo", "elliptic", "{}", "conj(w); all spectral mass at xi = -1"},
      {"halfplane_kernel", "parabolic", "{\"k\": int >= 2}",
       "(z + i)^{-k} on the upper half-plane"},
      {"halfplane_gaussian_bump", "elliptic|parabolic", "{}",
       "character or Gaussian in x times a smooth bump in y"},
      {"hyperbolic_exp", "hyperbolic", "{}", "e^{iw} carried to the strip by T_lambda"},
      {"annulus_bump", "hyperbolic", "{}",
       "smooth bump supported in an annulus, polar coordinates"},
      {"grid_csv", "any", "{\"path\": string}",
       "bilinear interpolant of CSV samples x,y,re,im"},
  };
  return entries;
}

TestFunction make_test_function(const std::string& name, const nlohmann::json& params,
                                const ModelGeometry& geo) {
  TestFunction tf;
  tf.name = name;

  if (name == "disc_monomial") {
    require_kind(geo, GeometryKind::Elliptic, name);
    const double nd = require_number(params, "n", 0.0, true);
    const long n = lround(nd);
    if (n < 0 || double(n) != nd) throw std::invalid_argument("disc_monomial: n must be an integer >= 0");
    tf.source.sampler = [n](double x, double y) {
      return std::exp(kTwoPi * double(n) * cplx(-y, x));
    };
    tf.holomorphic = true;
    tf.u0_oracle = [n](double xi) {
      return lround(xi) == n ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
    };
    return tf;
  }

  if (name == "disc_geometric") {
    require_kind(geo, GeometryKind::Elliptic, name);
    const double a = require_number(params, "a", 0.5);
    if (!(std::abs(a) < 1.0)) throw std::invalid_argument("disc_geometric: need |a| < 1");
    tf.source.sampler = [a](double x, double y) {
      return 1.0 / (1.0 - a * disc_map(x, y));
    };
    tf.holomorphic = true;
    tf.u0_oracle = [a](double xi) {
      const long n = lround(xi);
      return n >= 0 ? cplx(std::pow(a, double(n)), 0.0) : cplx(0.0, 0.0);
    };
    return tf;
  }

  if (name == "disc_antiholo") {
    require_kind(geo, GeometryKind::Elliptic, name);
    tf.source.sampler = [](double x, double y) { return std::conj(disc_map(x, y)); };
    tf.holomorphic = false;
    return tf;
  }

  if (name == "halfplane_kernel") {
    require_kind(geo, GeometryKind::Parabolic, name);
    const double kd = require_number(params, "k", 2.0);
    const int k = int(lround(kd));
    if (k < 2 || double(k) != kd) throw std::invalid_argument("halfplane_kernel: k must be an integer >= 2");
    tf.source.sampler = [k](double x, double y) {
      return std::pow(cplx(x, y + 1.0), -double(k));
    };
    // Algebraic x^{-k} tails: widen the window as xi -> 0 where the
    // oscillation stops paying for the truncation.
    tf.source.window = [](double xi) {
      const double ax = std::abs(xi);
      return std::clamp(ax > 0.0 ? 2.0 / ax : 400.0, 60.0, 400.0);
    };
    tf.source.feature_scale = 0.5;
    tf.source.outer_scale = 4.0;
    tf.holomorphic = true;
    // Residue of the closing contour: -2 pi i (-2 pi i xi)^{k-1} e^{-2 pi xi}/(k-1)!
    tf.u0_oracle = [k](double xi) {
      if (!(xi > 0.0)) return cplx(0.0, 0.0);
      cplx c = cplx(0.0, -kTwoPi);
      for (int j = 1; j < k; ++j) c *= cplx(0.0, -kTwoPi * xi) / double(j);
      return c * std::exp(-kTwoPi * xi);
    };
    return tf;
  }

  if (name == "halfplane_gaussian_bump") {
    const double lo = 0.5, hi = 2.5;
    if (geo.kind == GeometryKind::Elliptic) {
      tf.source.sampler = [lo, hi](double x, double y) {
        return std::exp(cplx(0.0, kTwoPi * x)) * smooth_bump(y, lo, hi);
      };
    } else if (geo.kind == GeometryKind::Parabolic) {
      tf.source.sampler = [lo, hi](double x, double y) {
        return std::exp(-M_PI * x * x) * smooth_bump(y, lo, hi);
      };
      tf.source.window = [](double) { return 7.0; };
      tf.source.feature_scale = 0.4;
    } else {
      throw std::invalid_argument("halfplane_gaussian_bump: elliptic or parabolic only");
    }
    tf.holomorphic = false;
    return tf;
  }

  if (name == "hyperbolic_exp") {
    require_kind(geo, GeometryKind::Hyperbolic, name);
    const double lam = geo.lambda;
    // T_lam e^{iw} on the strip, evaluated as a single exponential so the
    // superexponential decay never overflows an intermediate.
    tf.source.sampler = [lam](double x, double y) {
      const cplx z(x, y);
      return std::exp((lam / 2.0 + 1.0) * z + cplx(0.0, 1.0) * std::exp(z));
    };
    tf.polar = [](double r, double y) {
      return std::exp(cplx(0.0, 1.0) * r * std::exp(cplx(0.0, y)));
    };
    tf.source.window = [](double) { return 34.0; };
    tf.source.feature_scale = 0.08;
    tf.source.outer_scale = 0.5;
    tf.holomorphic = true;
    return tf;
  }

  if (name == "annulus_bump") {
    require_kind(geo, GeometryKind::Hyperbolic, name);
    const double rlo = 0.6, rhi = 1.8, ylo = 0.5, yhi = 2.6;
    const double lam = geo.lambda;
    tf.polar = [=](double r, double y) {
      return cplx(smooth_bump(r, rlo, rhi) * smooth_bump(y, ylo, yhi), 0.0);
    };
    tf.source.sampler = [=](double x, double y) {
      const cplx z(x, y);
      return std::exp((lam / 2.0 + 1.0) * z) *
             smooth_bump(std::exp(x), rlo, rhi) * smooth_bump(y, ylo, yhi);
    };
    tf.source.window = [](double) { return 2.0; };
    tf.source.feature_scale = 0.05;
    tf.source.outer_scale = 0.25;
    tf.holomorphic = false;
    return tf;
  }

  if (name == "grid_csv") {
    if (!params.contains("path") || !params["path"].is_string()) {
      throw std::invalid_argument("grid_csv: needs a string parameter 'path'");
    }
    auto grid = std::make_shared<GridData>(load_grid_csv(params["path"].get<std::string>()));
    tf.source.sampler = [grid](double x, double y) { return grid->eval(x, y); };
    const double W = std::max(std::abs(grid->xs.front()), std::abs(grid->xs.back())) + 1.0;
    tf.source.window = [W](double) { return W; };
    tf.holomorphic = false;
    return tf;
  }

  throw std::invalid_argument("unknown test function '" + name + "'");
}

}  // namespace mfn
