#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mfn/transforms.hpp"

#include "json.hpp"

namespace mfn {

// A catalog function bound to a geometry: the model-coordinate sampler with
// its transform windows, an optional polar-coordinate sampler for the Mellin
// route, holomorphy metadata, and a closed-form boundary density when known.
struct TestFunction {
  std::string name;
  SourceFunction source;
  PolarSampler polar;  // (r, y) sampler; empty unless meaningful
  bool holomorphic = false;
  std::function<cplx(double)> u0_oracle;  // boundary density, when closed-form
};

struct CatalogEntry {
  std::string name;
  std::string geometries;
  std::string params;
  std::string description;
};

// Stable-ordered listing of available test functions.
const std::vector<CatalogEntry>& catalog_entries();

// Instantiates a catalog function for a geometry. Throws std::invalid_argument
// for unknown names, bad parameters, or a geometry the entry does not support.
TestFunction make_test_function(const std::string& name, const nlohmann::json& params,
                                const ModelGeometry& geo);

// Smooth compactly supported bump on (lo, hi), peak 1 at the midpoint.
double smooth_bump(double t, double lo, double hi);

}  // namespace mfn
