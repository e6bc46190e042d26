#pragma once

#include <string>
#include <vector>

#include "mfn/space_config.hpp"

#include "json.hpp"

namespace mfn {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fully resolved run configuration: defaults, then config file, then flag
// overrides (strongest last).
struct RunConfig {
  ModelGeometry geometry = ModelGeometry::elliptic();
  double p = 2.0;
  double q = 2.0;
  XiSpec xi;
  bool xi_given = false;
  FiberGridSpec fiber;
  QuadConfig quad;

  std::string function_name;  // empty: suite defaults
  nlohmann::json function_params = nlohmann::json::object();

  std::vector<double> y_slices;
  double y0 = 0.1;
  double y1 = 0.25;

  std::string out_dir;             // empty: stdout only
  std::string out_format = "csv";  // csv | json
  int threads = 1;
  int n_circle_samples = 128;
  double tolerance = 0.0;  // 0: per-command default

  SpaceConfig space() const;
};

// Applies a JSON document (config file or override fragment) onto a config.
void apply_json(RunConfig& rc, const nlohmann::json& j);

RunConfig default_config();

// Fills geometry-dependent fields (xi window, slices) that were not set.
void finalize_defaults(RunConfig& rc);

nlohmann::json load_config_file(const std::string& path);

}  // namespace mfn
