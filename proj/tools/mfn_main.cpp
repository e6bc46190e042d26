#include <filesystem>
#include <fstream>
#include <iostream>

#include "mfn/report.hpp"
#include "mfn/suites.hpp"

#include "CLI11.hpp"

namespace {

using mfn::RunConfig;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitDivergence = 3;
constexpr int kExitNotApplicable = 4;

struct CommonOpts {
  std::string config_path;
  std::vector<std::string> sets;
  json overrides = json::object();
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path, "JSON config file");
  cmd->add_option("--set", opts.sets,
                  "Override a config entry, dot path (e.g. --set xi.step=0.01)");
  auto* o = &opts.overrides;
  cmd->add_option_function<std::string>(
      "--geometry", [o](const std::string& v) { (*o)["geometry"] = v; },
      "elliptic | parabolic | hyperbolic");
  cmd->add_option_function<double>(
      "--lambda", [o](double v) { (*o)["lambda"] = v; }, "fiber measure parameter");
  cmd->add_option_function<double>("--p", [o](double v) { (*o)["p"] = v; }, "fiber exponent");
  cmd->add_option_function<double>("--q", [o](double v) { (*o)["q"] = v; }, "outer exponent");
  cmd->add_option_function<std::string>(
      "--function", [o](const std::string& v) { (*o)["function"]["name"] = v; },
      "catalog function name");
  cmd->add_option_function<int>(
      "--threads", [o](int v) { (*o)["threads"] = v; }, "worker thread count");
  cmd->add_option_function<double>(
      "--tolerance", [o](double v) { (*o)["tolerance"] = v; }, "check tolerance");
  cmd->add_option_function<std::string>(
      "--out-dir", [o](const std::string& v) { (*o)["out"]["dir"] = v; }, "output directory");
  cmd->add_option_function<std::string>(
      "--format", [o](const std::string& v) { (*o)["out"]["format"] = v; }, "csv | json");
}

// --set key.path=value with JSON-typed values (bare words become strings).
void apply_set(json& doc, const std::string& expr) {
  const auto eq = expr.find('=');
  if (eq == std::string::npos) throw mfn::ConfigError("--set needs key=value: " + expr);
  const std::string path = expr.substr(0, eq);
  const std::string raw = expr.substr(eq + 1);
  json value;
  try {
    value = json::parse(raw);
  } catch (const json::parse_error&) {
    value = raw;
  }
  json* node = &doc;
  size_t pos = 0;
  while (true) {
    const auto dot = path.find('.', pos);
    const std::string key = path.substr(pos, dot == std::string::npos ? dot : dot - pos);
    if (key.empty()) throw mfn::ConfigError("bad --set path: " + expr);
    if (dot == std::string::npos) {
      (*node)[key] = value;
      break;
    }
    node = &(*node)[key];
    pos = dot + 1;
  }
}

RunConfig build_config(const CommonOpts& opts) {
  RunConfig rc = mfn::default_config();
  json file_overrides = json::object();
  if (!opts.config_path.empty()) file_overrides = mfn::load_config_file(opts.config_path);
  json flag_overrides = opts.overrides;
  for (const auto& s : opts.sets) apply_set(flag_overrides, s);
  // Precedence: defaults, then file, then flags.
  mfn::apply_json(rc, file_overrides);
  mfn::apply_json(rc, flag_overrides);
  mfn::finalize_defaults(rc);
  return rc;
}

void write_output(const RunConfig& rc, const std::string& filename, const std::string& body) {
  if (rc.out_dir.empty()) {
    std::cout << body;
    return;
  }
  std::filesystem::create_directories(rc.out_dir);
  const auto path = std::filesystem::path(rc.out_dir) / filename;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw mfn::ConfigError("cannot write " + path.string());
  out << body;
  std::cout << path.string() << "\n";
}

int cmd_rho(const RunConfig& rc) {
  const mfn::SpaceConfig cfg = rc.space();
  const auto freqs = cfg.xi.frequencies();
  std::string csv = "xi,rho_numeric,rho_closed_form,ratio\n";
  for (const auto& f : freqs) {
    const mfn::ExtReal num = mfn::rho_numeric(f.value, cfg.x, cfg.quad);
    const mfn::ExtReal closed = mfn::rho_closed_form(f.value, cfg.x);
    csv += mfn::fmt17(f.value) + "," + mfn::to_string(num) + "," + mfn::to_string(closed);
    csv += ",";
    if (num.is_finite() && closed.is_finite() && num.value() > 0.0) {
      csv += mfn::fmt17(closed.value() / num.value());
    }
    csv += "\n";
  }
  write_output(rc, "rho.csv", csv);
  return kExitPass;
}

int cmd_norm(const RunConfig& rc) {
  if (rc.function_name.empty()) throw mfn::ConfigError("norm: a function is required");
  const mfn::SpaceConfig cfg = rc.space();
  const mfn::TestFunction fn =
      mfn::make_test_function(rc.function_name, rc.function_params, rc.geometry);
  const double tol = rc.tolerance > 0.0 ? rc.tolerance : 1e-5;

  if (!fn.holomorphic) {
    // Only the direct route is defined for non-holomorphic functions.
    mfn::SpectralData sd = mfn::spectral_table(fn.source, cfg);
    const mfn::ExtReal direct = mfn::mixed_norm(sd, cfg);
    json j = {{"direct", direct.is_infinite() ? json("inf") : json(direct.value())},
              {"via_weight", nullptr},
              {"truncation_note", sd.truncation_note}};
    write_output(rc, "norm.json", mfn::render_json(j));
    return direct.is_infinite() ? kExitDivergence : kExitPass;
  }

  const mfn::NormReport rep = mfn::isometry_report(fn, cfg, tol);
  write_output(rc, "norm.json", mfn::render_json(mfn::to_json(rep)));
  if (rep.direct.is_infinite() != rep.via_weight.is_infinite()) return kExitDivergence;
  return rep.pass ? kExitPass : kExitCheckFailed;
}

int cmd_verify(const RunConfig& rc, const std::string& which) {
  const auto outcomes = mfn::run_verify_suite(rc, which);
  json checks = json::array();
  for (const auto& c : outcomes) {
    checks.push_back({{"name", c.name}, {"status", c.status}, {"evidence", c.evidence}});
  }
  json j = {{"suite", which}, {"checks", checks}};
  write_output(rc, "verify_" + which + ".json", mfn::render_json(j));
  return mfn::suite_exit_code(outcomes, which != "all");
}

int cmd_catalog(bool as_json) {
  if (as_json) {
    json arr = json::array();
    for (const auto& e : mfn::catalog_entries()) {
      arr.push_back({{"name", e.name},
                     {"geometries", e.geometries},
                     {"params", e.params},
                     {"description", e.description}});
    }
    std::cout << mfn::render_json(arr);
    return kExitPass;
  }
  for (const auto& e : mfn::catalog_entries()) {
    std::cout << e.name << "  [" << e.geometries << "]  params " << e.params << "\n    "
              << e.description << "\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mixed-Fourier-norm toolkit for the disc and half-plane models"};
  app.require_subcommand(1);

  CommonOpts rho_opts, norm_opts, verify_opts;
  auto* rho = app.add_subcommand("rho", "tabulate the weight rho over the xi window");
  add_common(rho, rho_opts);

  auto* norm = app.add_subcommand("norm", "mixed norm and isometry report for a function");
  add_common(norm, norm_opts);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string which = "all";
  verify
      ->add_option("which", which,
                   "isometry|support|bounded|factorization|plancherel|mellin-fourier|all")
      ->check(CLI::IsMember({"isometry", "support", "bounded", "factorization",
                             "plancherel", "mellin-fourier", "all"}));
  add_common(verify, verify_opts);

  auto* catalog = app.add_subcommand("catalog", "list available test functions");
  bool catalog_json = false;
  catalog->add_flag("--json", catalog_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfigError;
  }

  try {
    if (rho->parsed()) return cmd_rho(build_config(rho_opts));
    if (norm->parsed()) return cmd_norm(build_config(norm_opts));
    if (verify->parsed()) return cmd_verify(build_config(verify_opts), which);
    if (catalog->parsed()) return cmd_catalog(catalog_json);
  } catch (const mfn::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDivergence;
  }
  return kExitConfigError;
}
