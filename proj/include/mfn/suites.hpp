#pragma once

#include <string>
#include <vector>

#include "mfn/config.hpp"
#include "mfn/verify.hpp"

#include "json.hpp"

namespace mfn {

struct CheckOutcome {
  std::string name;
  std::string status;  // pass | fail | not-applicable
  nlohmann::json evidence;

  bool passed() const { return status == "pass"; }
  bool applicable() const { return status != "not-applicable"; }
};

// Runs one verification suite (or "all") for the configured geometry.
// Suites on functions the geometry does not support, and Paley-Wiener suites
// on the hyperbolic model, come back as not-applicable.
std::vector<CheckOutcome> run_verify_suite(const RunConfig& rc, const std::string& which);

// Verdict helper mirroring the CLI exit-code contract:
// 0 pass, 1 any failure, 4 the requested suite is not applicable.
int suite_exit_code(const std::vector<CheckOutcome>& outcomes, bool explicit_request);

}  // namespace mfn
