#pragma once

#include <string>

#include "mfn/spaces.hpp"
#include "mfn/transforms.hpp"
#include "mfn/verify.hpp"

#include "json.hpp"

namespace mfn {

// All floats are emitted with 17 significant digits so that reports
// round-trip bit-exactly.
std::string fmt17(double v);

nlohmann::json to_json(const NormReport& r);
nlohmann::json to_json(const FactorizationReport& r);
nlohmann::json to_json(const PWReport& r);
nlohmann::json to_json(const PlancherelResult& r);
nlohmann::json to_json(const BoundednessProbe& r);

// CSV with columns xi, y, re, im; one row per (frequency, fiber node).
std::string spectral_to_csv(const SpectralData& sd);

// Serializes a JSON report with deterministic key order and fmt17 numbers.
std::string render_json(const nlohmann::json& j);

}  // namespace mfn
