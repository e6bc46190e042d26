#include "mfn/report.hpp"

#include <cstdio>
#include <sstream>

namespace mfn {

using nlohmann::json;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

static json ext_json(const ExtReal& x) {
  if (x.is_infinite()) return json("inf");
  return json(x.value());
}

json to_json(const NormReport& r) {
  json j = json::object();
  j["direct"] = ext_json(r.direct);
  j["via_weight"] = ext_json(r.via_weight);
  j["rel_err"] = r.rel_err;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  j["truncation_note"] = r.truncation_note;
  return j;
}

json to_json(const FactorizationReport& r) {
  json j = json::object();
  j["max_rel_deviation"] = r.max_rel_deviation;
  j["worst_pair"] = {r.worst_xi, r.worst_y_i, r.worst_y_j};
  j["pass"] = r.pass;
  j["tolerance"] = r.tolerance;
  j["informative_pairs"] = r.informative_pairs;
  json table = json::array();
  for (const auto& [xi, u0] : r.u0_table) {
    table.push_back({{"xi", xi}, {"re", u0.real()}, {"im", u0.imag()}});
  }
  j["u0_table"] = table;
  return j;
}

json to_json(const PWReport& r) {
  json j = json::object();
  j["negative_energy_ratio"] = r.negative_energy_ratio;
  j["zero_total"] = r.zero_total;
  j["rho_infinite_on_negatives"] = r.rho_infinite_on_negatives;
  j["bdd_condition_sup"] = ext_json(r.bdd_condition_sup);
  j["sup_probe"] = r.sup_probe;
  j["y0"] = r.y0;
  j["y1"] = r.y1;
  if (r.r0) j["r0"] = *r.r0;
  return j;
}

json to_json(const PlancherelResult& r) {
  json j = json::object();
  j["rel_err"] = r.rel_err;
  j["direct"] = r.direct;
  j["spectral"] = r.spectral;
  j["diverged"] = r.diverged;
  return j;
}

json to_json(const BoundednessProbe& r) {
  json j = json::object();
  j["applicable"] = r.applicable;
  j["sup"] = r.sup;
  j["y1"] = r.y1;
  if (r.r0) j["r0"] = *r.r0;
  return j;
}

std::string spectral_to_csv(const SpectralData& sd) {
  std::ostringstream out;
  out << "xi,y,re,im\n";
  for (size_t j = 0; j < sd.frequencies.size(); ++j) {
    const auto& prof = sd.profiles[j];
    for (size_t i = 0; i < prof.grid->nodes.size(); ++i) {
      out << fmt17(sd.frequencies[j].value) << ',' << fmt17(prof.grid->nodes[i]) << ','
          << fmt17(prof.values[i].real()) << ',' << fmt17(prof.values[i].imag()) << '\n';
    }
  }
  return out.str();
}

namespace {

void render(const json& j, std::ostringstream& out, int indent) {
  const std::string pad(size_t(indent) * 2, ' ');
  const std::string pad1(size_t(indent + 1) * 2, ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      size_t k = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++k) {
        out << pad1 << '"' << it.key() << "\": ";
        render(it.value(), out, indent + 1);
        if (k + 1 < j.size()) out << ',';
        out << '\n';
      }
      out << pad << '}';
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      out << "[\n";
      for (size_t k = 0; k < j.size(); ++k) {
        out << pad1;
        render(j[k], out, indent + 1);
        if (k + 1 < j.size()) out << ',';
        out << '\n';
      }
      out << pad << ']';
      return;
    }
    case json::value_t::number_float:
      out << fmt17(j.get<double>());
      return;
    default:
      out << j.dump();
      return;
  }
}

}  // namespace

std::string render_json(const json& j) {
  std::ostringstream out;
  render(j, out, 0);
  out << '\n';
  return out.str();
}

}  // namespace mfn
