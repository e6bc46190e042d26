#include "mfn/suites.hpp"

#include <cmath>

#include "mfn/report.hpp"

namespace mfn {

using nlohmann::json;

namespace {

struct NamedFunction {
  std::string label;
  TestFunction fn;
};

// Suite defaults: the canonical holomorphic entries per geometry, or the
// explicitly configured function when one is given.
std::vector<NamedFunction> pick_functions(const RunConfig& rc, bool holomorphic_only) {
  std::vector<NamedFunction> out;
  auto add = [&](const std::string& name, const json& params) {
    TestFunction tf = make_test_function(name, params, rc.geometry);
    if (holomorphic_only && !tf.holomorphic) return;
    std::string label = name;
    if (!params.empty()) label += " " + params.dump();
    out.push_back({label, std::move(tf)});
  };
  if (!rc.function_name.empty()) {
    TestFunction tf = make_test_function(rc.function_name, rc.function_params, rc.geometry);
    std::string label = rc.function_name;
    if (!rc.function_params.empty()) label += " " + rc.function_params.dump();
    out.push_back({label, std::move(tf)});
    return out;
  }
  switch (rc.geometry.kind) {
    case GeometryKind::Elliptic:
      add("disc_monomial", {{"n", 0}});
      add("disc_monomial", {{"n", 5}});
      add("disc_geometric", {{"a", 0.5}});
      break;
    case GeometryKind::Parabolic:
      add("halfplane_kernel", {{"k", 2}});
      break;
    case GeometryKind::Hyperbolic:
      add("hyperbolic_exp", json::object());
      break;
  }
  return out;
}

double default_tol(const RunConfig& rc, double fallback) {
  return rc.tolerance > 0.0 ? rc.tolerance : fallback;
}

std::vector<CheckOutcome> isometry_suite(const RunConfig& rc) {
  std::vector<CheckOutcome> out;
  const SpaceConfig cfg = rc.space();
  const double tol = default_tol(rc, 1e-5);
  for (const auto& nf : pick_functions(rc, /*holomorphic_only=*/false)) {
    CheckOutcome c;
    c.name = "isometry: " + nf.label;
    if (!nf.fn.holomorphic) {
      // Only the direct route is defined; report it without a verdict.
      SpectralData sd = spectral_table(nf.fn.source, cfg);
      const ExtReal direct = mixed_norm(sd, cfg);
      c.status = "not-applicable";
      c.evidence = {{"direct", to_string(direct)},
                    {"note", "function is not holomorphic; direct norm only"}};
      out.push_back(std::move(c));
      continue;
    }
    NormReport rep = isometry_report(nf.fn, cfg, tol);
    c.status = rep.pass ? "pass" : "fail";
    c.evidence = to_json(rep);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CheckOutcome> support_suite(const RunConfig& rc) {
  std::vector<CheckOutcome> out;
  if (rc.geometry.kind == GeometryKind::Hyperbolic) {
    out.push_back({"support", "not-applicable",
                   {{"note", "bounded fiber direction: Paley-Wiener support does not apply"}}});
    return out;
  }
  const SpaceConfig cfg = rc.space();
  const double tol = default_tol(rc, 1e-7);
  for (const auto& nf : pick_functions(rc, false)) {
    CheckOutcome c;
    c.name = "support: " + nf.label;
    bool zero_total = false;
    const double ratio = pw_support_test(nf.fn, cfg, &zero_total);
    // Holomorphic members must carry no negative-frequency mass; for
    // anti-holomorphic probes the detector is expected to flag them.
    const bool ok = nf.fn.holomorphic ? ratio < tol : ratio > 1.0 - 1e-10;
    c.status = ok ? "pass" : "fail";
    c.evidence = {{"negative_energy_ratio", ratio},
                  {"zero_total", zero_total},
                  {"holomorphic", nf.fn.holomorphic},
                  {"tolerance", tol}};
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CheckOutcome> bounded_suite(const RunConfig& rc) {
  std::vector<CheckOutcome> out;
  if (rc.geometry.kind == GeometryKind::Hyperbolic) {
    out.push_back({"bounded", "not-applicable",
                   {{"note", "bounded fiber direction: boundedness probe does not apply"}}});
    return out;
  }
  const SpaceConfig cfg = rc.space();

  CheckOutcome cond;
  cond.name = "bounded: weight condition";
  std::vector<double> probe = {-2.0, -1.0, -0.5};
  for (int i = 0; i <= 40; ++i) probe.push_back(0.25 * double(i));
  PWReport pw = pw_condition_check(cfg, probe, rc.y0);
  const bool cond_ok = !pw.bdd_condition_sup.is_infinite();
  cond.status = cond_ok ? "pass" : "fail";
  cond.evidence = to_json(pw);
  out.push_back(std::move(cond));

  for (const auto& nf : pick_functions(rc, false)) {
    CheckOutcome c;
    c.name = "bounded: probe " + nf.label;
    std::vector<double> xg, yg;
    const bool disc = rc.geometry.kind == GeometryKind::Elliptic;
    for (int i = 0; i < 64; ++i) xg.push_back(disc ? double(i) / 64.0 : -8.0 + 16.0 * i / 63.0);
    for (int i = 1; i <= 16; ++i) yg.push_back(rc.y1 + 0.05 * double(i));
    BoundednessProbe bp = pw_boundedness_probe(nf.fn, cfg, rc.y1, xg, yg);
    c.status = std::isfinite(bp.sup) ? "pass" : "fail";
    c.evidence = to_json(bp);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CheckOutcome> factorization_suite(const RunConfig& rc) {
  std::vector<CheckOutcome> out;
  const SpaceConfig cfg = rc.space();
  const double tol = default_tol(rc, 1e-6);
  for (const auto& nf : pick_functions(rc, false)) {
    CheckOutcome c;
    c.name = "factorization: " + nf.label;
    FactorizationReport rep = factorization_test(nf.fn, cfg, rc.y_slices, tol);
    // Non-holomorphic entries must break the factorization or carry
    // negative-frequency mass; the combined verdict checks exactly that.
    bool ok;
    if (nf.fn.holomorphic) {
      ok = rep.pass;
    } else {
      bool negative_mass = false;
      if (rep.pass && rc.geometry.kind != GeometryKind::Hyperbolic) {
        negative_mass = pw_support_test(nf.fn, cfg) > 1e-6;
      }
      ok = !rep.pass || negative_mass;
    }
    c.status = ok ? "pass" : "fail";
    c.evidence = to_json(rep);
    c.evidence["holomorphic"] = nf.fn.holomorphic;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CheckOutcome> plancherel_suite(const RunConfig& rc) {
  std::vector<CheckOutcome> out;
  RunConfig local = rc;
  if (local.function_name.empty()) {
    local.function_name = rc.geometry.kind == GeometryKind::Hyperbolic
                              ? "annulus_bump"
                              : "halfplane_gaussian_bump";
    local.function_params = json::object();
  }
  const SpaceConfig cfg = local.space();
  const double tol = default_tol(rc, 1e-8);
  for (const auto& nf : pick_functions(local, false)) {
    CheckOutcome c;
    c.name = "plancherel: " + nf.label;
    PlancherelResult res = plancherel_test(nf.fn, cfg);
    c.status = (!res.diverged && res.rel_err < tol) ? "pass" : "fail";
    c.evidence = to_json(res);
    c.evidence["tolerance"] = tol;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CheckOutcome> mellin_fourier_suite(const RunConfig& rc) {
  std::vector<CheckOutcome> out;
  if (rc.geometry.kind != GeometryKind::Hyperbolic) {
    out.push_back({"mellin-fourier", "not-applicable",
                   {{"note", "the Mellin route is defined on the hyperbolic model"}}});
    return out;
  }
  RunConfig local = rc;
  if (local.function_name.empty()) {
    local.function_name = "hyperbolic_exp";
    local.function_params = json::object();
  }
  const SpaceConfig cfg = local.space();
  const double tol = default_tol(rc, 1e-6);
  const double lam = rc.geometry.lambda;
  for (const auto& nf : pick_functions(local, false)) {
    if (!nf.fn.polar) continue;
    CheckOutcome c;
    c.name = "mellin-fourier: " + nf.label;
    double worst = 0.0;
    bool diverged = false;
    json points = json::array();
    for (double xi : {0.0, 0.25, 1.0}) {
      for (double y : {M_PI / 4.0, M_PI / 2.0, 3.0 * M_PI / 4.0}) {
        QuadResult r = mellin_fourier_residual(nf.fn.polar, lam, xi, y, cfg.quad);
        diverged = diverged || r.diverged;
        worst = std::max(worst, r.value.real());
        points.push_back({{"xi", xi}, {"y", y}, {"residual", r.value.real()}});
      }
    }
    c.status = (!diverged && worst < tol) ? "pass" : "fail";
    c.evidence = {{"max_residual", worst}, {"tolerance", tol}, {"points", points}};
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<CheckOutcome> run_verify_suite(const RunConfig& rc, const std::string& which) {
  if (which == "isometry") return isometry_suite(rc);
  if (which == "support") return support_suite(rc);
  if (which == "bounded") return bounded_suite(rc);
  if (which == "factorization") return factorization_suite(rc);
  if (which == "plancherel") return plancherel_suite(rc);
  if (which == "mellin-fourier") return mellin_fourier_suite(rc);
  if (which == "all") {
    std::vector<CheckOutcome> out;
    for (const char* w : {"isometry", "support", "bounded", "factorization",
                          "plancherel", "mellin-fourier"}) {
      auto part = run_verify_suite(rc, w);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw ConfigError("unknown verify suite '" + which + "'");
}

int suite_exit_code(const std::vector<CheckOutcome>& outcomes, bool explicit_request) {
  bool any_applicable = false, any_fail = false;
  for (const auto& c : outcomes) {
    if (c.applicable()) any_applicable = true;
    if (c.status == "fail") any_fail = true;
  }
  if (!any_applicable) return explicit_request ? 4 : 0;
  return any_fail ? 1 : 0;
}

}  // namespace mfn
