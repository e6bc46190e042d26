#pragma once

#include <optional>
#include <span>

#include "mfn/catalog.hpp"
#include "mfn/spaces.hpp"

namespace mfn {

// Holomorphic factorization check: u_hat(xi, y) e^{2 pi xi y} must not depend
// on the slice y. Deviations are measured against the global spectral scale;
// slice values indistinguishable from transform noise are treated as exact
// zeros, and pairs whose rescaled uncertainty swamps the comparison are
// reported as uninformative rather than counted.
struct FactorizationReport {
  double max_rel_deviation = 0.0;
  double worst_xi = 0.0;
  double worst_y_i = 0.0;
  double worst_y_j = 0.0;
  bool pass = false;
  double tolerance = 0.0;
  std::vector<std::pair<double, cplx>> u0_table;  // from the first slice
  long informative_pairs = 0;
};

struct PWReport {
  double negative_energy_ratio = 0.0;
  bool zero_total = false;
  bool rho_infinite_on_negatives = false;
  ExtReal bdd_condition_sup;
  double sup_probe = 0.0;
  double y0 = 0.0;
  double y1 = 0.0;
  std::optional<double> r0;
};

struct BoundednessProbe {
  bool applicable = true;
  double sup = 0.0;
  double y1 = 0.0;
  std::optional<double> r0;
};

struct PlancherelResult {
  double rel_err = 0.0;
  double direct = 0.0;
  double spectral = 0.0;
  bool diverged = false;
};

// u_hat(xi, y_ref) e^{2 pi xi y_ref}; the product is formed in log space once
// the exponent passes 300 to avoid overflow of the rescaling factor.
cplx extract_u0(const TestFunction& f, const SpaceConfig& cfg, DualFrequency xi,
                double y_ref);

// Boundary density over the configured frequency window.
std::vector<cplx> extract_u0_table(const TestFunction& f, const SpaceConfig& cfg,
                                   double y_ref);

FactorizationReport factorization_test(const TestFunction& f, const SpaceConfig& cfg,
                                       std::span<const double> y_slices, double tol);

// Fraction of spectral L^2 mass at negative frequencies (q = 2 regardless of
// the configured q; support is a set-level property).
double pw_support_test(const TestFunction& f, const SpaceConfig& cfg,
                       bool* zero_total = nullptr);

PWReport pw_condition_check(const SpaceConfig& cfg, std::span<const double> xi_probe,
                            double y0);

BoundednessProbe pw_boundedness_probe(const TestFunction& f, const SpaceConfig& cfg,
                                      double y1, std::span<const double> x_grid,
                                      std::span<const double> y_grid);

PlancherelResult plancherel_test(const TestFunction& f, const SpaceConfig& cfg);

// Spec'd isometry entry point for catalog functions: direct route from the
// measured spectral table, weighted route from the extracted boundary density.
NormReport isometry_report(const TestFunction& f, const SpaceConfig& cfg,
                           double tolerance);

}  // namespace mfn
