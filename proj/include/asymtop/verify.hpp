#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "asymtop/spectra.hpp"

namespace asymtop {

struct CheckResult {
  std::string name;
  bool pass = false;
  double defect = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

/// Named thresholds of the check suite with their defaults.
std::map<std::string, double> default_tolerances();

struct VerifyConfig {
  TopParams params{3.0, 2.0, 1.0};
  int jmax = 4;
  std::vector<Route> routes{Route::Wigner, Route::Lambda, Route::Lame};
  std::map<std::string, double> tolerances = default_tolerances();
  std::uint64_t seed = 42;
};

/// Largest pairwise |E_a - E_b| / max(|E|, A) over the requested routes,
/// level by level. Routes that cannot run (Lamé on a degenerate top) are
/// skipped.
double route_disagreement(int j, const TopParams& p, const std::vector<Route>& routes);

/// The whole suite, in a fixed order. Deterministic for a given config.
std::vector<CheckResult> run_checks(const VerifyConfig& cfg);

}  // namespace asymtop
