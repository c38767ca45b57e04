#pragma once

#include <string>
#include <vector>

#include "oham/config.hpp"

namespace oham {

/// One row of a published comparison table: exact, ADM and OHAM values at x.
struct ReferenceRow {
  double x;
  double exact;
  double adm;
  double oham;
};

/// Published order-2 results for one built-in problem.
struct ReferenceCase {
  int example = 0;
  int order = 2;
  double c0 = 0.0;
  std::vector<ReferenceRow> rows;
  /// Leading printed coefficients of the OHAM partial sum, ascending degree.
  std::vector<double> phi_coeffs;
};

/// Examples 1..4.
const ReferenceCase& reference_case(int example);

/// Markdown comparison of this solver against the published tables for every
/// built-in problem under every p-strategy. `base` supplies M, bracket and
/// tolerances; order and strategy are set per case.
std::string discrepancy_report(const SolverConfig& base);

}  // namespace oham
