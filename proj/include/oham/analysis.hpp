#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oham/config.hpp"
#include "oham/problem.hpp"
#include "oham/series.hpp"

namespace oham {

/// Observed contraction ratios delta_k = |y_{k+1}| / |y_k| (grid sup-norm).
struct ConvergenceReport {
  /// delta_k for k = 0..n-1; empty where |y_k| = 0.
  std::vector<std::optional<double>> deltas;
  /// |y_k| for k = 0..n.
  std::vector<double> norms;
  /// Smallest index from which every defined delta is below 1.
  std::optional<int> k0;
  /// Largest defined delta_k with k >= k0 (0 when none is defined).
  double delta_max = 0.0;
  /// delta_max^(n - k0 + 1) / (1 - delta_max) |y_k0|, present iff k0 is.
  std::optional<double> bound;
  int order = 0;
};

ConvergenceReport measure_deltas(const HomotopySeries& series, int norm_grid);

/// delta^(m - k0 + 1) / (1 - delta) * norm_yk0, or nothing when
/// delta_max >= 1, k0 is absent or k0 > m.
std::optional<double> error_bound(const ConvergenceReport& report, int m, double norm_yk0);

/// Truncation bound checked against the known exact solution.
struct BoundCheck {
  std::optional<double> bound;
  /// max |exact - phi_n| over the grid, when the exact solution is known.
  std::optional<double> observed;
  /// The observed error exceeds bound * (1 + 1e-6): the sampled ratios did
  /// not certify the contraction hypothesis for this run.
  bool flagged = false;
};

BoundCheck check_bound(const HomotopySeries& series, const ConvergenceReport& report,
                       std::span<const double> grid);

struct ResultRow {
  double x = 0.0;
  std::optional<double> exact;
  double adm = 0.0;
  double oham = 0.0;
  std::optional<double> err_adm;
  std::optional<double> err_oham;
};

struct ResultTable {
  std::vector<ResultRow> rows;
  std::string source;
  int order = 0;
  double c0_adm = -1.0;
  double c0_oham = -1.0;
  PStrategy strategy = PStrategy::Frozen;
  int residual_points = 0;
  double E_adm = 0.0;
  double E_oham = 0.0;
};

/// ADM (c0 = -1) and OHAM (optimized or fixed c0) at the same order and
/// strategy, evaluated on the sorted grid.
ResultTable result_table(const ProblemSpec& spec, const SolverConfig& config, std::span<const double> grid);

/// 0, 0.1, ..., 1.
std::vector<double> default_grid();

}  // namespace oham
