#include "oham/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "oham/error.hpp"
#include "oham/residual.hpp"

namespace oham {

ConvergenceReport measure_deltas(const HomotopySeries& series, int norm_grid) {
  if (series.stages.size() < 2) throw DomainError("measure_deltas: series needs at least two stages");
  ConvergenceReport report;
  report.order = series.order();
  for (const auto& stage : series.stages) report.norms.push_back(max_abs_on_grid(stage.y, norm_grid));
  const int n = report.order;
  for (int k = 0; k < n; ++k) {
    if (report.norms[k] > 0.0) {
      report.deltas.emplace_back(report.norms[k + 1] / report.norms[k]);
    } else {
      report.deltas.emplace_back(std::nullopt);
    }
  }
  // walk back from the tail while every ratio stays below 1
  int k0 = n;
  double delta_max = 0.0;
  for (int k = n - 1; k >= 0; --k) {
    if (report.deltas[k] && *report.deltas[k] >= 1.0) break;
    if (report.deltas[k]) delta_max = std::max(delta_max, *report.deltas[k]);
    k0 = k;
  }
  if (k0 < n) {
    report.k0 = k0;
    report.delta_max = delta_max;
    report.bound = error_bound(report, n, report.norms[k0]);
  } else {
    double observed = 0.0;
    for (const auto& d : report.deltas) {
      if (d) observed = std::max(observed, *d);
    }
    report.delta_max = observed;
  }
  return report;
}

std::optional<double> error_bound(const ConvergenceReport& report, int m, double norm_yk0) {
  if (!report.k0 || report.delta_max >= 1.0 || *report.k0 > m) return std::nullopt;
  const double delta = report.delta_max;
  return std::pow(delta, m - *report.k0 + 1) / (1.0 - delta) * norm_yk0;
}

BoundCheck check_bound(const HomotopySeries& series, const ConvergenceReport& report,
                       std::span<const double> grid) {
  BoundCheck check;
  check.bound = report.bound;
  if (series.problem.exact.kind == ExactKind::None) return check;
  const Polynomial phi = partial_sum(series, series.order());
  double worst = 0.0;
  for (double x : grid) {
    if (const auto y = exact_eval(series.problem, x)) worst = std::max(worst, std::abs(*y - eval(phi, x)));
  }
  check.observed = worst;
  check.flagged = check.bound && worst > *check.bound * (1.0 + 1e-6);
  return check;
}

ResultTable result_table(const ProblemSpec& spec, const SolverConfig& config, std::span<const double> grid) {
  for (double x : grid) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("result_table: grid point outside [0, 1]");
  }
  SolverConfig adm_config = config;
  adm_config.c0_mode = C0Fixed{-1.0};
  const C0Optimum adm = optimize_c0(spec, adm_config);
  const C0Optimum oham = optimize_c0(spec, config);
  const Polynomial psi = partial_sum(build_series(spec, config, adm.c0), config.order);
  const Polynomial phi = partial_sum(build_series(spec, config, oham.c0), config.order);

  ResultTable table;
  table.order = config.order;
  table.c0_adm = adm.c0;
  table.c0_oham = oham.c0;
  table.strategy = config.p_strategy;
  table.residual_points = config.residual_points;
  table.E_adm = adm.report.E;
  table.E_oham = oham.report.E;

  std::vector<double> xs(grid.begin(), grid.end());
  std::sort(xs.begin(), xs.end());
  for (double x : xs) {
    ResultRow row;
    row.x = x;
    row.exact = exact_eval(spec, x);
    row.adm = eval(psi, x);
    row.oham = eval(phi, x);
    if (row.exact) {
      row.err_adm = std::abs(*row.exact - row.adm);
      row.err_oham = std::abs(*row.exact - row.oham);
    }
    table.rows.push_back(row);
  }
  return table;
}

std::vector<double> default_grid() {
  std::vector<double> grid(11);
  for (int i = 0; i <= 10; ++i) grid[i] = i / 10.0;
  return grid;
}

}  // namespace oham
