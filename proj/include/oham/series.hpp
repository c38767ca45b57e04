#pragma once

#include <optional>
#include <span>
#include <vector>

#include "oham/config.hpp"
#include "oham/poly.hpp"
#include "oham/problem.hpp"

namespace oham {

/// One term of the homotopy series and the quantities that produced it.
struct SeriesStage {
  int k = 0;
  Polynomial y;
  /// Homotopy-derivative coefficient H_{k-1} fed into this stage (zero at k = 0).
  Polynomial H_prev;
  /// p_{k-1} and alpha(p_{k-1}); under Expansion these are the base point p_0
  /// and alpha(p_0). NaN at k = 0.
  double p_prev = 0.0;
  double alpha_prev = 0.0;
};

struct HomotopySeries {
  ProblemSpec problem;
  double c0 = -1.0;
  PStrategy strategy = PStrategy::Frozen;
  /// stages[0] holds y_0; stages.size() == order + 1 once built.
  std::vector<SeriesStage> stages;

  int order() const noexcept { return static_cast<int>(stages.size()) - 1; }
};

/// 0 for k = 1, 1 for k >= 2.
double chi(int k);

/// a + (b - a) x, or the override after checking it meets both boundary
/// values to 1e-10.
Polynomial initial_guess(const ProblemSpec& spec, const std::optional<Polynomial>& override_guess = std::nullopt);

/// Coefficient of q^k in (sum_j terms[j] q^j)^m; missing terms count as zero.
Polynomial series_power_coefficient(std::span<const Polynomial> terms, unsigned m, int k);

/// H_k = h + lambda * [q^k] (sum y_j q^j)^m. The forcing is carried at every k.
Polynomial homotopy_coefficient(const ProblemSpec& spec, std::span<const Polynomial> terms, int k);

/// Strict Taylor reading: forcing only at k = 0. Used by the Expansion strategy.
Polynomial taylor_homotopy_coefficient(const ProblemSpec& spec, std::span<const Polynomial> terms, int k);

/// p_k under the given strategy. Expansion returns the base point p_0.
double compute_p(PStrategy strategy, std::span<const Polynomial> terms, int k);

/// q-Taylor coefficients 0..count-1 of (sum_i p[i] q^i)^exponent, p[0] > 0.
std::vector<double> series_real_power(std::span<const double> p, double exponent, int count);

/// The nonlocal Green term of stage k: alpha(p_{k-1})^{-1} K[H_{k-1}] for
/// Frozen and PartialSum, the convolved expansion for Expansion. Fills the
/// bookkeeping fields of `stage`.
Polynomial green_term(const HomotopySeries& series, int k, SeriesStage& stage);

/// Computes y_k from stages 0..k-1:
/// y_k = chi_k y_{k-1} + c0 [y_{k-1} - (1 - chi_k)(a + (b - a) x) - green term].
SeriesStage deformation_step(const HomotopySeries& series, int k);

HomotopySeries build_series(const ProblemSpec& spec, const SolverConfig& config, double c0);

/// y_0 + ... + y_upto.
Polynomial partial_sum(const HomotopySeries& series, int upto);

/// The y_k of every stage, in order.
std::vector<Polynomial> terms_of(const HomotopySeries& series);

}  // namespace oham
