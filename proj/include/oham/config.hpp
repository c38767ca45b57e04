#pragma once

#include <optional>
#include <string_view>
#include <variant>

#include "oham/poly.hpp"

namespace oham {

/// How the nonlocal scalar p_k entering stage k+1 is formed from the terms.
///
/// Frozen: p_k = integral of y_0 for all k.
/// PartialSum: p_k = integral of y_0 + ... + y_k.
/// Expansion: 1 / alpha(p) is expanded as a power series in the embedding
/// parameter around p_0 and convolved with the strict Taylor coefficients of
/// the nonlinearity.
enum class PStrategy { Frozen, PartialSum, Expansion };

std::string_view to_string(PStrategy s) noexcept;
/// Accepts frozen, partial-sum, expansion.
std::optional<PStrategy> parse_strategy(std::string_view name) noexcept;

struct C0Fixed {
  double value;
};
struct C0Optimize {};
using C0Mode = std::variant<C0Optimize, C0Fixed>;

struct Bracket {
  double lo = -1.95;
  double hi = -0.05;
};

struct SolverConfig {
  int order = 2;
  C0Mode c0_mode = C0Optimize{};
  PStrategy p_strategy = PStrategy::Frozen;
  /// Residual points x_k = k / M, k = 1..M.
  int residual_points = 100;
  Bracket bracket;
  /// Golden-section stops once the bracket is narrower than this.
  double opt_tol = 1e-8;
  /// Equispaced c0 samples in the coarse scan; -1 is always added.
  int scan_samples = 39;
  /// Grid for sup-norm estimates.
  int norm_grid = 201;
  /// Replaces a + (b - a) x as y_0; must match the boundary values.
  std::optional<Polynomial> initial_guess;
  /// Run the coarse c0 scan on all OpenMP threads.
  bool parallel_scan = true;
};

/// Throws DomainError on an invalid field.
void validate(const SolverConfig& config);

}  // namespace oham
