#pragma once

#include <utility>
#include <vector>

#include "oham/config.hpp"
#include "oham/poly.hpp"
#include "oham/problem.hpp"
#include "oham/scan.hpp"

namespace oham {

struct ResidualReport {
  double c0 = 0.0;
  /// Mean of squared pointwise residuals.
  double E = 0.0;
  /// (x_k, N[phi](x_k)) for k = 1..M.
  std::vector<std::pair<double, double>> pointwise;
  /// integral of phi over [0, 1], the p used inside N.
  double p_of_phi = 0.0;
};

/// N[phi] = phi - (a + (b - a) x) - alpha(p[phi])^{-1} K[h + lambda phi^m]
/// as a polynomial, with p[phi] the full integral of phi.
Polynomial residual_polynomial(const ProblemSpec& spec, const Polynomial& phi);

double residual_operator(const ProblemSpec& spec, const Polynomial& phi, double x);

/// Averaged squared residual on x_k = k / M, k = 1..M. The c0 field is left NaN.
ResidualReport discrete_residual(const ProblemSpec& spec, const Polynomial& phi, int M);

/// Builds the order-n series at c0 and reports the residual of its partial sum.
ResidualReport residual_at(const ProblemSpec& spec, const SolverConfig& config, double c0);

struct C0Optimum {
  double c0 = 0.0;
  ResidualReport report;
  /// Coarse scan samples, including the widened rescan when one was needed.
  std::vector<ScanSample> scan;
  bool widened = false;
};

/// Minimizes c0 -> E_n(c0): coarse scan of the bracket (with -1 injected),
/// golden-section refinement of every local minimum of the scan, then a few
/// parabolic steps around the winner that are kept only when they lower E. Under C0Fixed the
/// fixed value is evaluated and returned without search.
C0Optimum optimize_c0(const ProblemSpec& spec, const SolverConfig& config);

}  // namespace oham
