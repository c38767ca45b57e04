#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oham/config.hpp"
#include "oham/problem.hpp"

namespace oham {

struct ScanSample {
  double c0 = 0.0;
  /// E_n(c0), empty when the series or residual could not be evaluated.
  std::optional<double> E;
  std::string error;

  friend bool operator==(const ScanSample&, const ScanSample&) = default;
};

/// Evaluates E_n at every c0, one after another. Reference implementation.
std::vector<ScanSample> scan_residuals_serial(const ProblemSpec& spec, const SolverConfig& config,
                                              std::span<const double> c0s);

/// Same results as scan_residuals_serial, samples distributed over OpenMP
/// threads. Each sample is an independent pure computation.
std::vector<ScanSample> scan_residuals_parallel(const ProblemSpec& spec, const SolverConfig& config,
                                                std::span<const double> c0s);

/// Dispatches on config.parallel_scan.
std::vector<ScanSample> scan_residuals(const ProblemSpec& spec, const SolverConfig& config,
                                       std::span<const double> c0s);

/// n equispaced points from lo to hi inclusive (n >= 2).
std::vector<double> linspace(double lo, double hi, int n);

/// Maximum OpenMP threads, 1 without OpenMP.
int max_threads() noexcept;

}  // namespace oham
