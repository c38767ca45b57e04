#include "oham/scan.hpp"

#include <exception>

#include "oham/error.hpp"
#include "oham/residual.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace oham {
namespace {

ScanSample evaluate(const ProblemSpec& spec, const SolverConfig& config, double c0) {
  ScanSample sample;
  sample.c0 = c0;
  try {
    sample.E = residual_at(spec, config, c0).E;
  } catch (const std::exception& e) {
    sample.error = e.what();
  }
  return sample;
}

}  // namespace

std::vector<ScanSample> scan_residuals_serial(const ProblemSpec& spec, const SolverConfig& config,
                                              std::span<const double> c0s) {
  std::vector<ScanSample> out;
  out.reserve(c0s.size());
  for (double c0 : c0s) out.push_back(evaluate(spec, config, c0));
  return out;
}

std::vector<ScanSample> scan_residuals_parallel(const ProblemSpec& spec, const SolverConfig& config,
                                                std::span<const double> c0s) {
  std::vector<ScanSample> out(c0s.size());
  const auto n = static_cast<long>(c0s.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long i = 0; i < n; ++i) out[i] = evaluate(spec, config, c0s[i]);
  return out;
}

std::vector<ScanSample> scan_residuals(const ProblemSpec& spec, const SolverConfig& config,
                                       std::span<const double> c0s) {
  return config.parallel_scan ? scan_residuals_parallel(spec, config, c0s)
                              : scan_residuals_serial(spec, config, c0s);
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 2) throw DomainError("linspace needs at least 2 points");
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  out.back() = hi;
  return out;
}

int max_threads() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace oham
