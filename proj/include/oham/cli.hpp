#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "oham/analysis.hpp"
#include "oham/config.hpp"
#include "oham/problem.hpp"
#include "oham/residual.hpp"
#include "oham/scan.hpp"

namespace oham::cli {

enum class Format { Csv, Markdown };

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kSolver = 3,
  kInfeasible = 4,
  kOutput = 5,
};

/// Fixed-width renderings. CSV uses 15 significant digits, markdown 9.
std::string format_csv_number(double v);
std::string format_md_number(double v);

std::string render_table(const ResultTable& table, Format format);
std::string render_sweep(std::span<const ScanSample> samples, Format format);
std::string render_residual(const ResidualReport& report, Format format);
std::string render_diagnostics(const ConvergenceReport& report, const BoundCheck& check, double c0,
                               PStrategy strategy, Format format);

/// Parses `a:b:step` into a[, a + step, ...], b. Throws DomainError.
std::vector<double> parse_grid(const std::string& text);

/// Runs one command line (args excludes the program name). Results go to
/// `out` or the --out file; failures print one line to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace oham::cli
