#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oham/poly.hpp"

namespace oham {

enum class ExactKind { None, Cubic, InvSqrt, InvLinear, SampleTable };

struct ExactSolution {
  ExactKind kind = ExactKind::None;
  /// (x, y) pairs for SampleTable, strictly increasing x within [0, 1].
  std::vector<std::pair<double, double>> samples;
  /// Path the samples were loaded from, kept for serialization.
  std::string source;
};

/// alpha(p) y'' = h(x) + lambda y^m on (0, 1), y(0) = a, y(1) = b,
/// p = integral of y over [0, 1], alpha(p) = p^gamma.
struct ProblemSpec {
  double a = 0.0;
  double b = 0.0;
  double gamma = 1.0;
  Polynomial forcing;
  double lambda = 0.0;
  unsigned power = 1;
  ExactSolution exact;
};

/// Throws InvariantError naming the offending field.
void validate(const ProblemSpec& spec);

/// The four reference problems, ids 1..4.
ProblemSpec builtin(int example_id);

/// p^gamma. Throws NonpositiveNonlocalCoefficient unless the value is finite
/// and strictly positive.
double alpha(const ProblemSpec& spec, double p);

std::optional<double> exact_eval(const ProblemSpec& spec, double x);

/// Exact solution as a polynomial when it is one (Cubic only).
std::optional<Polynomial> exact_polynomial(const ProblemSpec& spec);

/// Parses `key=value` problem text. Relative `exact=file:` paths resolve
/// against base_dir.
ProblemSpec parse_problem(std::string_view text, const std::filesystem::path& base_dir = {});
ProblemSpec load_problem(const std::filesystem::path& path);
/// Inverse of parse_problem; numbers are written with 17 significant digits.
std::string serialize_problem(const ProblemSpec& spec);

/// CSV with header `x,y`.
ExactSolution parse_sample_table(std::string_view csv);

}  // namespace oham
