#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace oham {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A polynomial operation produced a non-finite coefficient.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed problem configuration or sample table.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string field, int line = 0)
      : Error(message), field_(std::move(field)), line_(line) {}

  const std::string& field() const noexcept { return field_; }
  int line() const noexcept { return line_; }

 private:
  std::string field_;
  int line_;
};

/// A well-formed problem whose fields violate a class invariant.
class InvariantError : public Error {
 public:
  InvariantError(const std::string& message, std::string field)
      : Error(message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// The series produced a nonlocal value p for which alpha(p) = p^gamma is
/// not a finite positive number.
class NonpositiveNonlocalCoefficient : public Error {
 public:
  NonpositiveNonlocalCoefficient(double p, double gamma, std::optional<int> stage = std::nullopt);

  double p() const noexcept { return p_; }
  double gamma() const noexcept { return gamma_; }
  std::optional<int> stage() const noexcept { return stage_; }

 private:
  double p_;
  double gamma_;
  std::optional<int> stage_;
};

/// Every candidate c0 failed, or the minimizer stayed on the search edge.
class OptimizationInfeasible : public Error {
 public:
  using Error::Error;
};

}  // namespace oham
