#include "oham/config.hpp"

#include <cmath>

#include "oham/error.hpp"

namespace oham {

std::string_view to_string(PStrategy s) noexcept {
  switch (s) {
    case PStrategy::Frozen: return "frozen";
    case PStrategy::PartialSum: return "partial-sum";
    case PStrategy::Expansion: return "expansion";
  }
  return "?";
}

std::optional<PStrategy> parse_strategy(std::string_view name) noexcept {
  if (name == "frozen") return PStrategy::Frozen;
  if (name == "partial-sum") return PStrategy::PartialSum;
  if (name == "expansion") return PStrategy::Expansion;
  return std::nullopt;
}

void validate(const SolverConfig& config) {
  if (config.order < 1) throw DomainError("order must be >= 1");
  if (config.residual_points < 2) throw DomainError("residual points M must be >= 2");
  if (!(config.bracket.lo < config.bracket.hi) || !(config.bracket.hi < 0.0) || !std::isfinite(config.bracket.lo)) {
    throw DomainError("c0 bracket must satisfy lo < hi < 0");
  }
  if (!(config.opt_tol > 0.0)) throw DomainError("optimizer tolerance must be > 0");
  if (config.scan_samples < 3) throw DomainError("c0 scan needs at least 3 samples");
  if (config.norm_grid < 2) throw DomainError("norm grid must have at least 2 points");
  if (const auto* fixed = std::get_if<C0Fixed>(&config.c0_mode)) {
    if (fixed->value == 0.0 || !std::isfinite(fixed->value)) throw DomainError("c0 must be finite and nonzero");
  }
}

}  // namespace oham
