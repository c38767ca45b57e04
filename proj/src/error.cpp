#include "oham/error.hpp"

#include <cstdio>

namespace oham {
namespace {

std::string describe(double p, double gamma, std::optional<int> stage) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "nonlocal coefficient alpha(p) = p^%.6g is not positive at p = %.17g", gamma, p);
  std::string out = buf;
  if (stage) out += " (stage " + std::to_string(*stage) + ")";
  return out;
}

}  // namespace

NonpositiveNonlocalCoefficient::NonpositiveNonlocalCoefficient(double p, double gamma, std::optional<int> stage)
    : Error(describe(p, gamma, stage)), p_(p), gamma_(gamma), stage_(stage) {}

}  // namespace oham
