#include "oham/kernel.hpp"

#include <vector>

#include "oham/error.hpp"

namespace oham {

double green_eval(double x, double s) {
  if (!(x >= 0.0 && x <= 1.0 && s >= 0.0 && s <= 1.0)) {
    throw DomainError("green_eval: (x, s) outside the unit square");
  }
  return x <= s ? x * (s - 1.0) : s * (x - 1.0);
}

Polynomial apply_green(const Polynomial& f) {
  const auto c = f.coeffs();
  if (c.empty()) return {};
  std::vector<double> u(c.size() + 2, 0.0);
  // x F(1) - x A(1) with F = antiderivative of f and A = antiderivative of s f
  double slope = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) {
    const double d = static_cast<double>(i);
    slope -= c[i] / ((d + 1.0) * (d + 2.0));
  }
  u[1] = slope;
  for (std::size_t k = 2; k < u.size(); ++k) {
    const double d = static_cast<double>(k);
    u[k] = c[k - 2] / (d * (d - 1.0));
  }
  return Polynomial(std::move(u));
}

}  // namespace oham
