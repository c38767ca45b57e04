#include "oham/poly.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>

#include "oham/error.hpp"

namespace oham {
namespace {

std::atomic<std::size_t> g_soft_cap{200};
std::atomic<bool> g_warned{false};

void default_degree_warning(std::size_t degree, std::size_t cap) {
  std::fprintf(stderr, "warning: polynomial degree %zu exceeds soft cap %zu\n", degree, cap);
}

std::atomic<DegreeWarningHandler> g_handler{&default_degree_warning};

void check_degree(std::size_t degree) {
  if (degree > g_soft_cap.load(std::memory_order_relaxed) && !g_warned.exchange(true)) {
    g_handler.load()(degree, g_soft_cap.load());
  }
}

}  // namespace

Polynomial::Polynomial(std::initializer_list<double> coeffs) : coeffs_(coeffs) { normalize(); }

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void Polynomial::normalize() {
  for (double c : coeffs_) {
    if (!std::isfinite(c)) throw OverflowError("polynomial coefficient is not finite");
  }
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
  if (!coeffs_.empty()) check_degree(coeffs_.size() - 1);
}

Polynomial Polynomial::constant(double c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(std::size_t k, double c) {
  std::vector<double> v(k + 1, 0.0);
  v[k] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::line(double a, double b) { return Polynomial({a, b - a}); }

Polynomial add(const Polynomial& p, const Polynomial& q) {
  std::vector<double> out(std::max(p.size(), q.size()), 0.0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p[i] + q[i];
  return Polynomial(std::move(out));
}

Polynomial sub(const Polynomial& p, const Polynomial& q) {
  std::vector<double> out(std::max(p.size(), q.size()), 0.0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p[i] - q[i];
  return Polynomial(std::move(out));
}

Polynomial mul(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto a = p.coeffs();
  const auto b = q.coeffs();
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return Polynomial(std::move(out));
}

Polynomial scale(const Polynomial& p, double c) {
  if (!std::isfinite(c)) throw DomainError("scale factor is not finite");
  std::vector<double> out(p.coeffs().begin(), p.coeffs().end());
  for (double& v : out) v *= c;
  return Polynomial(std::move(out));
}

Polynomial pow(const Polynomial& p, unsigned n) {
  Polynomial result = Polynomial::constant(1.0);
  Polynomial base = p;
  while (n > 0) {
    if (n & 1U) result = mul(result, base);
    n >>= 1U;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

double eval(const Polynomial& p, double x) noexcept {
  const auto c = p.coeffs();
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double integrate01(const Polynomial& p) noexcept {
  const auto c = p.coeffs();
  double acc = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) acc += c[i] / static_cast<double>(i + 1);
  return acc;
}

Polynomial differentiate(const Polynomial& p) {
  const auto c = p.coeffs();
  if (c.size() <= 1) return {};
  std::vector<double> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * static_cast<double>(i);
  return Polynomial(std::move(out));
}

Polynomial antiderivative(const Polynomial& p) {
  const auto c = p.coeffs();
  if (c.empty()) return {};
  std::vector<double> out(c.size() + 1, 0.0);
  for (std::size_t i = 0; i < c.size(); ++i) out[i + 1] = c[i] / static_cast<double>(i + 1);
  return Polynomial(std::move(out));
}

double max_abs_on_grid(const Polynomial& p, std::size_t grid_size) {
  if (grid_size < 2) throw DomainError("max_abs_on_grid needs at least 2 grid points");
  const double step = 1.0 / static_cast<double>(grid_size - 1);
  double best = 0.0;
  for (std::size_t i = 0; i < grid_size; ++i) {
    const double x = i + 1 == grid_size ? 1.0 : static_cast<double>(i) * step;
    best = std::max(best, std::abs(eval(p, x)));
  }
  return best;
}

double max_abs_coeff(const Polynomial& p) noexcept {
  double best = 0.0;
  for (double c : p.coeffs()) best = std::max(best, std::abs(c));
  return best;
}

std::size_t degree_soft_cap() noexcept { return g_soft_cap.load(); }

void set_degree_soft_cap(std::size_t cap) noexcept { g_soft_cap.store(cap); }

void set_degree_warning_handler(DegreeWarningHandler handler) noexcept {
  g_handler.store(handler ? handler : &default_degree_warning);
  g_warned.store(false);
}

}  // namespace oham
