#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace oham {

/// Dense real polynomial, coefficients stored in ascending degree.
///
/// Values are normalized on construction: trailing zero coefficients are
/// trimmed, so the zero polynomial has no coefficients at all. Every
/// coefficient must be finite.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<double> coeffs);
  explicit Polynomial(std::vector<double> coeffs);

  static Polynomial constant(double c);
  /// c * x^k
  static Polynomial monomial(std::size_t k, double c = 1.0);
  /// a + (b - a) x, the affine interpolant of the boundary values.
  static Polynomial line(double a, double b);

  std::span<const double> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^i; zero past the stored degree.
  double operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0.0; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree, with the zero polynomial reported as degree 0.
  std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void normalize();

  std::vector<double> coeffs_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial sub(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Polynomial& p, double c);
/// p^n by repeated squaring; p^0 = 1.
Polynomial pow(const Polynomial& p, unsigned n);

double eval(const Polynomial& p, double x) noexcept;
/// Exact integral over [0, 1].
double integrate01(const Polynomial& p) noexcept;
Polynomial differentiate(const Polynomial& p);
/// Formal antiderivative with zero constant term.
Polynomial antiderivative(const Polynomial& p);
/// max |p(i / (grid_size - 1))| over i = 0..grid_size-1. grid_size >= 2.
double max_abs_on_grid(const Polynomial& p, std::size_t grid_size);
/// Largest coefficient magnitude, 0 for the zero polynomial.
double max_abs_coeff(const Polynomial& p) noexcept;

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) { return sub(p, q); }
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return mul(p, q); }
inline Polynomial operator*(double c, const Polynomial& p) { return scale(p, c); }

/// Soft degree cap. Results above it are still returned in full; the first
/// such result in the process triggers the degree warning handler.
std::size_t degree_soft_cap() noexcept;
void set_degree_soft_cap(std::size_t cap) noexcept;
using DegreeWarningHandler = void (*)(std::size_t degree, std::size_t cap);
/// Replaces the handler (default writes one line to stderr). Passing nullptr
/// restores the default. Also re-arms the one-shot warning.
void set_degree_warning_handler(DegreeWarningHandler handler) noexcept;

}  // namespace oham
