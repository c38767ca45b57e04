#include "oham/series.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "oham/error.hpp"
#include "oham/kernel.hpp"

namespace oham {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Polynomial term_at(std::span<const Polynomial> terms, int j) {
  return j >= 0 && static_cast<std::size_t>(j) < terms.size() ? terms[j] : Polynomial{};
}

// First k+1 q-coefficients of the product of two truncated q-series.
std::vector<Polynomial> truncated_product(const std::vector<Polynomial>& lhs, const std::vector<Polynomial>& rhs,
                                          int k) {
  std::vector<Polynomial> out(k + 1);
  for (int n = 0; n <= k; ++n) {
    Polynomial acc;
    for (int j = 0; j <= n; ++j) {
      if (lhs[j].is_zero() || rhs[n - j].is_zero()) continue;
      acc = add(acc, mul(lhs[j], rhs[n - j]));
    }
    out[n] = std::move(acc);
  }
  return out;
}

double checked_alpha(const ProblemSpec& spec, double p, int stage) {
  try {
    return alpha(spec, p);
  } catch (const NonpositiveNonlocalCoefficient& e) {
    throw NonpositiveNonlocalCoefficient(e.p(), e.gamma(), stage);
  }
}

}  // namespace

double chi(int k) {
  if (k < 1) throw DomainError("chi: k must be >= 1");
  return k == 1 ? 0.0 : 1.0;
}

Polynomial initial_guess(const ProblemSpec& spec, const std::optional<Polynomial>& override_guess) {
  if (!override_guess) return Polynomial::line(spec.a, spec.b);
  const double left = eval(*override_guess, 0.0);
  const double right = eval(*override_guess, 1.0);
  if (std::abs(left - spec.a) > 1e-10 || std::abs(right - spec.b) > 1e-10) {
    throw DomainError("initial guess override must satisfy y0(0) = a and y0(1) = b");
  }
  return *override_guess;
}

Polynomial series_power_coefficient(std::span<const Polynomial> terms, unsigned m, int k) {
  if (k < 0) return {};
  if (m == 0) return k == 0 ? Polynomial::constant(1.0) : Polynomial{};
  std::vector<Polynomial> base(k + 1);
  for (int j = 0; j <= k; ++j) base[j] = term_at(terms, j);
  std::vector<Polynomial> acc = base;
  for (unsigned i = 1; i < m; ++i) acc = truncated_product(acc, base, k);
  return acc[k];
}

Polynomial homotopy_coefficient(const ProblemSpec& spec, std::span<const Polynomial> terms, int k) {
  Polynomial h = spec.forcing;
  if (spec.lambda == 0.0) return h;
  return add(h, scale(series_power_coefficient(terms, spec.power, k), spec.lambda));
}

Polynomial taylor_homotopy_coefficient(const ProblemSpec& spec, std::span<const Polynomial> terms, int k) {
  Polynomial h = k == 0 ? spec.forcing : Polynomial{};
  if (spec.lambda == 0.0) return h;
  return add(h, scale(series_power_coefficient(terms, spec.power, k), spec.lambda));
}

double compute_p(PStrategy strategy, std::span<const Polynomial> terms, int k) {
  if (terms.empty()) throw DomainError("compute_p: no terms");
  switch (strategy) {
    case PStrategy::Frozen:
    case PStrategy::Expansion:
      return integrate01(terms[0]);
    case PStrategy::PartialSum: {
      double p = 0.0;
      for (int j = 0; j <= k && static_cast<std::size_t>(j) < terms.size(); ++j) p += integrate01(terms[j]);
      return p;
    }
  }
  return kNaN;
}

std::vector<double> series_real_power(std::span<const double> p, double exponent, int count) {
  if (p.empty() || !(p[0] > 0.0)) throw DomainError("series_real_power: leading coefficient must be positive");
  std::vector<double> g(count, 0.0);
  if (count == 0) return g;
  auto coeff = [&](int i) { return static_cast<std::size_t>(i) < p.size() ? p[i] : 0.0; };
  g[0] = std::pow(p[0], exponent);
  for (int n = 1; n < count; ++n) {
    double acc = 0.0;
    for (int j = 1; j <= n; ++j) acc += ((exponent + 1.0) * j - n) * coeff(j) * g[n - j];
    g[n] = acc / (n * p[0]);
  }
  return g;
}

Polynomial green_term(const HomotopySeries& series, int k, SeriesStage& stage) {
  const ProblemSpec& spec = series.problem;
  std::vector<Polynomial> terms = terms_of(series);
  terms.resize(k);

  if (series.strategy != PStrategy::Expansion) {
    const double p = compute_p(series.strategy, terms, k - 1);
    const double a = checked_alpha(spec, p, k - 1);
    stage.p_prev = p;
    stage.alpha_prev = a;
    stage.H_prev = homotopy_coefficient(spec, terms, k - 1);
    return scale(apply_green(stage.H_prev), 1.0 / a);
  }

  const double p0 = integrate01(terms[0]);
  const double a0 = checked_alpha(spec, p0, k - 1);
  stage.p_prev = p0;
  stage.alpha_prev = a0;
  std::vector<double> p_series(k);
  for (int i = 0; i < k; ++i) p_series[i] = integrate01(terms[i]);
  // 1/alpha(p(q)) = p(q)^(-gamma), expanded around p_0
  std::vector<double> beta;
  try {
    beta = series_real_power(p_series, -spec.gamma, k);
  } catch (const DomainError&) {
    throw NonpositiveNonlocalCoefficient(p0, spec.gamma, k - 1);
  }
  beta[0] = 1.0 / a0;
  Polynomial sum;
  for (int l = 0; l <= k - 1; ++l) {
    Polynomial h_l = taylor_homotopy_coefficient(spec, terms, l);
    if (l == k - 1) stage.H_prev = h_l;
    sum = add(sum, scale(apply_green(h_l), beta[k - 1 - l]));
  }
  return sum;
}

SeriesStage deformation_step(const HomotopySeries& series, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > series.stages.size()) {
    throw DomainError("deformation_step: stages 0.." + std::to_string(k - 1) + " must be present");
  }
  SeriesStage stage;
  stage.k = k;
  const Polynomial green = green_term(series, k, stage);
  const Polynomial& prev = series.stages[k - 1].y;
  const double chi_k = chi(k);
  Polynomial bracket = sub(prev, green);
  if (chi_k == 0.0) bracket = sub(bracket, Polynomial::line(series.problem.a, series.problem.b));
  stage.y = add(scale(prev, chi_k), scale(bracket, series.c0));
  return stage;
}

HomotopySeries build_series(const ProblemSpec& spec, const SolverConfig& config, double c0) {
  if (c0 == 0.0 || !std::isfinite(c0)) throw DomainError("c0 must be finite and nonzero");
  if (config.order < 1) throw DomainError("order must be >= 1");
  HomotopySeries series;
  series.problem = spec;
  series.c0 = c0;
  series.strategy = config.p_strategy;
  series.stages.reserve(config.order + 1);
  SeriesStage first;
  first.k = 0;
  first.y = initial_guess(spec, config.initial_guess);
  first.p_prev = kNaN;
  first.alpha_prev = kNaN;
  series.stages.push_back(std::move(first));
  for (int k = 1; k <= config.order; ++k) {
    try {
      series.stages.push_back(deformation_step(series, k));
    } catch (const OverflowError& e) {
      throw OverflowError("stage " + std::to_string(k) + ": " + e.what());
    }
  }
  return series;
}

Polynomial partial_sum(const HomotopySeries& series, int upto) {
  if (upto < 0 || upto > series.order()) throw DomainError("partial_sum: index out of range");
  Polynomial sum;
  for (int k = 0; k <= upto; ++k) sum = add(sum, series.stages[k].y);
  return sum;
}

std::vector<Polynomial> terms_of(const HomotopySeries& series) {
  std::vector<Polynomial> terms;
  terms.reserve(series.stages.size());
  for (const auto& s : series.stages) terms.push_back(s.y);
  return terms;
}

}  // namespace oham
