#include "oham/residual.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "oham/error.hpp"
#include "oham/kernel.hpp"
#include "oham/series.hpp"

namespace oham {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const Bracket kWideBracket{-4.0, -0.01};

double objective(const ProblemSpec& spec, const SolverConfig& config, double c0) {
  try {
    return residual_at(spec, config, c0).E;
  } catch (const Error&) {
    return kInf;
  }
}

std::vector<double> scan_points(const Bracket& bracket, int samples) {
  std::vector<double> c0s = linspace(bracket.lo, bracket.hi, samples);
  if (bracket.lo < -1.0 && -1.0 < bracket.hi) {
    auto near = std::find_if(c0s.begin(), c0s.end(), [](double c) { return std::abs(c + 1.0) < 1e-12; });
    if (near != c0s.end()) {
      *near = -1.0;
    } else {
      c0s.push_back(-1.0);
      std::sort(c0s.begin(), c0s.end());
    }
  }
  return c0s;
}

// Index of the smallest E; ties go to the smaller |c0|. -1 if every sample failed.
int best_index(const std::vector<ScanSample>& scan) {
  int best = -1;
  for (int i = 0; i < static_cast<int>(scan.size()); ++i) {
    if (!scan[i].E) continue;
    if (best < 0 || *scan[i].E < *scan[best].E ||
        (*scan[i].E == *scan[best].E && std::abs(scan[i].c0) < std::abs(scan[best].c0))) {
      best = i;
    }
  }
  return best;
}

struct Point {
  double c0;
  double E;
};

void consider(Point& best, double c0, double E) {
  if (E < best.E || (E == best.E && std::abs(c0) < std::abs(best.c0))) best = {c0, E};
}

}  // namespace

Polynomial residual_polynomial(const ProblemSpec& spec, const Polynomial& phi) {
  const double p = integrate01(phi);
  const double a = alpha(spec, p);
  Polynomial f = spec.forcing;
  if (spec.lambda != 0.0) f = add(f, scale(pow(phi, spec.power), spec.lambda));
  return sub(sub(phi, Polynomial::line(spec.a, spec.b)), scale(apply_green(f), 1.0 / a));
}

double residual_operator(const ProblemSpec& spec, const Polynomial& phi, double x) {
  return eval(residual_polynomial(spec, phi), x);
}

ResidualReport discrete_residual(const ProblemSpec& spec, const Polynomial& phi, int M) {
  if (M < 1) throw DomainError("discrete_residual: M must be >= 1");
  const Polynomial N = residual_polynomial(spec, phi);
  ResidualReport report;
  report.c0 = std::numeric_limits<double>::quiet_NaN();
  report.p_of_phi = integrate01(phi);
  report.pointwise.reserve(M);
  double sum = 0.0;
  for (int k = 1; k <= M; ++k) {
    const double x = k == M ? 1.0 : static_cast<double>(k) / M;
    const double r = eval(N, x);
    report.pointwise.emplace_back(x, r);
    sum += r * r;
  }
  report.E = sum / M;
  return report;
}

ResidualReport residual_at(const ProblemSpec& spec, const SolverConfig& config, double c0) {
  const HomotopySeries series = build_series(spec, config, c0);
  ResidualReport report = discrete_residual(spec, partial_sum(series, series.order()), config.residual_points);
  report.c0 = c0;
  return report;
}

C0Optimum optimize_c0(const ProblemSpec& spec, const SolverConfig& config) {
  validate(config);
  C0Optimum result;
  if (const auto* fixed = std::get_if<C0Fixed>(&config.c0_mode)) {
    result.c0 = fixed->value;
    result.report = residual_at(spec, config, fixed->value);
    return result;
  }

  Bracket bracket = config.bracket;
  std::vector<double> c0s = scan_points(bracket, config.scan_samples);
  result.scan = scan_residuals(spec, config, c0s);
  int best = best_index(result.scan);
  if (best < 0) throw OptimizationInfeasible("every c0 in the scan failed: " + result.scan.front().error);

  auto on_edge = [](int i, std::size_t n) { return i == 0 || i + 1 == static_cast<int>(n); };
  if (on_edge(best, result.scan.size())) {
    const double step = (bracket.hi - bracket.lo) / (config.scan_samples - 1);
    bracket = {std::min(bracket.lo, kWideBracket.lo), std::max(bracket.hi, kWideBracket.hi)};
    if (bracket.hi >= 0.0) bracket.hi = kWideBracket.hi;
    const int samples = std::max(config.scan_samples, static_cast<int>(std::ceil((bracket.hi - bracket.lo) / step)) + 1);
    c0s = scan_points(bracket, samples);
    result.scan = scan_residuals(spec, config, c0s);
    result.widened = true;
    best = best_index(result.scan);
    if (best < 0) throw OptimizationInfeasible("every c0 in the widened scan failed");
    if (on_edge(best, result.scan.size())) {
      throw OptimizationInfeasible("E_n is smallest at the edge of the widened c0 bracket (c0 = " +
                                   std::to_string(result.scan[best].c0) + ")");
    }
  }

  Point best_point{result.scan[best].c0, *result.scan[best].E};
  auto f = [&](double c0) {
    const double E = objective(spec, config, c0);
    consider(best_point, c0, E);
    return E;
  };

  // golden-section on every interior local minimum of the scan
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto refine = [&](double lo, double hi) {
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    while (hi - lo > config.opt_tol) {
      if (fc < fd) {
        hi = d;
        d = c;
        fd = fc;
        c = hi - inv_phi * (hi - lo);
        fc = f(c);
      } else {
        lo = c;
        c = d;
        fc = fd;
        d = lo + inv_phi * (hi - lo);
        fd = f(d);
      }
    }
  };
  auto value = [](const ScanSample& s) { return s.E ? *s.E : kInf; };
  for (std::size_t i = 1; i + 1 < result.scan.size(); ++i) {
    const double e = value(result.scan[i]);
    if (std::isfinite(e) && e <= value(result.scan[i - 1]) && e <= value(result.scan[i + 1])) {
      refine(result.scan[i - 1].c0, result.scan[i + 1].c0);
    }
  }

  // parabolic polish around the best point
  double h = config.opt_tol;
  for (int iter = 0; iter < 4 && h > 0.0; ++iter) {
    const double x = best_point.c0;
    const double e0 = best_point.E;
    const double em = f(x - h);
    const double ep = f(x + h);
    const double curvature = ep - 2.0 * e0 + em;
    if (!(curvature > 0.0) || !std::isfinite(curvature)) break;
    const double v = x - h * (ep - em) / (2.0 * curvature);
    if (!std::isfinite(v) || std::abs(v - x) > 10.0 * h || v >= 0.0) break;
    const double before = best_point.E;
    f(v);
    if (!(best_point.E < before)) break;
    h = std::max(std::abs(v - x), 4.0 * std::numeric_limits<double>::epsilon() * std::abs(v));
  }

  result.c0 = best_point.c0;
  result.report = residual_at(spec, config, result.c0);
  return result;
}

}  // namespace oham
