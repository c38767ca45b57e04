#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oham/error.hpp"
#include "oham/kernel.hpp"
#include "oham/residual.hpp"
#include "oham/series.hpp"

using namespace oham;

namespace {

SolverConfig order(int n) {
  SolverConfig config;
  config.order = n;
  return config;
}

double analytic_c0() { return (-3.0 + std::sqrt(9.0 - 4.0 * std::cbrt(2.0))) / 2.0; }

}  // namespace

TEST_CASE("residual_operator examples") {
  const ProblemSpec ex1 = builtin(1);
  for (double x : {0.0, 0.2, 0.5, 0.9, 1.0}) CHECK(std::abs(residual_operator(ex1, Polynomial::monomial(3), x)) <= 1e-14);
  for (int id = 1; id <= 4; ++id) CHECK(residual_operator(builtin(id), initial_guess(builtin(id)), 0.0) == 0.0);
  const ProblemSpec ex2 = builtin(2);
  CHECK(std::abs(residual_operator(ex2, initial_guess(ex2), 0.5)) > 1e-3);
}

TEST_CASE("residual_polynomial uses the full nonlocal value") {
  const ProblemSpec ex1 = builtin(1);
  const Polynomial phi{0, 0.8, 0, 0.2};
  const Polynomial r = residual_polynomial(ex1, phi);
  const double p = integrate01(phi);
  // phi - x - alpha(p)^-1 K[h]
  const Polynomial expected = sub(sub(phi, Polynomial{0, 1}), scale(apply_green(ex1.forcing), 1.0 / std::cbrt(p)));
  CHECK(max_abs_coeff(sub(r, expected)) <= 1e-14);
}

TEST_CASE("discrete_residual examples") {
  const ProblemSpec ex1 = builtin(1);
  const ResidualReport exact = discrete_residual(ex1, Polynomial::monomial(3), 100);
  CHECK(exact.E <= 1e-28);
  CHECK(exact.pointwise.size() == 100);
  CHECK(exact.pointwise.back().first == 1.0);
  CHECK(exact.p_of_phi == doctest::Approx(0.25));
  CHECK(std::isnan(exact.c0));

  for (int id = 1; id <= 4; ++id) {
    const ResidualReport one = discrete_residual(builtin(id), initial_guess(builtin(id)), 1);
    CHECK(std::abs(one.E) <= 1e-28);
  }

  const ProblemSpec ex3 = builtin(3);
  const ResidualReport r = discrete_residual(ex3, initial_guess(ex3), 50);
  std::vector<double> squares;
  for (const auto& [x, v] : r.pointwise) squares.push_back(v * v);
  double forward = 0.0;
  for (double s : squares) forward += s;
  std::reverse(squares.begin(), squares.end());
  double backward = 0.0;
  for (double s : squares) backward += s;
  CHECK(std::abs(r.E - forward / 50) <= 1e-14 * r.E);
  CHECK(std::abs(r.E - backward / 50) <= 1e-14 * r.E);
}

TEST_CASE("exact-solution annihilation at 101 points") {
  const ProblemSpec ex1 = builtin(1);
  for (int i = 0; i <= 100; ++i) CHECK(std::abs(residual_operator(ex1, Polynomial::monomial(3), i / 100.0)) <= 1e-13);
}

TEST_CASE("optimize_c0 on the linear problem") {
  const C0Optimum opt = optimize_c0(builtin(1), order(2));
  CHECK(std::abs(opt.c0 - analytic_c0()) <= 1e-4);
  CHECK(opt.report.E <= 1e-18);
  CHECK(opt.report.c0 == opt.c0);
  CHECK_FALSE(opt.widened);
}

TEST_CASE("optimize_c0 on Example 2") {
  const ProblemSpec ex2 = builtin(2);
  const C0Optimum opt = optimize_c0(ex2, order(2));
  CHECK(opt.c0 > -1.0);
  CHECK(opt.c0 < -0.5);
  CHECK(opt.report.E <= residual_at(ex2, order(2), -1.0).E);
}

TEST_CASE("fixed c0 bypasses the search") {
  SolverConfig config = order(2);
  config.c0_mode = C0Fixed{-1.0};
  const C0Optimum opt = optimize_c0(builtin(3), config);
  CHECK(opt.c0 == -1.0);
  CHECK(opt.scan.empty());
  CHECK(opt.report.E == residual_at(builtin(3), order(2), -1.0).E);
}

TEST_CASE("optimum is never worse than any scan sample and E is nonnegative") {
  for (int id = 1; id <= 4; ++id) {
    const C0Optimum opt = optimize_c0(builtin(id), order(2));
    CHECK(opt.report.E >= 0.0);
    bool saw_adm = false;
    for (const ScanSample& s : opt.scan) {
      if (s.c0 == -1.0) saw_adm = true;
      REQUIRE(s.E.has_value());
      CHECK(*s.E >= 0.0);
      CHECK(opt.report.E <= *s.E);
    }
    CHECK(saw_adm);
    CHECK(opt.report.E <= residual_at(builtin(id), order(2), -1.0).E);
  }
}

TEST_CASE("optimal c0 is stable under the residual grid size") {
  SolverConfig coarse = order(2);
  coarse.residual_points = 50;
  SolverConfig fine = order(2);
  fine.residual_points = 200;
  const double a = optimize_c0(builtin(2), coarse).c0;
  const double b = optimize_c0(builtin(2), fine).c0;
  CHECK(std::abs(a - b) <= 1e-3);
}

TEST_CASE("a minimum on the bracket edge triggers one widening") {
  SolverConfig config = order(2);
  config.bracket = Bracket{-0.45, -0.05};
  const C0Optimum opt = optimize_c0(builtin(1), config);
  CHECK(opt.widened);
  CHECK(opt.report.E <= 1e-18);
  CHECK(opt.c0 >= -4.0);
  CHECK(opt.c0 <= -0.01);
}

TEST_CASE("optimization infeasible cases") {
  // minimizer far beyond the widened bracket
  ProblemSpec far;
  far.a = 1.0;
  far.b = 1.0;
  far.gamma = -1.0;
  far.forcing = Polynomial{-11.4};
  CHECK_THROWS_AS(optimize_c0(far, order(1)), OptimizationInfeasible);

  // every scan point leaves the domain of alpha
  ProblemSpec dead;
  dead.a = 0.0;
  dead.b = 0.0;
  dead.gamma = 1.0 / 3.0;
  dead.forcing = Polynomial{1};
  CHECK_THROWS_AS(optimize_c0(dead, order(2)), OptimizationInfeasible);
}
