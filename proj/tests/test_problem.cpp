#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "oham/error.hpp"
#include "oham/problem.hpp"
#include "oracles.hpp"

using namespace oham;

namespace {

double second_derivative(const ProblemSpec& spec, double x) {
  switch (spec.exact.kind) {
    case ExactKind::Cubic: return 6.0 * x;
    case ExactKind::InvSqrt: return 0.75 * std::pow(1.0 + x, -2.5);
    case ExactKind::InvLinear: return 2.0 * std::pow(1.0 + x, -3.0);
    default: return std::nan("");
  }
}

}  // namespace

TEST_CASE("builtin problems") {
  CHECK(builtin(1).gamma == doctest::Approx(1.0 / 3.0));
  CHECK(builtin(1).forcing[1] == doctest::Approx(3.779763).epsilon(1e-7));
  CHECK(builtin(2).b == doctest::Approx(0.707106781).epsilon(1e-9));
  CHECK(std::abs(builtin(2).lambda - 3.0 / (4.0 * (2.0 * std::sqrt(2.0) - 2.0))) < 1e-15);
  CHECK(std::abs(builtin(2).lambda - 0.905330) < 1e-6);
  CHECK(builtin(3).lambda == doctest::Approx(0.621320).epsilon(1e-6));
  CHECK(std::abs(builtin(4).lambda - 2.0 / std::pow(std::log(2.0), 2)) < 1e-12);
  CHECK(std::abs(builtin(4).lambda - 4.162738) < 1e-6);
  CHECK(builtin(4).power == 3);
  CHECK_THROWS_AS(builtin(0), DomainError);
  CHECK_THROWS_AS(builtin(5), DomainError);
  for (int id = 1; id <= 4; ++id) CHECK_NOTHROW(validate(builtin(id)));
}

TEST_CASE("alpha") {
  CHECK(alpha(builtin(1), 0.5) == doctest::Approx(0.793701).epsilon(1e-6));
  CHECK(alpha(builtin(3), 0.3) == doctest::Approx(0.3));
  CHECK(alpha(builtin(4), 0.5) == doctest::Approx(4.0));
}

TEST_CASE("alpha rejects nonpositive nonlocal values") {
  CHECK_THROWS_AS(alpha(builtin(1), -0.2), NonpositiveNonlocalCoefficient);
  CHECK_THROWS_AS(alpha(builtin(2), 0.0), NonpositiveNonlocalCoefficient);
  CHECK_THROWS_AS(alpha(builtin(3), -0.5), NonpositiveNonlocalCoefficient);
  try {
    alpha(builtin(1), -0.2);
  } catch (const NonpositiveNonlocalCoefficient& e) {
    CHECK(e.p() == -0.2);
    CHECK_FALSE(e.stage().has_value());
  }
  // a nonnegative even power of a negative p is still positive
  ProblemSpec spec = builtin(3);
  spec.gamma = 2.0;
  CHECK(alpha(spec, -0.5) == doctest::Approx(0.25));
}

TEST_CASE("exact_eval") {
  CHECK(*exact_eval(builtin(2), 0.5) == doctest::Approx(0.816496581).epsilon(1e-9));
  CHECK(*exact_eval(builtin(1), 0.0) == 0.0);
  CHECK(*exact_eval(builtin(4), 1.0) == 0.5);
  ProblemSpec none = builtin(1);
  none.exact.kind = ExactKind::None;
  CHECK_FALSE(exact_eval(none, 0.5).has_value());
}

TEST_CASE("exact solutions satisfy boundary values and the equation") {
  for (int id = 1; id <= 4; ++id) {
    const ProblemSpec spec = builtin(id);
    CHECK(std::abs(*exact_eval(spec, 0.0) - spec.a) <= 1e-12);
    CHECK(std::abs(*exact_eval(spec, 1.0) - spec.b) <= 1e-12);
    const double p = oham::testing::gauss64().integrate([&](double s) { return *exact_eval(spec, s); }, 0.0, 1.0);
    const double a = alpha(spec, p);
    for (int i = 0; i <= 10; ++i) {
      const double x = i / 10.0;
      const double y = *exact_eval(spec, x);
      const double rhs = eval(spec.forcing, x) + spec.lambda * std::pow(y, spec.power);
      CHECK(std::abs(a * second_derivative(spec, x) - rhs) <= 1e-9);
    }
  }
}

TEST_CASE("parse_problem reproduces builtin 1") {
  const ProblemSpec spec = parse_problem(
      "a=0\nb=1\ngamma=0.3333333333333333\nforcing=0,3.7797631496846193\nlambda=0\npower=1\nexact=cubic");
  const ProblemSpec ref = builtin(1);
  CHECK(std::abs(spec.a - ref.a) <= 1e-12);
  CHECK(std::abs(spec.b - ref.b) <= 1e-12);
  CHECK(std::abs(spec.gamma - ref.gamma) <= 1e-12);
  CHECK(oham::testing::max_coeff_diff(spec.forcing, ref.forcing) <= 1e-12);
  CHECK(spec.lambda == ref.lambda);
  CHECK(spec.power == ref.power);
  CHECK(spec.exact.kind == ExactKind::Cubic);
}

TEST_CASE("parse_problem diagnostics") {
  SUBCASE("missing b") {
    try {
      parse_problem("a=0\ngamma=1\nforcing=1\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.field() == "b");
      CHECK(std::string(e.what()).find("b") != std::string::npos);
    }
  }
  SUBCASE("even power with nonzero lambda") {
    try {
      parse_problem("a=1\nb=1\ngamma=1\nlambda=2\npower=4\n");
      FAIL("expected an invariant error");
    } catch (const InvariantError& e) {
      CHECK(e.field() == "power");
    }
  }
  SUBCASE("unknown key names its line") {
    try {
      parse_problem("a=1\nb=1\n# comment\ngamma=1\nmu=3\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 5);
      CHECK(e.field() == "mu");
    }
  }
  CHECK_THROWS_AS(parse_problem("a=1\nb=x\ngamma=1\nforcing=1"), ParseError);
  CHECK_THROWS_AS(parse_problem("a=1\na=2\nb=1\ngamma=1\nforcing=1"), ParseError);
  CHECK_THROWS_AS(parse_problem("a=1\nb=1\ngamma=1\nforcing=1\nexact=parabola"), ParseError);
  CHECK_THROWS_AS(parse_problem("a=1\nb=1 junk\ngamma=1\nforcing=1"), ParseError);
  CHECK_THROWS_AS(parse_problem("a=-1\nb=1\ngamma=1\nforcing=1"), InvariantError);
  CHECK_THROWS_AS(parse_problem("a=1\nb=1\ngamma=1\nlambda=0\n"), InvariantError);
  CHECK_THROWS_AS(parse_problem("a=1\nb=1\ngamma=1\nforcing=1\npower=1.5"), ParseError);
}

TEST_CASE("comments and whitespace") {
  const ProblemSpec spec = parse_problem("# header\n a = 1 \nb=0.5   # right end\n\ngamma=-2\nlambda=4\npower=3\n");
  CHECK(spec.a == 1.0);
  CHECK(spec.b == 0.5);
  CHECK(spec.forcing.is_zero());
  CHECK(spec.exact.kind == ExactKind::None);
}

TEST_CASE("builtins round-trip through serialize and parse") {
  for (int id = 1; id <= 4; ++id) {
    const ProblemSpec ref = builtin(id);
    const ProblemSpec back = parse_problem(serialize_problem(ref));
    CHECK(back.a == ref.a);
    CHECK(back.b == ref.b);
    CHECK(back.gamma == ref.gamma);
    CHECK(back.lambda == ref.lambda);
    CHECK(back.power == ref.power);
    CHECK(back.forcing == ref.forcing);
    CHECK(back.exact.kind == ref.exact.kind);
  }
}

TEST_CASE("sample table exact solutions") {
  const auto dir = std::filesystem::temp_directory_path() / "oham_problem_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream csv(dir / "samples.csv");
    csv << "x,y\n0,1\n0.5,0.8\n1,0.5\n";
  }
  const ProblemSpec spec = parse_problem("a=1\nb=0.5\ngamma=-2\nlambda=4.1\npower=3\nexact=file:samples.csv\n", dir);
  CHECK(spec.exact.kind == ExactKind::SampleTable);
  CHECK(*exact_eval(spec, 0.25) == doctest::Approx(0.9));
  CHECK(*exact_eval(spec, 1.0) == 0.5);
  CHECK(serialize_problem(spec).find("exact=file:samples.csv") != std::string::npos);

  CHECK_THROWS_AS(parse_sample_table("x,z\n0,1\n"), ParseError);
  ProblemSpec bad = builtin(2);
  bad.exact = parse_sample_table("x,y\n0.5,1\n0.2,1\n");
  CHECK_THROWS_AS(validate(bad), InvariantError);
  CHECK_THROWS_AS(parse_problem("a=1\nb=1\ngamma=1\nforcing=1\nexact=file:missing.csv\n", dir), ParseError);
}
