#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <stdexcept>

#include "adaptea/objectives.hpp"
#include "adaptea/random.hpp"

using namespace adaptea;

namespace {

std::vector<double> random_point(const ObjectiveSpec& spec, Random& rng) {
  std::vector<double> x(spec.dimension);
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = rng.uniform(spec.bounds.lower[i], spec.bounds.upper[i]);
  }
  return x;
}

}  // namespace

TEST_CASE("catalog matches the problem table") {
  const auto& catalog = problem_catalog();
  REQUIRE(catalog.size() == 10);
  const std::size_t dims[] = {2, 20, 10, 10, 2, 5, 4, 10, 25, 4};
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const auto& spec = catalog[i];
    CHECK(static_cast<std::size_t>(spec.id) == i + 1);
    CHECK(spec.dimension == dims[i]);
    CHECK(spec.bounds.size() == spec.dimension);
    CHECK(spec.optimizer.size() == spec.dimension);
    CHECK(spec.optimum_value == 0.0);
    for (std::size_t k = 0; k < spec.dimension; ++k) {
      CHECK(spec.bounds.lower[k] < spec.bounds.upper[k]);
    }
  }
}

TEST_CASE("problem ids round-trip through text") {
  for (const auto& spec : problem_catalog()) {
    CHECK(parse_problem_id(to_string(spec.id)) == spec.id);
  }
  CHECK_FALSE(parse_problem_id("F11").has_value());
  CHECK_FALSE(parse_problem_id("f2").has_value());
}

TEST_CASE("known values") {
  SUBCASE("Rastrigin and Ackley vanish at the origin") {
    CHECK(evaluate(problem(ProblemId::F2), std::vector<double>(20, 0.0)) == doctest::Approx(0.0));
    CHECK(std::abs(evaluate(problem(ProblemId::F9), std::vector<double>(25, 0.0))) <= 1e-12);
  }
  SUBCASE("Rastrigin with one unit coordinate") {
    // 10n + sum(x^2 - 10 cos 2 pi x) = 200 - 9 - 190 = 1
    std::vector<double> x(20, 0.0);
    x[0] = 1.0;
    CHECK(evaluate(problem(ProblemId::F2), x) == doctest::Approx(-1.0).epsilon(1e-12));
  }
  SUBCASE("published minima of the shifted problems") {
    CHECK(problem(ProblemId::F1).shift == doctest::Approx(0.998003837794449).epsilon(1e-13));
    CHECK(std::abs(problem(ProblemId::F3).shift) < 1e-9);
    // Watson n = 5 minimum from an independent least-squares solve.
    CHECK(problem(ProblemId::F6).shift == doctest::Approx(0.0171543662690186).epsilon(1e-12));
    CHECK(problem(ProblemId::F10).shift == 0.0);
    CHECK(problem(ProblemId::F8).shift == 0.0);
    CHECK(problem(ProblemId::F7).shift == 0.0);
  }
  SUBCASE("Griewank and Bohachevsky at known points") {
    std::vector<double> x(10, 0.0);
    x[0] = std::numbers::pi * 2.0;  // cos(2 pi) = 1 leaves the quadratic term
    CHECK(evaluate(problem(ProblemId::F4), x) ==
          doctest::Approx(-(4.0 * std::numbers::pi * std::numbers::pi / 4000.0)).epsilon(1e-12));
    CHECK(evaluate(problem(ProblemId::F5), std::vector<double>{1.0, 0.0}) ==
          doctest::Approx(-1.6).epsilon(1e-12));
  }
}

TEST_CASE("every optimizer scores 0 and no random point scores above 0") {
  Random rng(11);
  for (const auto& spec : problem_catalog()) {
    CAPTURE(spec.name);
    const double at_opt = evaluate(spec, spec.optimizer);
    CHECK(at_opt <= 0.0);
    CHECK(at_opt >= -1e-12);
    for (int i = 0; i < 1000; ++i) {
      const auto x = random_point(spec, rng);
      CHECK(evaluate(spec, x) <= 1e-12);
      // Unclamped: the shift really is a lower bound of the raw function.
      CHECK(raw_value(spec, x) >= spec.shift - 1e-12);
    }
  }
}

TEST_CASE("documented optimizers are local minima of the raw functions") {
  for (const auto& spec : problem_catalog()) {
    CAPTURE(spec.name);
    for (std::size_t i = 0; i < spec.dimension; ++i) {
      for (double sign : {-1.0, 1.0}) {
        auto x = spec.optimizer;
        x[i] += sign * 1e-5 * spec.bounds.range(i);
        x[i] = spec.bounds.clamp(i, x[i]);
        CHECK(raw_value(spec, x) >= spec.shift);
      }
    }
  }
}

TEST_CASE("evaluate rejects bad input") {
  const auto& f2 = problem(ProblemId::F2);
  CHECK_THROWS_AS(evaluate(f2, std::vector<double>(19, 0.0)), std::invalid_argument);
  std::vector<double> x(20, 0.0);
  x[3] = 5.2;
  CHECK_THROWS_AS(evaluate(f2, x), std::invalid_argument);
}

TEST_CASE("evaluate is bitwise deterministic") {
  Random rng(5);
  for (const auto& spec : problem_catalog()) {
    const auto x = random_point(spec, rng);
    const double a = evaluate(spec, x);
    const double b = evaluate(spec, x);
    CHECK(std::memcmp(&a, &b, sizeof(double)) == 0);
  }
}

TEST_CASE("solved threshold") {
  CHECK(is_solved(0.0));
  CHECK_FALSE(is_solved(-1e-14));
  CHECK(is_solved(-1e-16));
}
