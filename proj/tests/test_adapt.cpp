#include <doctest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "adaptea/adapt.hpp"
#include "adaptea/random.hpp"

using namespace adaptea;

namespace {

std::vector<OperatorId> all_ten() {
  std::vector<OperatorId> ids;
  for (std::size_t i = 0; i < kOperatorCount; ++i) {
    ids.push_back(operator_at(i));
  }
  return ids;
}

double sum(const ProbabilityVector& p) { return std::accumulate(p.begin(), p.end(), 0.0); }

}  // namespace

TEST_CASE("scores to target") {
  std::vector<std::optional<double>> single(10, 0.0);
  single[0] = 1.0;
  const auto t1 = scores_to_target(single);
  CHECK(t1[0] == 1.0);
  for (std::size_t i = 1; i < 10; ++i) {
    CHECK(t1[i] == 0.0);
  }

  const std::vector<std::optional<double>> equal(10, 3.0);
  for (double v : scores_to_target(equal)) {
    CHECK(v == doctest::Approx(0.1));
  }

  const std::vector<std::optional<double>> negative{-2.0, 0.0};
  const auto t2 = scores_to_target(negative);
  CHECK(t2[0] == 0.0);
  CHECK(t2[1] == 1.0);

  const std::vector<std::optional<double>> missing{1.0, std::nullopt, 3.0};
  const auto t3 = scores_to_target(missing);
  CHECK(t3[0] == doctest::Approx(1.0 / 6.0));
  CHECK(t3[1] == doctest::Approx(2.0 / 6.0));
  CHECK(t3[2] == doctest::Approx(3.0 / 6.0));

  const std::vector<std::optional<double>> none(4, std::nullopt);
  for (double v : scores_to_target(none)) {
    CHECK(v == 0.25);
  }
  const std::vector<std::optional<double>> zeros(4, 0.0);
  for (double v : scores_to_target(zeros)) {
    CHECK(v == 0.25);
  }
}

TEST_CASE("memory update") {
  auto portfolio = OperatorPortfolio::uniform(all_ten());
  SUBCASE("target equal to the current vector is a fixed point") {
    const std::vector<double> target(10, 0.1);
    const auto next = update(portfolio, target);
    for (double v : next) {
      CHECK(v == doctest::Approx(0.1));
    }
  }
  SUBCASE("half memory, half target") {
    std::vector<double> target(10, 0.0);
    target[0] = 1.0;
    const auto next = update(portfolio, target);
    CHECK(next[0] == doctest::Approx(0.55));
    for (std::size_t i = 1; i < 10; ++i) {
      CHECK(next[i] == doctest::Approx(0.05));
    }
    CHECK(sum(next) == doctest::Approx(1.0));
  }
  SUBCASE("a repeated winner converges to one minus the floors") {
    std::vector<double> target(10, 0.0);
    target[3] = 1.0;
    for (int cycle = 0; cycle < 60; ++cycle) {
      portfolio.probabilities = update(portfolio, target);
    }
    CHECK(portfolio.probabilities[3] == doctest::Approx(0.82));
    for (std::size_t i = 0; i < 10; ++i) {
      if (i != 3) {
        CHECK(portfolio.probabilities[i] == doctest::Approx(0.02));
      }
    }
  }
}

TEST_CASE("operator 10 keeps its mass when only 1-9 adapt") {
  auto portfolio = OperatorPortfolio::uniform(crossover_and_local_operators());
  std::vector<double> target(9, 0.0);
  target[0] = 1.0;
  for (int cycle = 0; cycle < 60; ++cycle) {
    portfolio.probabilities = update(portfolio, target);
    CHECK(portfolio.probabilities[9] == 0.1);
  }
  CHECK(portfolio.probabilities[0] == doctest::Approx(0.9 - 8 * 0.02));
  CHECK(sum(portfolio.probabilities) == doctest::Approx(1.0));
}

TEST_CASE("water-filling pins floored entries exactly") {
  const auto v = apply_floor({0.9, 0.09, 0.01, 0.0}, 0.02, 1.0);
  CHECK(v[2] == 0.02);
  CHECK(v[3] == 0.02);
  CHECK(std::accumulate(v.begin(), v.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(v[0] / v[1] == doctest::Approx(10.0));
  CHECK_THROWS_AS(apply_floor({0.5, 0.5}, 0.6, 1.0), std::invalid_argument);
}

TEST_CASE("updates stay on the floored simplex and respect score order") {
  Random rng(40);
  auto portfolio = OperatorPortfolio::uniform(crossover_and_local_operators());
  for (int cycle = 0; cycle < 2000; ++cycle) {
    std::vector<std::optional<double>> scores(9);
    for (auto& s : scores) {
      if (!rng.bernoulli(0.1)) {
        s = rng.uniform(-5.0, 5.0) * (rng.bernoulli(0.3) ? 100.0 : 1.0);
      }
    }
    const auto target = scores_to_target(scores);
    const auto before = portfolio.probabilities;
    portfolio.probabilities = update(portfolio, target);
    CHECK(sum(portfolio.probabilities) == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t i = 0; i < 9; ++i) {
      CHECK(portfolio.probabilities[i] >= 0.02 - 1e-12);
    }
    for (std::size_t a = 0; a < 9; ++a) {
      for (std::size_t b = 0; b < 9; ++b) {
        if (before[a] == before[b] && target[a] > target[b]) {
          CHECK(portfolio.probabilities[a] >= portfolio.probabilities[b]);
        }
      }
    }
  }
}

TEST_CASE("distance to an interior target halves every cycle") {
  auto portfolio = OperatorPortfolio::uniform(all_ten());
  const std::vector<double> target{0.3, 0.2, 0.1, 0.1, 0.05, 0.05, 0.05, 0.05, 0.05, 0.05};
  const auto distance = [&] {
    double d = 0.0;
    for (std::size_t i = 0; i < 10; ++i) {
      d += std::abs(portfolio.probabilities[i] - target[i]);
    }
    return d;
  };
  double previous = distance();
  for (int cycle = 0; cycle < 10; ++cycle) {
    portfolio.probabilities = update(portfolio, target);
    const double now = distance();
    CHECK(now == doctest::Approx(previous / 2.0).epsilon(1e-9));
    previous = now;
  }
}

TEST_CASE("update schedule") {
  const AdaptationSettings settings;
  CHECK_FALSE(update_due(0, settings));
  CHECK_FALSE(update_due(19, settings));
  CHECK(update_due(20, settings));
  CHECK_FALSE(update_due(21, settings));
  CHECK(update_due(40, settings));
}
