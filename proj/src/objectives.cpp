#include "adaptea/objectives.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace adaptea {

bool Bounds::contains(std::span<const double> x) const {
  if (x.size() != lower.size()) {
    return false;
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] >= lower[i] && x[i] <= upper[i])) {
      return false;
    }
  }
  return true;
}

double Bounds::clamp(std::size_t i, double value) const {
  return std::clamp(value, lower[i], upper[i]);
}

namespace {

constexpr double kPi = std::numbers::pi;

// De Jong F5. 25 foxholes on a 5x5 grid.
double shekel_foxholes(std::span<const double> x) {
  static constexpr std::array<double, 5> grid{-32.0, -16.0, 0.0, 16.0, 32.0};
  double sum = 1.0 / 500.0;
  for (std::size_t j = 0; j < 25; ++j) {
    const double d0 = x[0] - grid[j % 5];
    const double d1 = x[1] - grid[j / 5];
    sum += 1.0 / (static_cast<double>(j + 1) + std::pow(d0, 6) + std::pow(d1, 6));
  }
  return 1.0 / sum;
}

double rastrigin(std::span<const double> x) {
  double sum = 10.0 * static_cast<double>(x.size());
  for (double v : x) {
    sum += v * v - 10.0 * std::cos(2.0 * kPi * v);
  }
  return sum;
}

double schwefel(std::span<const double> x) {
  double sum = 418.9828872724337 * static_cast<double>(x.size());
  for (double v : x) {
    sum -= v * std::sin(std::sqrt(std::abs(v)));
  }
  return sum;
}

double griewank(std::span<const double> x) {
  double sum = 0.0;
  double product = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += x[i] * x[i] / 4000.0;
    product *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return 1.0 + sum - product;
}

// Bohachevsky #1.
double bohachevsky(std::span<const double> x) {
  return x[0] * x[0] + 2.0 * x[1] * x[1] - 0.3 * std::cos(3.0 * kPi * x[0]) -
         0.4 * std::cos(4.0 * kPi * x[1]) + 0.7;
}

// Watson's function (Moré, Garbow and Hillstrom): 29 polynomial-fit residuals
// at t_i = i/29 plus two regularizing residuals.
double watson(std::span<const double> x) {
  const std::size_t n = x.size();
  double sum = 0.0;
  for (int i = 1; i <= 29; ++i) {
    const double t = i / 29.0;
    double derivative = 0.0;
    double value = 0.0;
    double power = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0) {
        derivative += static_cast<double>(j) * x[j] * power;
        power *= t;
      }
      value += x[j] * (j == 0 ? 1.0 : power);
    }
    const double r = derivative - value * value - 1.0;
    sum += r * r;
  }
  const double r30 = x[1] - x[0] * x[0] - 1.0;
  return sum + x[0] * x[0] + r30 * r30;
}

double colville(std::span<const double> x) {
  const double a = x[0] * x[0] - x[1];
  const double b = x[2] * x[2] - x[3];
  return 100.0 * a * a + (1.0 - x[0]) * (1.0 - x[0]) + 90.0 * b * b +
         (1.0 - x[2]) * (1.0 - x[2]) +
         10.1 * ((x[1] - 1.0) * (x[1] - 1.0) + (x[3] - 1.0) * (x[3] - 1.0)) +
         19.8 * (x[1] - 1.0) * (x[3] - 1.0);
}

// Sum of absolute residuals of A x = b. The instance (data/linear_system.txt)
// has b equal to the row sums of A, so the solution is all ones.
constexpr std::array<std::array<double, 10>, 10> kSystemMatrix{{
    {5, 4, 5, 2, 9, 5, 4, 2, 3, 1},
    {9, 7, 1, 1, 7, 2, 2, 6, 6, 9},
    {3, 1, 8, 6, 9, 7, 4, 2, 1, 6},
    {8, 3, 7, 3, 7, 5, 3, 9, 9, 5},
    {9, 5, 1, 6, 3, 4, 2, 3, 3, 9},
    {1, 2, 3, 1, 7, 6, 6, 3, 3, 3},
    {1, 5, 7, 8, 1, 4, 7, 8, 4, 8},
    {9, 3, 8, 6, 3, 4, 7, 1, 8, 1},
    {8, 2, 8, 5, 3, 8, 7, 2, 7, 5},
    {2, 1, 2, 2, 9, 8, 7, 4, 4, 1},
}};
constexpr std::array<double, 10> kSystemRhs{40, 50, 47, 59, 45, 35, 53, 50, 55, 40};

double linear_system(std::span<const double> x) {
  double sum = 0.0;
  for (std::size_t i = 0; i < 10; ++i) {
    double row = -kSystemRhs[i];
    for (std::size_t j = 0; j < 10; ++j) {
      row += kSystemMatrix[i][j] * x[j];
    }
    sum += std::abs(row);
  }
  return sum;
}

double ackley(std::span<const double> x) {
  const double n = static_cast<double>(x.size());
  double squares = 0.0;
  double cosines = 0.0;
  for (double v : x) {
    squares += v * v;
    cosines += std::cos(2.0 * kPi * v);
  }
  return -20.0 * std::exp(-0.2 * std::sqrt(squares / n)) - std::exp(cosines / n) + 20.0 +
         std::numbers::e;
}

// Neumaier #2 (power sum), b = (8, 18, 44, 114).
double neumaier2(std::span<const double> x) {
  static constexpr std::array<double, 4> b{8.0, 18.0, 44.0, 114.0};
  double sum = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    double power_sum = 0.0;
    for (double v : x) {
      power_sum += std::pow(v, static_cast<double>(k + 1));
    }
    const double r = b[k] - power_sum;
    sum += r * r;
  }
  return sum;
}

ObjectiveSpec make_spec(ProblemId id, std::string name, std::size_t dimension, double lo,
                        double hi, std::vector<double> optimizer, RawObjective raw) {
  ObjectiveSpec spec{id,
                     std::move(name),
                     dimension,
                     Bounds{std::vector<double>(dimension, lo), std::vector<double>(dimension, hi)},
                     std::move(optimizer),
                     0.0,
                     raw};
  spec.shift = raw(spec.optimizer);
  return spec;
}

std::vector<ObjectiveSpec> build_catalog() {
  std::vector<ObjectiveSpec> specs;
  specs.reserve(kProblemCount);
  // Local minimizers refined to full double precision offline.
  specs.push_back(make_spec(ProblemId::F1, "Shekel's Foxholes", 2, -65.536, 65.536,
                            {-31.978334835656970, -31.978334837300795}, shekel_foxholes));
  specs.push_back(make_spec(ProblemId::F2, "Rastrigin", 20, -5.12, 5.12,
                            std::vector<double>(20, 0.0), rastrigin));
  specs.push_back(make_spec(ProblemId::F3, "Schwefel", 10, -500.0, 500.0,
                            std::vector<double>(10, 420.96874635998203), schwefel));
  specs.push_back(make_spec(ProblemId::F4, "Griewank", 10, -600.0, 600.0,
                            std::vector<double>(10, 0.0), griewank));
  specs.push_back(make_spec(ProblemId::F5, "Bohachevsky", 2, -100.0, 100.0, {0.0, 0.0},
                            bohachevsky));
  specs.push_back(make_spec(ProblemId::F6, "Watson's", 5, -5.0, 5.0,
                            {-0.071405170105187850, 0.97002470472038997, 0.26616884651979518,
                             -0.53989318705686619, 0.71071122184734830},
                            watson));
  specs.push_back(make_spec(ProblemId::F7, "Colville's", 4, -10.0, 10.0,
                            {1.0, 1.0, 1.0, 1.0}, colville));
  specs.push_back(make_spec(ProblemId::F8, "System of linear equations", 10, -9.0, 9.0,
                            std::vector<double>(10, 1.0), linear_system));
  specs.push_back(make_spec(ProblemId::F9, "Ackley's", 25, -32.768, 32.768,
                            std::vector<double>(25, 0.0), ackley));
  specs.push_back(make_spec(ProblemId::F10, "Neumaier's #2", 4, 0.0, 4.0,
                            {1.0, 2.0, 2.0, 3.0}, neumaier2));
  return specs;
}

}  // namespace

const std::vector<ObjectiveSpec>& problem_catalog() {
  static const std::vector<ObjectiveSpec> catalog = build_catalog();
  return catalog;
}

const ObjectiveSpec& problem(ProblemId id) {
  return problem_catalog().at(static_cast<std::size_t>(id) - 1);
}

std::string to_string(ProblemId id) { return "F" + std::to_string(static_cast<int>(id)); }

std::optional<ProblemId> parse_problem_id(std::string_view text) {
  for (std::size_t i = 1; i <= kProblemCount; ++i) {
    const auto id = static_cast<ProblemId>(i);
    if (text == to_string(id)) {
      return id;
    }
  }
  return std::nullopt;
}

double raw_value(const ObjectiveSpec& spec, std::span<const double> x) { return spec.raw(x); }

double evaluate(const ObjectiveSpec& spec, std::span<const double> x) {
  if (x.size() != spec.dimension) {
    throw std::invalid_argument("evaluate: " + to_string(spec.id) + " expects " +
                                std::to_string(spec.dimension) + " variables, got " +
                                std::to_string(x.size()));
  }
  if (!spec.bounds.contains(x)) {
    throw std::invalid_argument("evaluate: point outside the bounds of " + to_string(spec.id));
  }
  // The shifted value is mathematically non-negative; the clamp drops rounding
  // noise around the optimizer.
  return -std::max(0.0, spec.raw(x) - spec.shift);
}

}  // namespace adaptea
