#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace adaptea {

// Box constraints of a search space.
struct Bounds {
  std::vector<double> lower;
  std::vector<double> upper;

  std::size_t size() const { return lower.size(); }
  double range(std::size_t i) const { return upper[i] - lower[i]; }
  bool contains(std::span<const double> x) const;
  double clamp(std::size_t i, double value) const;
};

enum class ProblemId { F1 = 1, F2, F3, F4, F5, F6, F7, F8, F9, F10 };

inline constexpr std::size_t kProblemCount = 10;

using RawObjective = double (*)(std::span<const double>);

// A benchmark problem. The raw function is the usual minimization form; the
// shift is its value at the optimizer, so evaluate() is a maximization fitness
// with optimum 0.
struct ObjectiveSpec {
  ProblemId id;
  std::string name;
  std::size_t dimension;
  Bounds bounds;
  std::vector<double> optimizer;
  double shift;
  RawObjective raw;
  double optimum_value = 0.0;
};

const std::vector<ObjectiveSpec>& problem_catalog();
const ObjectiveSpec& problem(ProblemId id);

std::string to_string(ProblemId id);
std::optional<ProblemId> parse_problem_id(std::string_view text);

// Unshifted minimization value. No bounds check.
double raw_value(const ObjectiveSpec& spec, std::span<const double> x);

// Maximization fitness, <= 0. Throws std::invalid_argument on a dimension
// mismatch or an out-of-bounds point.
double evaluate(const ObjectiveSpec& spec, std::span<const double> x);

inline constexpr double kSolvedThreshold = -1e-15;

inline bool is_solved(double fitness) { return fitness > kSolvedThreshold; }

}  // namespace adaptea
