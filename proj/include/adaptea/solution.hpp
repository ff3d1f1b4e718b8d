#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace adaptea {

enum class OperatorId : std::uint8_t {
  wright_heuristic = 1,
  simple_crossover,
  extended_line,
  uniform_crossover,
  blx_alpha,
  differential,
  swap,
  raise,
  creep,
  single_point_mutation,
};

inline constexpr std::size_t kOperatorCount = 10;

inline constexpr std::size_t operator_index(OperatorId id) {
  return static_cast<std::size_t>(id) - 1;
}

inline constexpr OperatorId operator_at(std::size_t index) {
  return static_cast<OperatorId>(index + 1);
}

// Selection probability per operator, indexed by operator_index().
using ProbabilityVector = std::array<double, kOperatorCount>;

struct Solution {
  std::uint64_t id = 0;
  std::vector<double> genome;
  double fitness = 0.0;
  int birth_generation = 0;
  std::optional<OperatorId> creator;  // empty for initial members and immigrants
  std::vector<double> parent_fitnesses;
};

}  // namespace adaptea
