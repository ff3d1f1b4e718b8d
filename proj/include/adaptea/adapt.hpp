#pragma once

#include <optional>
#include <span>
#include <vector>

#include "adaptea/solution.hpp"

namespace adaptea {

struct AdaptationSettings {
  double memory_weight = 0.5;
  double floor = 0.02;
  int cycle_length = 20;
};

// Operator probabilities plus the subset under feedback adaptation. Entries
// outside the subset keep their value; single point mutation is normally left
// out because diversity control sets its per-pair probability.
struct OperatorPortfolio {
  ProbabilityVector probabilities{};
  std::vector<OperatorId> adapted;
  AdaptationSettings settings;

  static OperatorPortfolio uniform(std::vector<OperatorId> adapted,
                                   AdaptationSettings settings = {});
};

// Default adapted subset: operators 1-9.
std::vector<OperatorId> crossover_and_local_operators();

// Shift scores so the minimum is non-negative, give missing scores the mean
// shifted score, and normalize. No data at all, or an all-zero sum, gives a
// uniform target.
std::vector<double> scores_to_target(std::span<const std::optional<double>> scores);

// Raises entries below `floor` to exactly `floor` and rescales the rest so the
// total is `total` (water-filling).
std::vector<double> apply_floor(std::vector<double> values, double floor, double total);

// New probabilities for the adapted subset: memory blend with the target
// (scaled to the subset's mass), then floor and renormalization. `target` is
// ordered like portfolio.adapted.
ProbabilityVector update(const OperatorPortfolio& portfolio, std::span<const double> target);

inline bool update_due(int generation, const AdaptationSettings& settings) {
  return generation > 0 && generation % settings.cycle_length == 0;
}

}  // namespace adaptea
