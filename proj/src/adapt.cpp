#include "adaptea/adapt.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace adaptea {

OperatorPortfolio OperatorPortfolio::uniform(std::vector<OperatorId> adapted,
                                             AdaptationSettings settings) {
  OperatorPortfolio portfolio;
  portfolio.probabilities.fill(1.0 / static_cast<double>(kOperatorCount));
  portfolio.adapted = std::move(adapted);
  portfolio.settings = settings;
  return portfolio;
}

std::vector<OperatorId> crossover_and_local_operators() {
  std::vector<OperatorId> ids;
  for (std::size_t i = 0; i + 1 < kOperatorCount; ++i) {
    ids.push_back(operator_at(i));
  }
  return ids;
}

std::vector<double> scores_to_target(std::span<const std::optional<double>> scores) {
  const std::size_t n = scores.size();
  std::vector<double> target(n, n > 0 ? 1.0 / static_cast<double>(n) : 0.0);
  double lowest = 0.0;
  std::size_t with_data = 0;
  for (const auto& s : scores) {
    if (s) {
      lowest = std::min(lowest, *s);
      ++with_data;
    }
  }
  if (with_data == 0) {
    return target;
  }
  double shifted_sum = 0.0;
  for (const auto& s : scores) {
    if (s) {
      shifted_sum += *s - lowest;
    }
  }
  const double fill = shifted_sum / static_cast<double>(with_data);
  std::vector<double> shifted(n);
  for (std::size_t i = 0; i < n; ++i) {
    shifted[i] = scores[i] ? *scores[i] - lowest : fill;
  }
  const double total = std::accumulate(shifted.begin(), shifted.end(), 0.0);
  if (!(total > 0.0)) {
    return target;
  }
  for (std::size_t i = 0; i < n; ++i) {
    target[i] = shifted[i] / total;
  }
  return target;
}

std::vector<double> apply_floor(std::vector<double> values, double floor, double total) {
  const std::size_t n = values.size();
  if (static_cast<double>(n) * floor > total) {
    throw std::invalid_argument("apply_floor: floor infeasible for the requested total");
  }
  std::vector<bool> pinned(n, false);
  for (;;) {
    double free_mass = total;
    double free_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (pinned[i]) {
        free_mass -= floor;
      } else {
        free_sum += values[i];
      }
    }
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (pinned[i]) {
        values[i] = floor;
        continue;
      }
      values[i] = free_sum > 0.0 ? values[i] * free_mass / free_sum : floor;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!pinned[i] && values[i] < floor) {
        pinned[i] = true;
        changed = true;
      }
    }
    if (!changed) {
      return values;
    }
  }
}

ProbabilityVector update(const OperatorPortfolio& portfolio, std::span<const double> target) {
  const auto& ids = portfolio.adapted;
  if (target.size() != ids.size()) {
    throw std::invalid_argument("update: target size differs from the adapted subset");
  }
  double mass = 0.0;
  for (OperatorId id : ids) {
    mass += portfolio.probabilities[operator_index(id)];
  }
  const double memory = portfolio.settings.memory_weight;
  std::vector<double> blended(ids.size());
  for (std::size_t k = 0; k < ids.size(); ++k) {
    blended[k] = memory * portfolio.probabilities[operator_index(ids[k])] +
                 (1.0 - memory) * mass * target[k];
  }
  blended = apply_floor(std::move(blended), portfolio.settings.floor, mass);

  ProbabilityVector next = portfolio.probabilities;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    next[operator_index(ids[k])] = blended[k];
  }
  return next;
}

}  // namespace adaptea
