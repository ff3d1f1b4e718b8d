#include "adaptea/credit.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace adaptea {

std::string to_string(Measurement kind) { return "A" + std::to_string(static_cast<int>(kind)); }

std::optional<Measurement> parse_measurement(std::string_view text) {
  for (int i = 1; i <= 6; ++i) {
    const auto kind = static_cast<Measurement>(i);
    if (text == to_string(kind)) {
      return kind;
    }
  }
  return std::nullopt;
}

RatioBaseline ratio_baseline(double worst_fitness, double best_fitness) {
  const double spread = best_fitness - worst_fitness;
  if (!(spread > 0.0)) {
    return {worst_fitness, true};
  }
  return {worst_fitness - 1e-3 * spread, false};
}

std::optional<double> event_measurement(Measurement kind, const ReproductionEvent& event,
                                        const RatioBaseline& baseline) {
  switch (kind) {
    case Measurement::fitness:
      return event.offspring_fitness;
    case Measurement::fitness_ratio: {
      if (baseline.degenerate) {
        return 1.0;
      }
      const double parent =
          *std::max_element(event.parent_fitnesses.begin(), event.parent_fitnesses.end());
      return (event.offspring_fitness - baseline.floor) / (parent - baseline.floor);
    }
    case Measurement::offspring_survival:
      return event.offspring_survived ? 1.0 : 0.0;
    case Measurement::family_survival: {
      const bool family = std::any_of(event.parents_survived.begin(), event.parents_survived.end(),
                                      [](bool b) { return b; });
      return event.offspring_survived && family ? 1.0 : 0.0;
    }
    case Measurement::age:
    case Measurement::rank:
      return std::nullopt;
  }
  return std::nullopt;
}

std::vector<double> fitness_ranks(std::span<const Solution> members) {
  const std::size_t n = members.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return members[a].fitness < members[b].fitness;
  });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && members[order[j + 1]].fitness == members[order[i]].fitness) {
      ++j;
    }
    // Ascending positions i+1 .. j+1 share their average.
    const double midrank = 0.5 * static_cast<double>(i + j + 2);
    for (std::size_t k = i; k <= j; ++k) {
      ranks[order[k]] = midrank;
    }
    i = j + 1;
  }
  return ranks;
}

std::vector<Credit> population_measurements(Measurement kind, const Population& population,
                                            int window_start) {
  if (kind != Measurement::age && kind != Measurement::rank) {
    throw std::invalid_argument("population_measurements: " + to_string(kind) +
                                " is an event measurement");
  }
  std::vector<double> ranks;
  if (kind == Measurement::rank) {
    ranks = fitness_ranks(population.members);
  }
  std::vector<Credit> credits;
  for (std::size_t i = 0; i < population.members.size(); ++i) {
    const Solution& s = population.members[i];
    if (!s.creator || s.birth_generation < window_start) {
      continue;
    }
    const double value = kind == Measurement::age
                             ? static_cast<double>(population.generation - s.birth_generation)
                             : ranks[i];
    credits.push_back({*s.creator, value});
  }
  return credits;
}

CreditCollector::CreditCollector(Measurement kind, int window_start)
    : kind_(kind), window_start_(window_start) {}

void CreditCollector::observe(std::span<const ReproductionEvent> events,
                              const Population& population) {
  if (kind_ == Measurement::age || kind_ == Measurement::rank) {
    for (const Credit& c : population_measurements(kind_, population, window_start_)) {
      rows_.push_back({population.generation, c.op, c.value});
    }
    return;
  }
  for (const ReproductionEvent& event : events) {
    if (kind_ == Measurement::fitness_ratio) {
      const double parent =
          *std::max_element(event.parent_fitnesses.begin(), event.parent_fitnesses.end());
      for (double f : event.parent_fitnesses) {
        worst_seen_ = std::min(worst_seen_.value_or(f), f);
        best_seen_ = std::max(best_seen_.value_or(f), f);
      }
      worst_seen_ = std::min(*worst_seen_, event.offspring_fitness);
      best_seen_ = std::max(*best_seen_, event.offspring_fitness);
      ratios_.push_back({population.generation, event.op, event.offspring_fitness, parent});
    } else {
      rows_.push_back({population.generation, event.op, *event_measurement(kind_, event)});
    }
  }
}

WindowSamples CreditCollector::close_window(int next_window_start) {
  if (kind_ == Measurement::fitness_ratio && !ratios_.empty()) {
    const RatioBaseline baseline = ratio_baseline(*worst_seen_, *best_seen_);
    for (const PendingRatio& r : ratios_) {
      const double value = baseline.degenerate
                               ? 1.0
                               : (r.offspring - baseline.floor) / (r.parent - baseline.floor);
      rows_.push_back({r.generation, r.op, value});
    }
  }

  WindowSamples samples;
  for (std::size_t i = 0; i < kOperatorCount; ++i) {
    samples[i].op = operator_at(i);
    samples[i].window_start = window_start_;
  }
  for (const MeasurementRow& row : rows_) {
    samples[operator_index(row.op)].values.push_back(row.value);
  }

  last_rows_ = std::move(rows_);
  rows_.clear();
  ratios_.clear();
  worst_seen_.reset();
  best_seen_.reset();
  window_start_ = next_window_start;
  return samples;
}

}  // namespace adaptea
