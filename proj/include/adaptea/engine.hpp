#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "adaptea/objectives.hpp"
#include "adaptea/operators.hpp"
#include "adaptea/random.hpp"
#include "adaptea/solution.hpp"

namespace adaptea {

// Diversity-controlled probability of single point mutation:
//   p = base + 0.5 * delta^(d / delta)
// where d is the range-normalized distance between the mating parents.
struct DiversityControl {
  double base_probability = 0.02;
  double delta = 0.001;
};

struct EngineConfig {
  std::size_t population_size = 30;
  DiversityControl diversity;
  // When off, single point mutation is drawn by its portfolio weight like the
  // other operators.
  bool diversity_control = true;
  OperatorParams operators;
  // Extra culling tournaments allowed per missing survivor before random
  // immigrants fill the gap.
  std::size_t refill_attempts_per_slot = 20;
};

struct Population {
  std::vector<Solution> members;
  int generation = 0;
  std::uint64_t next_id = 0;
};

struct ReproductionEvent {
  int generation = 0;  // generation of the parents
  OperatorId op;
  std::vector<std::uint64_t> parent_ids;  // best-first
  std::vector<double> parent_fitnesses;
  std::uint64_t offspring_id = 0;
  double offspring_fitness = 0.0;
  bool offspring_survived = false;
  std::vector<bool> parents_survived;
};

struct GenerationResult {
  Population population;
  std::vector<ReproductionEvent> events;
  std::size_t immigrants = 0;
};

double parent_distance(std::span<const double> a, std::span<const double> b,
                       const Bounds& bounds);

double mutation_probability(double distance, const DiversityControl& control);

// Operator probabilities for one mating pair: single point mutation takes the
// diversity-controlled value and operators 1-9 share the remainder in
// proportion to their weights. With no weight on 1-9, mutation is certain.
ProbabilityVector effective_probabilities(const ProbabilityVector& weights,
                                          double mutation_probability);

OperatorId draw_operator(const ProbabilityVector& probabilities, Random& rng);

// Binary tournament with replacement; a tie keeps the first draw.
std::size_t tournament_index(std::span<const Solution> pool, Random& rng);
const Solution& tournament_select(std::span<const Solution> pool, Random& rng);

Population initialize(const ObjectiveSpec& spec, Random& rng, const EngineConfig& config = {});

GenerationResult step_generation(const Population& population, const ProbabilityVector& weights,
                                 const ObjectiveSpec& spec, Random& rng,
                                 const EngineConfig& config = {});

}  // namespace adaptea
