#include "adaptea/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace adaptea {

double parent_distance(std::span<const double> a, std::span<const double> b,
                       const Bounds& bounds) {
  if (a.size() != b.size() || a.size() != bounds.size()) {
    throw std::invalid_argument("parent_distance: dimension mismatch");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double gap = (a[i] - b[i]) / bounds.range(i);
    sum += gap * gap;
  }
  return std::sqrt(sum);
}

double mutation_probability(double distance, const DiversityControl& control) {
  if (distance < 0.0) {
    throw std::invalid_argument("mutation_probability: negative distance");
  }
  return control.base_probability + 0.5 * std::pow(control.delta, distance / control.delta);
}

ProbabilityVector effective_probabilities(const ProbabilityVector& weights,
                                          double mutation_probability) {
  constexpr std::size_t mutation = operator_index(OperatorId::single_point_mutation);
  ProbabilityVector result{};
  double total = 0.0;
  for (std::size_t i = 0; i < kOperatorCount; ++i) {
    if (i != mutation) {
      total += weights[i];
    }
  }
  if (total <= 0.0) {
    result[mutation] = 1.0;
    return result;
  }
  const double share = 1.0 - mutation_probability;
  for (std::size_t i = 0; i < kOperatorCount; ++i) {
    if (i != mutation) {
      result[i] = share * weights[i] / total;
    }
  }
  result[mutation] = mutation_probability;
  return result;
}

OperatorId draw_operator(const ProbabilityVector& probabilities, Random& rng) {
  const double total = std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
  const double u = rng.uniform() * total;
  double cumulative = 0.0;
  std::size_t last = 0;
  for (std::size_t i = 0; i < kOperatorCount; ++i) {
    if (probabilities[i] <= 0.0) {
      continue;
    }
    cumulative += probabilities[i];
    last = i;
    if (u < cumulative) {
      return operator_at(i);
    }
  }
  return operator_at(last);
}

std::size_t tournament_index(std::span<const Solution> pool, Random& rng) {
  if (pool.empty()) {
    throw std::invalid_argument("tournament_select: empty pool");
  }
  const std::size_t first = rng.index(pool.size());
  const std::size_t second = rng.index(pool.size());
  return pool[second].fitness > pool[first].fitness ? second : first;
}

const Solution& tournament_select(std::span<const Solution> pool, Random& rng) {
  return pool[tournament_index(pool, rng)];
}

namespace {

struct GenomeHash {
  std::size_t operator()(const std::vector<double>& genome) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (double v : genome) {
      h ^= std::hash<double>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

using GenomeSet = std::unordered_set<std::vector<double>, GenomeHash>;

Solution random_solution(const ObjectiveSpec& spec, Random& rng, std::uint64_t id, int generation) {
  Solution s;
  s.id = id;
  s.genome.resize(spec.dimension);
  for (std::size_t i = 0; i < spec.dimension; ++i) {
    s.genome[i] = rng.uniform(spec.bounds.lower[i], spec.bounds.upper[i]);
  }
  s.fitness = evaluate(spec, s.genome);
  s.birth_generation = generation;
  return s;
}

// Random member whose genome is not yet in `taken`.
Solution unique_immigrant(const ObjectiveSpec& spec, Random& rng, std::uint64_t id, int generation,
                          GenomeSet& taken) {
  for (;;) {
    Solution s = random_solution(spec, rng, id, generation);
    if (taken.insert(s.genome).second) {
      return s;
    }
  }
}

}  // namespace

Population initialize(const ObjectiveSpec& spec, Random& rng, const EngineConfig& config) {
  Population pop;
  GenomeSet taken;
  pop.members.reserve(config.population_size);
  while (pop.members.size() < config.population_size) {
    pop.members.push_back(unique_immigrant(spec, rng, pop.next_id++, 0, taken));
  }
  return pop;
}

GenerationResult step_generation(const Population& population, const ProbabilityVector& weights,
                                 const ObjectiveSpec& spec, Random& rng,
                                 const EngineConfig& config) {
  const std::span<const Solution> parents_pool(population.members);
  const auto catalog = operator_catalog(config.operators);
  const std::size_t brood = config.population_size;

  GenerationResult result;
  result.population.generation = population.generation + 1;
  std::uint64_t next_id = population.next_id;

  std::vector<Solution> pool(population.members);
  pool.reserve(population.members.size() + brood);
  result.events.reserve(brood);

  for (std::size_t k = 0; k < brood; ++k) {
    const Solution& mate_a = tournament_select(parents_pool, rng);
    const Solution& mate_b = tournament_select(parents_pool, rng);
    const double distance = parent_distance(mate_a.genome, mate_b.genome, spec.bounds);
    const auto probabilities =
        config.diversity_control
            ? effective_probabilities(weights, mutation_probability(distance, config.diversity))
            : weights;
    const OperatorConfig& op = catalog[operator_index(draw_operator(probabilities, rng))];

    std::vector<const Solution*> parents{&mate_a};
    if (op.arity >= 2) {
      parents.push_back(&mate_b);
    }
    if (op.arity == 3) {
      parents.push_back(&tournament_select(parents_pool, rng));
    }
    std::stable_sort(parents.begin(), parents.end(),
                     [](const Solution* x, const Solution* y) { return x->fitness > y->fitness; });

    std::vector<std::vector<double>> genomes;
    genomes.reserve(parents.size());
    for (const Solution* p : parents) {
      genomes.push_back(p->genome);
    }

    Solution child;
    child.id = next_id++;
    child.genome = apply_operator(op, genomes, spec.bounds, rng);
    child.fitness = evaluate(spec, child.genome);
    child.birth_generation = population.generation;
    child.creator = op.id;

    ReproductionEvent event;
    event.generation = population.generation;
    event.op = op.id;
    for (const Solution* p : parents) {
      child.parent_fitnesses.push_back(p->fitness);
      event.parent_ids.push_back(p->id);
      event.parent_fitnesses.push_back(p->fitness);
    }
    event.offspring_id = child.id;
    event.offspring_fitness = child.fitness;
    result.events.push_back(std::move(event));
    pool.push_back(std::move(child));
  }

  // Culling: binary tournaments over parents + offspring, keeping only the
  // first copy of any genome.
  const std::span<const Solution> combined(pool);
  GenomeSet taken;
  auto& survivors = result.population.members;
  survivors.reserve(config.population_size);
  const auto try_admit = [&](std::size_t index) {
    if (taken.insert(pool[index].genome).second) {
      survivors.push_back(pool[index]);
    }
  };
  for (std::size_t t = 0; t < config.population_size; ++t) {
    try_admit(tournament_index(combined, rng));
  }
  const std::size_t max_refills = config.refill_attempts_per_slot * config.population_size;
  for (std::size_t attempt = 0;
       survivors.size() < config.population_size && attempt < max_refills; ++attempt) {
    try_admit(tournament_index(combined, rng));
  }
  while (survivors.size() < config.population_size) {
    survivors.push_back(unique_immigrant(spec, rng, next_id++, population.generation, taken));
    ++result.immigrants;
  }
  result.population.next_id = next_id;

  std::unordered_set<std::uint64_t> alive;
  for (const auto& s : survivors) {
    alive.insert(s.id);
  }
  for (auto& event : result.events) {
    event.offspring_survived = alive.contains(event.offspring_id);
    for (auto id : event.parent_ids) {
      event.parents_survived.push_back(alive.contains(id));
    }
  }
  return result;
}

}  // namespace adaptea
