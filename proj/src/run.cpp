#include "adaptea/run.hpp"

#include <algorithm>
#include <stdexcept>

namespace adaptea {

namespace {

double best_of(const Population& population) {
  double best = population.members.front().fitness;
  for (const auto& s : population.members) {
    best = std::max(best, s.fitness);
  }
  return best;
}

void record_vector(RunTrace* trace, int generation, const ProbabilityVector& p) {
  if (trace == nullptr || !trace->record_probabilities) {
    return;
  }
  for (std::size_t i = 0; i < kOperatorCount; ++i) {
    trace->probabilities.push_back({generation, operator_at(i), p[i]});
  }
}

}  // namespace

RunRecord execute_run(const DesignSpec& design, const ObjectiveSpec& spec, int run_index,
                      std::uint64_t seed, const RunOptions& options, RunTrace* trace,
                      const UpdateCallback& on_update) {
  if (options.max_generations < 1 || options.stopping_interval < 1) {
    throw std::invalid_argument("execute_run: generation counts must be positive");
  }
  Random rng(seed);
  RunRecord record;
  record.design = design.name;
  record.problem = spec.id;
  record.run_index = run_index;
  record.seed = seed;

  OperatorPortfolio portfolio;
  portfolio.probabilities = design.initial;
  portfolio.adapted = crossover_and_local_operators();
  portfolio.settings = options.adaptation;

  std::optional<CreditCollector> collector;
  if (design.adaptive()) {
    collector.emplace(*design.measurement, 0);
  }
  record_vector(trace, 0, portfolio.probabilities);

  Population population = initialize(spec, rng, options.engine);
  double best = best_of(population);
  if (is_solved(best)) {
    record.solved_generation = 0;
  }

  while (population.generation < options.max_generations) {
    GenerationResult step =
        step_generation(population, portfolio.probabilities, spec, rng, options.engine);
    population = std::move(step.population);
    best = std::max(best, best_of(population));
    // Offspring that lose the culling still count as found.
    for (const auto& e : step.events) {
      best = std::max(best, e.offspring_fitness);
    }
    if (!record.solved_generation && is_solved(best)) {
      record.solved_generation = population.generation;
    }

    if (collector) {
      collector->observe(step.events, population);
      if (update_due(population.generation, portfolio.settings)) {
        const int window_start = collector->window_start();
        const WindowSamples samples = collector->close_window(population.generation);
        const WindowScores scores = score_window(samples, *design.interpretation, options.family);
        std::vector<std::optional<double>> adapted_scores;
        for (OperatorId id : portfolio.adapted) {
          adapted_scores.push_back(scores.scores[operator_index(id)]);
        }
        portfolio.probabilities = update(portfolio, scores_to_target(adapted_scores));

        if (trace != nullptr) {
          trace->update_generations.push_back(population.generation);
          if (scores.degenerate_pool) {
            trace->degenerate_pool_generations.push_back(population.generation);
          }
          if (trace->record_measurements) {
            for (const auto& row : collector->last_rows()) {
              trace->measurements.emplace_back(window_start, row);
            }
          }
        }
        record_vector(trace, population.generation, portfolio.probabilities);
        if (on_update) {
          on_update(population.generation, portfolio.probabilities);
        }
      }
    }

    if (population.generation % options.stopping_interval == 0) {
      record.best_fitness_at.push_back({population.generation, best});
    }
  }
  return record;
}

}  // namespace adaptea
