#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adaptea/design.hpp"
#include "adaptea/engine.hpp"
#include "adaptea/objectives.hpp"

namespace adaptea {

struct RunOptions {
  int max_generations = 2000;
  int stopping_interval = 100;
  EngineConfig engine;
  AdaptationSettings adaptation;
  Distribution family = Distribution::normal;
};

struct StoppingPoint {
  int generation;
  double best_fitness;  // best found so far
};

struct RunRecord {
  std::string design;
  ProblemId problem = ProblemId::F1;
  int run_index = 0;
  std::uint64_t seed = 0;
  std::vector<StoppingPoint> best_fitness_at;
  std::optional<int> solved_generation;
};

struct ProbabilityRow {
  int generation;
  OperatorId op;
  double probability;
};

// Optional in-memory trace of one run.
struct RunTrace {
  bool record_probabilities = false;
  bool record_measurements = false;
  std::vector<ProbabilityRow> probabilities;  // initial vector at generation 0, then each update
  std::vector<std::pair<int, MeasurementRow>> measurements;  // (window start, row)
  std::vector<int> update_generations;
  std::vector<int> degenerate_pool_generations;
};

// Called after each adaptation update with the generation and new vector.
using UpdateCallback = std::function<void(int, const ProbabilityVector&)>;

RunRecord execute_run(const DesignSpec& design, const ObjectiveSpec& spec, int run_index,
                      std::uint64_t seed, const RunOptions& options, RunTrace* trace = nullptr,
                      const UpdateCallback& on_update = {});

}  // namespace adaptea
