#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adaptea/engine.hpp"
#include "adaptea/solution.hpp"

namespace adaptea {

// Solution performance measurements used as operator credit.
enum class Measurement {
  fitness = 1,         // A1 raw fitness of the offspring
  fitness_ratio,       // A2 offspring over better-parent fitness, shifted positive
  offspring_survival,  // A3 offspring survived culling
  family_survival,     // A4 offspring and at least one parent survived
  age,                 // A5 generations survived
  rank,                // A6 rank in the population, best = size
};

std::string to_string(Measurement kind);
std::optional<Measurement> parse_measurement(std::string_view text);

struct Credit {
  OperatorId op;
  double value;
};

struct MeasurementSample {
  OperatorId op;
  std::vector<double> values;
  int window_start = 0;
};

using WindowSamples = std::array<MeasurementSample, kOperatorCount>;

// Reference point for A2: both fitnesses are measured above it so the ratio
// stays positive and > 1 means improvement.
struct RatioBaseline {
  double floor = 0.0;
  bool degenerate = false;  // no spread in the window; every ratio is 1
};

RatioBaseline ratio_baseline(double worst_fitness, double best_fitness);

// Per-event measurement for A1-A4; empty for population measurements.
std::optional<double> event_measurement(Measurement kind, const ReproductionEvent& event,
                                        const RatioBaseline& baseline = {});

// Midranks in descending fitness order: the best of n gets n, ties share the
// average of their positions.
std::vector<double> fitness_ranks(std::span<const Solution> members);

// A5/A6 credit for members created at or after window_start, computed after
// culling. Throws std::invalid_argument for A1-A4.
std::vector<Credit> population_measurements(Measurement kind, const Population& population,
                                            int window_start);

struct MeasurementRow {
  int generation;
  OperatorId op;
  double value;
};

// Accumulates one measurement kind over an adaptation window.
class CreditCollector {
 public:
  explicit CreditCollector(Measurement kind, int window_start = 0);

  Measurement kind() const { return kind_; }
  int window_start() const { return window_start_; }

  // Call once per generation with the step's events and the culled population.
  void observe(std::span<const ReproductionEvent> events, const Population& population);

  // Returns the window's samples and starts a new window.
  WindowSamples close_window(int next_window_start);

  // Rows produced by the last close_window(), for measurement dumps.
  const std::vector<MeasurementRow>& last_rows() const { return last_rows_; }

 private:
  struct PendingRatio {
    int generation;
    OperatorId op;
    double offspring;
    double parent;
  };

  Measurement kind_;
  int window_start_;
  std::vector<MeasurementRow> rows_;
  std::vector<PendingRatio> ratios_;
  std::optional<double> worst_seen_;
  std::optional<double> best_seen_;
  std::vector<MeasurementRow> last_rows_;
};

}  // namespace adaptea
