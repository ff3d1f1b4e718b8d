#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "adaptea/credit.hpp"

namespace adaptea {

enum class Interpretation {
  average = 1,  // I:1
  outlier = 3,  // I:3
};

std::string to_string(Interpretation interpretation);
std::optional<Interpretation> parse_interpretation(std::string_view text);

enum class Distribution { normal, lognormal };

struct PooledDistribution {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation
  std::size_t count = 0;
  Distribution family = Distribution::normal;
  bool degenerate = true;  // fewer than two distinct values
};

// I:1. Empty samples have no score.
std::optional<double> interpret_average(std::span<const double> values);

// Pools every operator's measurements from one window. Under the log-normal
// family the statistics are of log values; non-positive measurements throw
// std::invalid_argument.
PooledDistribution pool_distribution(std::span<const MeasurementSample> samples,
                                     Distribution family = Distribution::normal);
PooledDistribution pool_values(std::span<const double> values,
                               Distribution family = Distribution::normal);

// Empty when the pooled distribution is degenerate.
std::optional<double> z_score(double value, const PooledDistribution& pooled);

// P(Z > z) for a standard normal Z.
double upper_tail_p(double z);

// Probability that none of n draws reaches a value whose single-draw
// exceedance probability is p_x: P(Bin(n, p_x) < 1) = (1 - p_x)^n.
double outlier_probability(double p_x, std::size_t n);

struct OutlierScore {
  OperatorId op;
  double score = 0.0;  // sum of outlier probabilities, in [0, n]
  std::size_t n = 0;
};

// I:3. Zero when the pool is degenerate or the sample is empty.
OutlierScore interpret_outlier(const MeasurementSample& sample, const PooledDistribution& pooled);

struct WindowScores {
  std::array<std::optional<double>, kOperatorCount> scores;
  bool degenerate_pool = false;
};

WindowScores score_window(const WindowSamples& samples, Interpretation interpretation,
                          Distribution family = Distribution::normal);

}  // namespace adaptea
