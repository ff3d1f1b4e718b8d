#include "adaptea/interpret.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace adaptea {

std::string to_string(Interpretation interpretation) {
  return "I" + std::to_string(static_cast<int>(interpretation));
}

std::optional<Interpretation> parse_interpretation(std::string_view text) {
  if (text == "I1" || text == "I:1") {
    return Interpretation::average;
  }
  if (text == "I3" || text == "I:3") {
    return Interpretation::outlier;
  }
  return std::nullopt;
}

std::optional<double> interpret_average(std::span<const double> values) {
  if (values.empty()) {
    return std::nullopt;
  }
  double sum = 0.0;
  for (double v : values) {
    sum += v;
  }
  return sum / static_cast<double>(values.size());
}

namespace {

double transform(double value, Distribution family) {
  if (family == Distribution::normal) {
    return value;
  }
  if (!(value > 0.0)) {
    throw std::invalid_argument("log-normal pooling needs strictly positive measurements");
  }
  return std::log(value);
}

}  // namespace

PooledDistribution pool_values(std::span<const double> values, Distribution family) {
  PooledDistribution pooled;
  pooled.family = family;
  pooled.count = values.size();
  if (values.empty()) {
    return pooled;
  }
  double sum = 0.0;
  bool distinct = false;
  const double first = transform(values[0], family);
  for (double v : values) {
    const double t = transform(v, family);
    sum += t;
    distinct = distinct || t != first;
  }
  pooled.mean = sum / static_cast<double>(values.size());
  if (!distinct) {
    return pooled;
  }
  double squares = 0.0;
  for (double v : values) {
    const double d = transform(v, family) - pooled.mean;
    squares += d * d;
  }
  pooled.stddev = std::sqrt(squares / static_cast<double>(values.size() - 1));
  pooled.degenerate = !(pooled.stddev > 0.0);
  return pooled;
}

PooledDistribution pool_distribution(std::span<const MeasurementSample> samples,
                                     Distribution family) {
  std::vector<double> all;
  for (const auto& sample : samples) {
    all.insert(all.end(), sample.values.begin(), sample.values.end());
  }
  return pool_values(all, family);
}

std::optional<double> z_score(double value, const PooledDistribution& pooled) {
  if (pooled.degenerate) {
    return std::nullopt;
  }
  return (transform(value, pooled.family) - pooled.mean) / pooled.stddev;
}

double upper_tail_p(double z) { return 0.5 * std::erfc(z / std::numbers::sqrt2); }

double outlier_probability(double p_x, std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("outlier_probability: sample size must be positive");
  }
  if (!(p_x >= 0.0 && p_x <= 1.0)) {
    throw std::invalid_argument("outlier_probability: p_x outside [0, 1]");
  }
  if (p_x == 1.0) {
    return 0.0;
  }
  return std::exp(static_cast<double>(n) * std::log1p(-p_x));
}

OutlierScore interpret_outlier(const MeasurementSample& sample, const PooledDistribution& pooled) {
  OutlierScore result{sample.op, 0.0, sample.values.size()};
  if (pooled.degenerate || sample.values.empty()) {
    return result;
  }
  for (double x : sample.values) {
    result.score += outlier_probability(upper_tail_p(*z_score(x, pooled)), result.n);
  }
  return result;
}

WindowScores score_window(const WindowSamples& samples, Interpretation interpretation,
                          Distribution family) {
  WindowScores result;
  if (interpretation == Interpretation::average) {
    for (std::size_t i = 0; i < kOperatorCount; ++i) {
      result.scores[i] = interpret_average(samples[i].values);
    }
    return result;
  }
  const PooledDistribution pooled = pool_distribution(samples, family);
  result.degenerate_pool = pooled.degenerate;
  for (std::size_t i = 0; i < kOperatorCount; ++i) {
    result.scores[i] = interpret_outlier(samples[i], pooled).score;
  }
  return result;
}

}  // namespace adaptea
