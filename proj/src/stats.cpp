#include "adaptea/stats.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/students_t.hpp>

namespace adaptea::stats {

std::vector<double> midranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return values[x] < values[y]; });
  std::vector<double> ranks(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) {
      ++j;
    }
    const double rank = 0.5 * static_cast<double>(i + j + 2);
    for (std::size_t k = i; k <= j; ++k) {
      ranks[order[k]] = rank;
    }
    i = j + 1;
  }
  return ranks;
}

namespace {

double normal_upper(double z) { return 0.5 * std::erfc(z / std::numbers::sqrt2); }

// Permutation distribution of the rank sum over all C(N, n_a) splits. Ranks
// are doubled so midranks become integers and comparisons are exact.
struct TailCounts {
  std::uint64_t greater = 0;
  std::uint64_t equal = 0;
  std::uint64_t total = 0;
};

TailCounts exact_tail(const std::vector<double>& ranks, std::size_t n_a, long observed_twice) {
  const std::size_t total = ranks.size();
  std::vector<long> twice(total);
  for (std::size_t i = 0; i < total; ++i) {
    twice[i] = std::lround(2.0 * ranks[i]);
  }
  TailCounts counts;
  const std::uint32_t limit = 1u << total;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != n_a) {
      continue;
    }
    long sum = 0;
    for (std::size_t i = 0; i < total; ++i) {
      if (mask & (1u << i)) {
        sum += twice[i];
      }
    }
    ++counts.total;
    if (sum > observed_twice) {
      ++counts.greater;
    } else if (sum == observed_twice) {
      ++counts.equal;
    }
  }
  return counts;
}

// The smaller tail is taken as computed and the other is its complement, so
// swapping the samples gives confidences summing to exactly 1.
void set_mid_p(ComparisonResult& result, double upper, double lower, bool upper_is_smaller) {
  if (upper_is_smaller) {
    result.p_value = upper;
    result.confidence = 1.0 - upper;
  } else {
    result.confidence = lower;
    result.p_value = 1.0 - lower;
  }
}

}  // namespace

ComparisonResult mann_whitney_confidence(std::span<const double> a, std::span<const double> b) {
  const auto method = a.size() + b.size() <= kExactRankSumLimit
                          ? RankSumMethod::exact
                          : RankSumMethod::normal_approximation;
  return mann_whitney_confidence(a, b, method);
}

ComparisonResult mann_whitney_confidence(std::span<const double> a, std::span<const double> b,
                                         RankSumMethod method) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("mann_whitney_confidence: empty sample");
  }
  const std::size_t n_a = a.size();
  const std::size_t n_b = b.size();
  const std::size_t total = n_a + n_b;
  if (method == RankSumMethod::exact && total > 20) {
    throw std::invalid_argument("mann_whitney_confidence: exact branch limited to 20 values");
  }

  std::vector<double> pooled(a.begin(), a.end());
  pooled.insert(pooled.end(), b.begin(), b.end());
  const std::vector<double> ranks = midranks(pooled);
  const double rank_sum = std::accumulate(ranks.begin(), ranks.begin() + n_a, 0.0);
  const double offset = 0.5 * static_cast<double>(n_a * (n_a + 1));

  ComparisonResult result;
  result.method = method;
  result.u_statistic = rank_sum - offset;

  if (method == RankSumMethod::exact) {
    const TailCounts c = exact_tail(ranks, n_a, std::lround(2.0 * rank_sum));
    const std::uint64_t less = c.total - c.greater - c.equal;
    const double twice_total = 2.0 * static_cast<double>(c.total);
    set_mid_p(result, static_cast<double>(2 * c.greater + c.equal) / twice_total,
              static_cast<double>(2 * less + c.equal) / twice_total, c.greater < less);
    result.p_at_least =
        static_cast<double>(c.greater + c.equal) / static_cast<double>(c.total);
  } else {
    const double na = static_cast<double>(n_a);
    const double nb = static_cast<double>(n_b);
    const double nt = static_cast<double>(total);
    double tie_sum = 0.0;
    std::vector<double> sorted = pooled;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < total;) {
      std::size_t j = i;
      while (j + 1 < total && sorted[j + 1] == sorted[i]) {
        ++j;
      }
      const double t = static_cast<double>(j - i + 1);
      tie_sum += t * t * t - t;
      i = j + 1;
    }
    const double mean = 0.5 * na * nb;
    const double variance = na * nb / 12.0 * ((nt + 1.0) - tie_sum / (nt * (nt - 1.0)));
    if (!(variance > 0.0)) {
      result.p_value = 0.5;
      result.confidence = 0.5;
      result.p_at_least = 1.0;
    } else {
      const double sd = std::sqrt(variance);
      const double z = (result.u_statistic - mean) / sd;
      set_mid_p(result, normal_upper(z), normal_upper(-z), z > 0.0);
      result.p_at_least = normal_upper((result.u_statistic - mean - 0.5) / sd);
    }
  }
  return result;
}

double mean_confidence(const std::map<std::string, std::vector<double>>& samples,
                       const std::string& target) {
  const auto it = samples.find(target);
  if (it == samples.end()) {
    throw std::invalid_argument("mean_confidence: unknown design " + target);
  }
  if (samples.size() < 2) {
    throw std::invalid_argument("mean_confidence: needs at least two designs");
  }
  double sum = 0.0;
  for (const auto& [name, sample] : samples) {
    if (name != target) {
      sum += mann_whitney_confidence(it->second, sample).confidence;
    }
  }
  return sum / static_cast<double>(samples.size() - 1);
}

std::optional<double> pearson_correlation(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("pearson_correlation: needs two equal-length series of size >= 2");
  }
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (!(sxx > 0.0) || !(syy > 0.0)) {
    return std::nullopt;
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double student_t_upper(double t, double df) {
  if (std::isinf(t)) {
    return t > 0 ? 0.0 : 1.0;
  }
  const boost::math::students_t dist(df);
  return boost::math::cdf(boost::math::complement(dist, t));
}

double fisher_f_upper(double f, double df1, double df2) {
  if (std::isinf(f)) {
    return 0.0;
  }
  const boost::math::fisher_f dist(df1, df2);
  return boost::math::cdf(boost::math::complement(dist, std::max(f, 0.0)));
}

PairedTResult paired_t(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.size() < 2) {
    throw std::invalid_argument("paired_t: needs two equal-length samples of size >= 2");
  }
  const std::size_t n = a.size();
  std::vector<double> diff(n);
  for (std::size_t i = 0; i < n; ++i) {
    diff[i] = a[i] - b[i];
  }
  const double mean = std::accumulate(diff.begin(), diff.end(), 0.0) / static_cast<double>(n);
  double squares = 0.0;
  for (double d : diff) {
    squares += (d - mean) * (d - mean);
  }
  const double sd = std::sqrt(squares / static_cast<double>(n - 1));

  PairedTResult result;
  result.n = n;
  if (!(sd > 0.0)) {
    result.degenerate = true;
    if (mean == 0.0) {
      result.t = 0.0;
      result.p = 0.5;
    } else {
      result.t = mean > 0 ? std::numeric_limits<double>::infinity()
                          : -std::numeric_limits<double>::infinity();
      result.p = mean > 0 ? 0.0 : 1.0;
    }
    return result;
  }
  result.t = mean / (sd / std::sqrt(static_cast<double>(n)));
  result.p = student_t_upper(result.t, static_cast<double>(n - 1));
  return result;
}

AnovaResult anova_from_sums(double ss_between, int df_between, double ss_within, int df_within) {
  if (df_between < 1 || df_within < 1) {
    throw std::invalid_argument("anova: degrees of freedom must be positive");
  }
  AnovaResult result;
  result.ss_between = ss_between;
  result.ss_within = ss_within;
  result.df_between = df_between;
  result.df_within = df_within;
  const double ms_between = ss_between / df_between;
  const double ms_within = ss_within / df_within;
  if (!(ms_within > 0.0)) {
    result.degenerate = true;
    if (ms_between > 0.0) {
      result.f = std::numeric_limits<double>::infinity();
      result.p = 0.0;
    } else {
      result.f = 0.0;
      result.p = 1.0;
    }
    return result;
  }
  result.f = ms_between / ms_within;
  result.p = fisher_f_upper(result.f, df_between, df_within);
  return result;
}

AnovaResult anova_f(std::span<const std::vector<double>> groups) {
  std::size_t total = 0;
  double grand = 0.0;
  for (const auto& g : groups) {
    if (g.empty()) {
      throw std::invalid_argument("anova_f: empty group");
    }
    total += g.size();
    grand += std::accumulate(g.begin(), g.end(), 0.0);
  }
  if (groups.size() < 2 || total <= groups.size()) {
    throw std::invalid_argument("anova_f: needs >= 2 groups and more values than groups");
  }
  grand /= static_cast<double>(total);
  double ss_between = 0.0;
  double ss_within = 0.0;
  for (const auto& g : groups) {
    const double mean = std::accumulate(g.begin(), g.end(), 0.0) / static_cast<double>(g.size());
    ss_between += static_cast<double>(g.size()) * (mean - grand) * (mean - grand);
    for (double v : g) {
      ss_within += (v - mean) * (v - mean);
    }
  }
  return anova_from_sums(ss_between, static_cast<int>(groups.size() - 1), ss_within,
                         static_cast<int>(total - groups.size()));
}

}  // namespace adaptea::stats
