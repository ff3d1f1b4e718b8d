#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace adaptea::stats {

enum class RankSumMethod { exact, normal_approximation };

// Largest pooled size for which the permutation distribution is enumerated.
inline constexpr std::size_t kExactRankSumLimit = 12;

// One-sided comparison of "a is stochastically greater than b".
//
// `p_value` is the mid-p value P(U > u) + P(U = u) / 2, which makes
// confidence(a, b) + confidence(b, a) == 1 and gives 0.5 for identical
// samples. `p_at_least` is the conventional P(U >= u) (with a continuity
// correction in the normal branch).
struct ComparisonResult {
  double confidence = 0.5;  // 1 - p_value
  double p_value = 0.5;
  double p_at_least = 1.0;
  double u_statistic = 0.0;  // pairs (a_i, b_j) with a_i > b_j, ties count 1/2
  RankSumMethod method = RankSumMethod::exact;
};

// Throws std::invalid_argument when either sample is empty.
ComparisonResult mann_whitney_confidence(std::span<const double> a, std::span<const double> b);
ComparisonResult mann_whitney_confidence(std::span<const double> a, std::span<const double> b,
                                         RankSumMethod method);

// Average confidence of `target` against every other design.
double mean_confidence(const std::map<std::string, std::vector<double>>& samples,
                       const std::string& target);

// Empty when either series has zero variance.
std::optional<double> pearson_correlation(std::span<const double> x, std::span<const double> y);

struct PairedTResult {
  double t = 0.0;
  double p = 0.5;  // one-sided, mean(a - b) > 0
  std::size_t n = 0;
  bool degenerate = false;  // zero variance of the differences
};

PairedTResult paired_t(std::span<const double> a, std::span<const double> b);

struct AnovaResult {
  double ss_between = 0.0;
  double ss_within = 0.0;
  int df_between = 0;
  int df_within = 0;
  double f = 0.0;
  double p = 1.0;
  bool degenerate = false;  // zero within-group variance
};

AnovaResult anova_f(std::span<const std::vector<double>> groups);
AnovaResult anova_from_sums(double ss_between, int df_between, double ss_within, int df_within);

// Upper tails of Student t and F, via the regularized incomplete beta.
double student_t_upper(double t, double df);
double fisher_f_upper(double f, double df1, double df2);

// Midranks of the pooled values (1-based, ties averaged).
std::vector<double> midranks(std::span<const double> values);

}  // namespace adaptea::stats
