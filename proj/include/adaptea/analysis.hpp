#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "adaptea/run.hpp"
#include "adaptea/stats.hpp"

namespace adaptea {

// Performance summaries of one design on one problem.
//   mean:  average over stopping points of the mean confidence against rivals
//   final: mean confidence at the last stopping point
//   correlation: Pearson correlation between the confidence against the
//                baseline and the stopping point
struct CellSummary {
  std::string design;
  ProblemId problem;
  double mean = 0.0;
  double final = 0.0;
  std::vector<double> confidence_vs_baseline;  // per stopping point
  std::optional<double> correlation;
};

struct FiveNumber {
  double min, q1, median, q3, max;
};

FiveNumber five_number_summary(std::vector<double> values);

struct AnalysisReport {
  std::string baseline;
  std::vector<std::string> designs;
  std::vector<ProblemId> problems;
  std::vector<int> stopping_points;
  std::vector<CellSummary> cells;

  std::vector<std::string> anova_designs;
  std::optional<stats::AnovaResult> anova_mean;
  std::optional<stats::AnovaResult> anova_final;

  std::vector<std::string> paired_designs;  // "I1/I3" pairs
  std::optional<stats::PairedTResult> paired_mean;
  std::optional<stats::PairedTResult> paired_final;

  std::vector<std::string> warnings;

  const CellSummary* cell(const std::string& design, ProblemId problem) const;
};

// Needs records from at least two designs on common problems; throws
// ConfigError otherwise.
AnalysisReport analyze(std::span<const RunRecord> records, const std::string& baseline = "SGA1");

void print_report(std::ostream& out, const AnalysisReport& report);

// summary.csv, boxplot.csv and significance.csv.
void write_report_files(const std::filesystem::path& directory, const AnalysisReport& report);

}  // namespace adaptea
