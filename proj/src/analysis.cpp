#include "adaptea/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>

#include "adaptea/config.hpp"
#include "adaptea/design.hpp"
#include "adaptea/records.hpp"

namespace adaptea {

FiveNumber five_number_summary(std::vector<double> values) {
  if (values.empty()) {
    return {NAN, NAN, NAN, NAN, NAN};
  }
  std::sort(values.begin(), values.end());
  const auto quantile = [&](double q) {
    const double pos = q * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, values.size() - 1);
    return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
  };
  return {values.front(), quantile(0.25), quantile(0.5), quantile(0.75), values.back()};
}

const CellSummary* AnalysisReport::cell(const std::string& design, ProblemId problem) const {
  for (const auto& c : cells) {
    if (c.design == design && c.problem == problem) {
      return &c;
    }
  }
  return nullptr;
}

namespace {

// Catalog designs first, in catalog order, then anything else by name.
std::vector<std::string> order_designs(const std::set<std::string>& names) {
  std::vector<std::string> ordered;
  for (const auto& d : design_catalog()) {
    if (names.contains(d.name)) {
      ordered.push_back(d.name);
    }
  }
  for (const auto& n : names) {
    if (std::find(ordered.begin(), ordered.end(), n) == ordered.end()) {
      ordered.push_back(n);
    }
  }
  return ordered;
}

using SampleKey = std::pair<std::string, ProblemId>;

}  // namespace

AnalysisReport analyze(std::span<const RunRecord> records, const std::string& baseline) {
  AnalysisReport report;
  report.baseline = baseline;

  std::map<SampleKey, std::vector<const RunRecord*>> runs;
  std::set<std::string> names;
  for (const auto& r : records) {
    runs[{r.design, r.problem}].push_back(&r);
    names.insert(r.design);
  }
  report.designs = order_designs(names);
  if (report.designs.size() < 2) {
    throw ConfigError("analyze: records must cover at least two designs");
  }

  for (std::size_t p = 1; p <= kProblemCount; ++p) {
    const auto id = static_cast<ProblemId>(p);
    const bool everywhere = std::all_of(report.designs.begin(), report.designs.end(),
                                        [&](const auto& d) { return runs.contains({d, id}); });
    const bool anywhere = std::any_of(report.designs.begin(), report.designs.end(),
                                      [&](const auto& d) { return runs.contains({d, id}); });
    if (everywhere) {
      report.problems.push_back(id);
    } else if (anywhere) {
      report.warnings.push_back(to_string(id) + " skipped: not run for every design");
    }
  }
  if (report.problems.empty()) {
    throw ConfigError("analyze: no problem is common to all designs");
  }

  // Stopping points shared by every run on the common problems.
  {
    const RunRecord& first = *runs[{report.designs[0], report.problems[0]}].front();
    for (const auto& point : first.best_fitness_at) {
      report.stopping_points.push_back(point.generation);
    }
    for (const auto& [key, list] : runs) {
      for (const RunRecord* r : list) {
        std::vector<int> own;
        for (const auto& point : r->best_fitness_at) {
          own.push_back(point.generation);
        }
        if (own != report.stopping_points &&
            std::find(report.problems.begin(), report.problems.end(), key.second) !=
                report.problems.end()) {
          throw ConfigError("analyze: runs disagree on stopping points");
        }
      }
    }
  }
  const std::size_t stops = report.stopping_points.size();
  if (stops == 0) {
    throw ConfigError("analyze: records carry no stopping points");
  }

  const bool has_baseline = names.contains(baseline);
  if (!has_baseline) {
    report.warnings.push_back("no " + baseline + " records: correlation section omitted");
  }

  for (ProblemId problem : report.problems) {
    // samples[k][design] = best fitness of each run at stopping point k
    std::vector<std::map<std::string, std::vector<double>>> samples(stops);
    for (const auto& d : report.designs) {
      for (const RunRecord* r : runs[{d, problem}]) {
        for (std::size_t k = 0; k < stops; ++k) {
          samples[k][d].push_back(r->best_fitness_at[k].best_fitness);
        }
      }
    }
    std::vector<double> stop_axis(report.stopping_points.begin(), report.stopping_points.end());
    for (const auto& d : report.designs) {
      CellSummary cell;
      cell.design = d;
      cell.problem = problem;
      double total = 0.0;
      for (std::size_t k = 0; k < stops; ++k) {
        const double c = stats::mean_confidence(samples[k], d);
        total += c;
        if (k + 1 == stops) {
          cell.final = c;
        }
      }
      cell.mean = total / static_cast<double>(stops);
      if (has_baseline && d != baseline) {
        for (std::size_t k = 0; k < stops; ++k) {
          cell.confidence_vs_baseline.push_back(
              stats::mann_whitney_confidence(samples[k][d], samples[k][baseline]).confidence);
        }
        if (stops >= 2) {
          cell.correlation =
              stats::pearson_correlation(cell.confidence_vs_baseline, stop_axis);
        }
      }
      report.cells.push_back(std::move(cell));
    }
  }

  // Measurement-type ANOVA over the averaging designs.
  for (const char* name : {"A1-I1", "A2-I1", "A4-I1", "A5-I1", "A6-I1"}) {
    if (names.contains(name)) {
      report.anova_designs.push_back(name);
    }
  }
  if (report.anova_designs.size() >= 2) {
    std::vector<std::vector<double>> mean_groups;
    std::vector<std::vector<double>> final_groups;
    for (const auto& d : report.anova_designs) {
      auto& mg = mean_groups.emplace_back();
      auto& fg = final_groups.emplace_back();
      for (ProblemId p : report.problems) {
        mg.push_back(report.cell(d, p)->mean);
        fg.push_back(report.cell(d, p)->final);
      }
    }
    if (report.problems.size() >= 2) {
      report.anova_mean = stats::anova_f(mean_groups);
      report.anova_final = stats::anova_f(final_groups);
    } else {
      report.warnings.push_back("ANOVA skipped: needs at least two problems");
    }
  }

  // Outlier vs averaging interpretation, pairs pooled over A5 and A6.
  std::vector<double> outlier_mean, average_mean, outlier_final, average_final;
  for (const auto& [avg, out] : {std::pair{"A5-I1", "A5-I3"}, std::pair{"A6-I1", "A6-I3"}}) {
    if (!names.contains(avg) || !names.contains(out)) {
      continue;
    }
    report.paired_designs.push_back(std::string(avg) + "/" + out);
    for (ProblemId p : report.problems) {
      outlier_mean.push_back(report.cell(out, p)->mean);
      average_mean.push_back(report.cell(avg, p)->mean);
      outlier_final.push_back(report.cell(out, p)->final);
      average_final.push_back(report.cell(avg, p)->final);
    }
  }
  if (outlier_mean.size() >= 2) {
    report.paired_mean = stats::paired_t(outlier_mean, average_mean);
    report.paired_final = stats::paired_t(outlier_final, average_final);
  }
  return report;
}

namespace {

std::string fixed(double value, int digits = 3) {
  if (std::isnan(value)) {
    return "NA";
  }
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

std::string optional_fixed(const std::optional<double>& value) {
  return value ? fixed(*value) : "NA";
}

std::vector<double> correlations_of(const AnalysisReport& report, const std::string& design) {
  std::vector<double> values;
  for (ProblemId p : report.problems) {
    if (const auto* c = report.cell(design, p); c && c->correlation) {
      values.push_back(*c->correlation);
    }
  }
  return values;
}

}  // namespace

void print_report(std::ostream& out, const AnalysisReport& report) {
  out << "Stopping points: " << report.stopping_points.size() << " (last "
      << report.stopping_points.back() << ")\n\n";
  out << "design    problem  Mean    Final   Correlation vs " << report.baseline << "\n";
  for (const auto& c : report.cells) {
    char line[128];
    std::snprintf(line, sizeof(line), "%-9s %-8s %-7s %-7s %s\n", c.design.c_str(),
                  to_string(c.problem).c_str(), fixed(c.mean).c_str(), fixed(c.final).c_str(),
                  optional_fixed(c.correlation).c_str());
    out << line;
  }

  out << "\nPer-design distribution over problems (min / q1 / median / q3 / max)\n";
  for (const auto& d : report.designs) {
    std::vector<double> means, finals;
    for (ProblemId p : report.problems) {
      means.push_back(report.cell(d, p)->mean);
      finals.push_back(report.cell(d, p)->final);
    }
    const auto m = five_number_summary(means);
    const auto f = five_number_summary(finals);
    out << "  " << d << "  mean " << fixed(m.min) << " / " << fixed(m.q1) << " / "
        << fixed(m.median) << " / " << fixed(m.q3) << " / " << fixed(m.max) << "   final "
        << fixed(f.min) << " / " << fixed(f.q1) << " / " << fixed(f.median) << " / "
        << fixed(f.q3) << " / " << fixed(f.max) << '\n';
  }

  if (report.anova_mean) {
    out << "\nANOVA of measurement type (" << report.anova_designs.size() << " designs)\n";
    for (const auto& [label, a] : {std::pair{"Mean", *report.anova_mean},
                                   std::pair{"Final", *report.anova_final}}) {
      out << "  " << label << ": SS_between " << fixed(a.ss_between) << " (df " << a.df_between
          << ")  SS_within " << fixed(a.ss_within) << " (df " << a.df_within << ")  F "
          << fixed(a.f) << "  p " << fixed(a.p) << '\n';
    }
  }
  if (report.paired_mean) {
    out << "\nPaired t, outlier vs averaging interpretation\n";
    for (const auto& [label, t] : {std::pair{"Mean", *report.paired_mean},
                                   std::pair{"Final", *report.paired_final}}) {
      out << "  " << label << ": n " << t.n << "  t " << fixed(t.t, 2) << "  p " << fixed(t.p)
          << '\n';
    }
  }
  for (const auto& w : report.warnings) {
    out << "warning: " << w << '\n';
  }
}

void write_report_files(const std::filesystem::path& directory, const AnalysisReport& report) {
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  const auto open = [&](const char* name) {
    std::ofstream out(directory / name);
    if (!out) {
      throw IoError("cannot write " + (directory / name).string());
    }
    return out;
  };

  {
    auto out = open("summary.csv");
    out << "design,problem,mean,final,correlation\n";
    for (const auto& c : report.cells) {
      out << c.design << ',' << to_string(c.problem) << ',' << format_real(c.mean) << ','
          << format_real(c.final) << ','
          << (c.correlation ? format_real(*c.correlation) : std::string("NA")) << '\n';
    }
  }
  {
    auto out = open("boxplot.csv");
    out << "design,measure,count,min,q1,median,q3,max\n";
    for (const auto& d : report.designs) {
      std::vector<double> means, finals;
      for (ProblemId p : report.problems) {
        means.push_back(report.cell(d, p)->mean);
        finals.push_back(report.cell(d, p)->final);
      }
      const std::vector<double> corr = correlations_of(report, d);
      for (const auto& [measure, values] :
           {std::pair{"mean", means}, std::pair{"final", finals}, std::pair{"correlation", corr}}) {
        if (values.empty()) {
          continue;
        }
        const auto s = five_number_summary(values);
        out << d << ',' << measure << ',' << values.size() << ',' << format_real(s.min) << ','
            << format_real(s.q1) << ',' << format_real(s.median) << ',' << format_real(s.q3)
            << ',' << format_real(s.max) << '\n';
      }
    }
  }
  {
    auto out = open("significance.csv");
    out << "test,measure,statistic,df1,df2,p\n";
    if (report.anova_mean) {
      for (const auto& [label, a] : {std::pair{"mean", *report.anova_mean},
                                     std::pair{"final", *report.anova_final}}) {
        out << "anova," << label << ',' << format_real(a.f) << ',' << a.df_between << ','
            << a.df_within << ',' << format_real(a.p) << '\n';
      }
    }
    if (report.paired_mean) {
      for (const auto& [label, t] : {std::pair{"mean", *report.paired_mean},
                                     std::pair{"final", *report.paired_final}}) {
        out << "paired_t," << label << ',' << format_real(t.t) << ',' << t.n - 1 << ",,"
            << format_real(t.p) << '\n';
      }
    }
  }
}

}  // namespace adaptea
