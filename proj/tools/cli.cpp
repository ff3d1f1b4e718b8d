#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <vector>

#include "adaptea/analysis.hpp"
#include "adaptea/campaign.hpp"
#include "adaptea/config.hpp"
#include "adaptea/design.hpp"
#include "adaptea/operators.hpp"
#include "adaptea/records.hpp"

namespace adaptea::cli {

namespace fs = std::filesystem;

namespace {

struct RunArgs {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<int> jobs;
  std::string dump_probabilities;
  std::string dump_measurements;
};

struct AnalyzeArgs {
  std::vector<std::string> inputs;
  std::string out;
  std::string baseline = "SGA1";
};

struct DemoArgs {
  std::string design = "A5-I3";
  std::string problem = "F2";
  std::uint64_t seed = 1;
  int generations = 200;
  std::string dump_probabilities;
  std::string dump_measurements;
};

void list_problems(std::ostream& out) {
  out << "id,name,dimension,lower,upper\n";
  for (const auto& spec : problem_catalog()) {
    out << to_string(spec.id) << ',' << spec.name << ',' << spec.dimension << ','
        << spec.bounds.lower.front() << ',' << spec.bounds.upper.front() << '\n';
  }
}

void list_operators(std::ostream& out) {
  out << "id,name,arity,parameter\n";
  for (const auto& op : operator_catalog()) {
    out << static_cast<int>(op.id) << ',' << op.name << ',' << op.arity << ',';
    if (op.parameter != 0.0) {
      out << op.parameter;
    }
    out << '\n';
  }
}

fs::path prepare_directory(const std::string& path) {
  std::error_code ec;
  fs::create_directories(path, ec);
  if (ec || !fs::is_directory(path)) {
    throw IoError("cannot create directory " + path);
  }
  return path;
}

int run_command(const RunArgs& args, std::ostream& out, std::ostream& err) {
  CampaignConfig config = load_config(args.config);
  if (!args.out.empty()) {
    config.output_directory = args.out;
  }
  if (args.seed) {
    config.master_seed = *args.seed;
  }
  if (args.jobs) {
    config.jobs = *args.jobs;
  }
  validate(config);
  const fs::path directory = prepare_directory(config.output_directory.string());
  if (!args.dump_probabilities.empty()) {
    config.probability_dump_dir = prepare_directory(args.dump_probabilities);
  }
  if (!args.dump_measurements.empty()) {
    config.measurement_dump_dir = prepare_directory(args.dump_measurements);
  }
  const fs::path csv_path = directory / "records.csv";
  std::ofstream csv(csv_path);
  if (!csv) {
    throw IoError("cannot write " + csv_path.string());
  }
  const CampaignResult result =
      config.jobs > 1 ? run_campaign(config, &csv) : run_campaign_serial(config, &csv);
  out << "wrote " << result.records.size() << " runs to " << csv_path.string() << '\n';
  if (!result.failures.empty()) {
    for (const auto& f : result.failures) {
      err << "run failed: " << f << '\n';
    }
    return kExitIo;
  }
  return kExitOk;
}

std::vector<RunRecord> load_records(const std::vector<std::string>& inputs) {
  std::vector<fs::path> files;
  for (const auto& input : inputs) {
    if (fs::is_directory(input)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(input)) {
        if (entry.path().filename() == "records.csv") {
          found.push_back(entry.path());
        }
      }
      if (found.empty()) {
        throw IoError("no records.csv in " + input);
      }
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.emplace_back(input);
    }
  }
  std::vector<RunRecord> records;
  for (const auto& file : files) {
    std::ifstream in(file);
    if (!in) {
      throw IoError("cannot read " + file.string());
    }
    auto part = read_records_csv(in);
    records.insert(records.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
  }
  return records;
}

int analyze_command(const AnalyzeArgs& args, std::ostream& out) {
  const auto records = load_records(args.inputs);
  const AnalysisReport report = analyze(records, args.baseline);
  print_report(out, report);
  if (!args.out.empty()) {
    write_report_files(prepare_directory(args.out), report);
  }
  return kExitOk;
}

int demo_command(const DemoArgs& args, std::ostream& out) {
  const auto design = find_design(args.design);
  if (!design) {
    throw ConfigError("unknown design '" + args.design + "'");
  }
  const auto id = parse_problem_id(args.problem);
  if (!id) {
    throw ConfigError("unknown problem '" + args.problem + "'");
  }
  RunOptions options;
  options.max_generations = args.generations;
  options.stopping_interval = args.generations < 100 ? args.generations : 100;
  if (options.max_generations < 1) {
    throw ConfigError("generations must be positive");
  }

  RunTrace trace;
  trace.record_probabilities = !args.dump_probabilities.empty();
  trace.record_measurements = !args.dump_measurements.empty();

  out << "design " << design->name << " on " << to_string(*id) << " (" << problem(*id).name
      << "), seed " << args.seed << '\n';
  out << "generation";
  for (std::size_t i = 1; i <= kOperatorCount; ++i) {
    out << "  op" << i;
  }
  out << '\n';
  const auto print_vector = [&](int generation, const ProbabilityVector& p) {
    char cell[16];
    std::snprintf(cell, sizeof(cell), "%10d", generation);
    out << cell;
    for (double v : p) {
      std::snprintf(cell, sizeof(cell), " %5.3f", v);
      out << cell;
    }
    out << '\n';
    out.flush();
  };
  print_vector(0, design->initial);
  const RunRecord record =
      execute_run(*design, problem(*id), 0, args.seed, options, &trace, print_vector);
  for (const auto& point : record.best_fitness_at) {
    out << "best at " << point.generation << ": " << format_real(point.best_fitness) << '\n';
  }
  if (record.solved_generation) {
    out << "solved at generation " << *record.solved_generation << '\n';
  }

  if (trace.record_probabilities) {
    std::ofstream file(args.dump_probabilities);
    if (!file) {
      throw IoError("cannot write " + args.dump_probabilities);
    }
    write_probability_trace(file, trace);
  }
  if (trace.record_measurements) {
    std::ofstream file(args.dump_measurements);
    if (!file) {
      throw IoError("cannot write " + args.dump_measurements);
    }
    write_measurement_trace(file, trace,
                            design->measurement ? to_string(*design->measurement) : "none");
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Adaptive operator-probability evolutionary algorithm experiments", "adaptea"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Run a seeded campaign from a config file");
  run->add_option("--config", run_args.config, "Campaign config file")->required();
  run->add_option("--out", run_args.out, "Output directory (overrides config)");
  run->add_option("--seed", run_args.seed, "Master seed (overrides config)");
  run->add_option("--jobs", run_args.jobs, "Concurrent runs (overrides config)");
  run->add_option("--dump-probabilities", run_args.dump_probabilities,
                  "Directory for per-run probability trajectories");
  run->add_option("--dump-measurements", run_args.dump_measurements,
                  "Directory for per-run measurement dumps");

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Summarize persisted run records");
  analyze_cmd->add_option("inputs", analyze_args.inputs, "records.csv files or directories")
      ->required();
  analyze_cmd->add_option("--out", analyze_args.out, "Directory for report CSVs");
  analyze_cmd->add_option("--baseline", analyze_args.baseline, "Design used for correlations");

  auto* list_p = app.add_subcommand("list-problems", "List the benchmark problems");
  auto* list_o = app.add_subcommand("list-operators", "List the search operators");

  DemoArgs demo_args;
  auto* demo = app.add_subcommand("demo", "Single seeded run with per-cycle probabilities");
  demo->add_option("--design", demo_args.design, "Design name");
  demo->add_option("--problem", demo_args.problem, "Problem id (F1..F10)");
  demo->add_option("--seed", demo_args.seed, "Run seed");
  demo->add_option("--generations", demo_args.generations, "Generations to run");
  demo->add_option("--dump-probabilities", demo_args.dump_probabilities,
                   "CSV file for the probability trajectory");
  demo->add_option("--dump-measurements", demo_args.dump_measurements,
                   "CSV file for raw measurements");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*list_p) {
      list_problems(out);
      return kExitOk;
    }
    if (*list_o) {
      list_operators(out);
      return kExitOk;
    }
    if (*run) {
      return run_command(run_args, out, err);
    }
    if (*analyze_cmd) {
      return analyze_command(analyze_args, out);
    }
    if (*demo) {
      return demo_command(demo_args, out);
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace adaptea::cli
