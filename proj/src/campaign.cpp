#include "adaptea/campaign.hpp"

#include <fstream>
#include <optional>

#include "adaptea/records.hpp"

namespace adaptea {

std::vector<RunTask> plan_campaign(const CampaignConfig& config) {
  validate(config);
  std::vector<RunTask> tasks;
  for (const auto& name : config.designs) {
    const DesignSpec design = *find_design(name);
    for (ProblemId problem : config.problems) {
      for (int run = 0; run < config.runs_per_cell; ++run) {
        tasks.push_back({design, problem, run,
                         derive_seed(config.master_seed, name, to_string(problem),
                                     static_cast<std::uint64_t>(run))});
      }
    }
  }
  return tasks;
}

OrderedRecordWriter::OrderedRecordWriter(std::ostream* out) : out_(out) {}

void OrderedRecordWriter::complete(std::size_t index, const RunRecord& record) {
  std::lock_guard lock(mutex_);
  pending_.emplace(index, record);
  flush_ready();
}

void OrderedRecordWriter::fail(std::size_t index) {
  std::lock_guard lock(mutex_);
  pending_.emplace(index, std::nullopt);
  flush_ready();
}

void OrderedRecordWriter::flush_ready() {
  for (auto it = pending_.find(next_); it != pending_.end(); it = pending_.find(next_)) {
    if (it->second && out_ != nullptr) {
      write_record_rows(*out_, *it->second);
      out_->flush();
    }
    pending_.erase(it);
    ++next_;
  }
}

namespace {

std::string trace_stem(const RunTask& task) {
  return task.design.name + "_" + to_string(task.problem) + "_" + std::to_string(task.run_index);
}

RunRecord execute_task(const RunTask& task, const CampaignConfig& config,
                       const RunOptions& options) {
  const bool dump_p = config.probability_dump_dir.has_value();
  const bool dump_m = config.measurement_dump_dir.has_value() && task.design.adaptive();
  if (!dump_p && !dump_m) {
    return execute_run(task.design, problem(task.problem), task.run_index, task.seed, options);
  }
  RunTrace trace;
  trace.record_probabilities = dump_p;
  trace.record_measurements = dump_m;
  RunRecord record =
      execute_run(task.design, problem(task.problem), task.run_index, task.seed, options, &trace);
  if (dump_p) {
    std::ofstream out(*config.probability_dump_dir / (trace_stem(task) + "_probabilities.csv"));
    if (!out) {
      throw IoError("cannot write probability trace");
    }
    write_probability_trace(out, trace);
  }
  if (dump_m) {
    std::ofstream out(*config.measurement_dump_dir / (trace_stem(task) + "_measurements.csv"));
    if (!out) {
      throw IoError("cannot write measurement trace");
    }
    write_measurement_trace(out, trace, to_string(*task.design.measurement));
  }
  return record;
}

CampaignResult collect(const std::vector<RunTask>& tasks,
                       std::vector<std::optional<RunRecord>>& slots,
                       std::vector<std::string>& errors) {
  CampaignResult result;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (slots[i]) {
      result.records.push_back(std::move(*slots[i]));
    } else {
      result.failures.push_back(tasks[i].design.name + "/" + to_string(tasks[i].problem) + "/" +
                                std::to_string(tasks[i].run_index) + ": " + errors[i]);
    }
  }
  return result;
}

void write_header(std::ostream* csv) {
  if (csv != nullptr) {
    *csv << kRecordHeader << '\n';
  }
}

}  // namespace

CampaignResult run_campaign_serial(const CampaignConfig& config, std::ostream* csv) {
  const auto tasks = plan_campaign(config);
  const RunOptions options = run_options(config);
  std::vector<std::optional<RunRecord>> slots(tasks.size());
  std::vector<std::string> errors(tasks.size());
  write_header(csv);
  OrderedRecordWriter writer(csv);
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    try {
      slots[i] = execute_task(tasks[i], config, options);
      writer.complete(i, *slots[i]);
    } catch (const std::exception& e) {
      errors[i] = e.what();
      writer.fail(i);
    }
  }
  return collect(tasks, slots, errors);
}

CampaignResult run_campaign(const CampaignConfig& config, std::ostream* csv) {
  const auto tasks = plan_campaign(config);
  const RunOptions options = run_options(config);
  std::vector<std::optional<RunRecord>> slots(tasks.size());
  std::vector<std::string> errors(tasks.size());
  write_header(csv);
  OrderedRecordWriter writer(csv);
  const long count = static_cast<long>(tasks.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(config.jobs)
  for (long i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      slots[k] = execute_task(tasks[k], config, options);
      writer.complete(k, *slots[k]);
    } catch (const std::exception& e) {
      errors[k] = e.what();
      writer.fail(k);
    }
  }
  return collect(tasks, slots, errors);
}

}  // namespace adaptea
