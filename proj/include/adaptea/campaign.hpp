#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <ostream>
#include <string>
#include <vector>

#include "adaptea/config.hpp"
#include "adaptea/design.hpp"
#include "adaptea/run.hpp"

namespace adaptea {

struct RunTask {
  DesignSpec design;
  ProblemId problem;
  int run_index;
  std::uint64_t seed;
};

// Canonical order: design, then problem, then run index.
std::vector<RunTask> plan_campaign(const CampaignConfig& config);

// Writes records in task order regardless of completion order. Completed
// rows are flushed as soon as every earlier task has finished or failed.
class OrderedRecordWriter {
 public:
  explicit OrderedRecordWriter(std::ostream* out);

  void complete(std::size_t index, const RunRecord& record);
  void fail(std::size_t index);

 private:
  void flush_ready();

  std::ostream* out_;
  std::mutex mutex_;
  std::size_t next_ = 0;
  std::map<std::size_t, std::optional<RunRecord>> pending_;
};

struct CampaignResult {
  std::vector<RunRecord> records;    // task order, successful runs only
  std::vector<std::string> failures;
};

// Reference implementation: runs tasks one by one.
CampaignResult run_campaign_serial(const CampaignConfig& config, std::ostream* csv = nullptr);

// Runs tasks concurrently on config.jobs OpenMP threads. Output is identical
// to run_campaign_serial.
CampaignResult run_campaign(const CampaignConfig& config, std::ostream* csv = nullptr);

}  // namespace adaptea
