#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "adaptea/interpret.hpp"
#include "adaptea/objectives.hpp"
#include "adaptea/run.hpp"

namespace adaptea {

// Malformed or inconsistent settings.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable input or unwritable output.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CampaignConfig {
  std::vector<std::string> designs;
  std::vector<ProblemId> problems;
  int runs_per_cell = 10;
  int max_generations = 2000;
  int stopping_interval = 100;
  std::uint64_t master_seed = 1;
  std::filesystem::path output_directory = "results";
  int jobs = 1;
  Distribution family = Distribution::normal;
  double differential_weight = 0.8;

  // Per-run trace files; not read from config files.
  std::optional<std::filesystem::path> probability_dump_dir;
  std::optional<std::filesystem::path> measurement_dump_dir;
};

// Flat "key = value" text; '#' starts a comment; `design` and `problem` may
// repeat and accept "all".
CampaignConfig parse_config(std::istream& in);
CampaignConfig load_config(const std::filesystem::path& path);

// Throws ConfigError.
void validate(const CampaignConfig& config);

RunOptions run_options(const CampaignConfig& config);

}  // namespace adaptea
