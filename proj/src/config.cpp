#include "adaptea/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "adaptea/design.hpp"

namespace adaptea {

namespace {

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = text.find_last_not_of(" \t\r");
  return std::string(text.substr(first, last - first + 1));
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError("config: bad value for '" + key + "': " + value);
  }
  return out;
}

double parse_real(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || value.empty()) {
    throw ConfigError("config: bad value for '" + key + "': " + value);
  }
  return out;
}

}  // namespace

CampaignConfig parse_config(std::istream& in) {
  CampaignConfig config;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const std::string content = trim(line);
    if (content.empty()) {
      continue;
    }
    const auto eq = content.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_number) + ": expected key = value");
    }
    const std::string key = trim(std::string_view(content).substr(0, eq));
    const std::string value = trim(std::string_view(content).substr(eq + 1));

    if (key == "design") {
      if (value == "all") {
        for (const auto& d : design_catalog()) {
          config.designs.push_back(d.name);
        }
      } else {
        config.designs.push_back(value);
      }
    } else if (key == "problem") {
      if (value == "all") {
        for (const auto& p : problem_catalog()) {
          config.problems.push_back(p.id);
        }
      } else if (const auto id = parse_problem_id(value)) {
        config.problems.push_back(*id);
      } else {
        throw ConfigError("config: unknown problem '" + value + "'");
      }
    } else if (key == "runs") {
      config.runs_per_cell = parse_number<int>(key, value);
    } else if (key == "generations") {
      config.max_generations = parse_number<int>(key, value);
    } else if (key == "interval") {
      config.stopping_interval = parse_number<int>(key, value);
    } else if (key == "seed") {
      config.master_seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "out") {
      config.output_directory = value;
    } else if (key == "jobs") {
      config.jobs = parse_number<int>(key, value);
    } else if (key == "distribution") {
      if (value == "normal") {
        config.family = Distribution::normal;
      } else if (value == "lognormal") {
        config.family = Distribution::lognormal;
      } else {
        throw ConfigError("config: distribution must be normal or lognormal");
      }
    } else if (key == "differential_weight") {
      config.differential_weight = parse_real(key, value);
    } else {
      throw ConfigError("config line " + std::to_string(line_number) + ": unknown key '" + key +
                        "'");
    }
  }
  return config;
}

CampaignConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot read config file " + path.string());
  }
  return parse_config(in);
}

void validate(const CampaignConfig& config) {
  if (config.designs.empty()) {
    throw ConfigError("config: at least one design is required");
  }
  for (const auto& name : config.designs) {
    if (!find_design(name)) {
      throw ConfigError("config: unknown design '" + name + "'");
    }
  }
  if (config.problems.empty()) {
    throw ConfigError("config: at least one problem is required");
  }
  if (config.runs_per_cell < 1) {
    throw ConfigError("config: runs must be >= 1");
  }
  if (config.max_generations < 1 || config.stopping_interval < 1 ||
      config.max_generations % config.stopping_interval != 0) {
    throw ConfigError("config: interval must be positive and divide generations");
  }
  if (config.jobs < 1) {
    throw ConfigError("config: jobs must be >= 1");
  }
  if (!(config.differential_weight > 0.0)) {
    throw ConfigError("config: differential_weight must be positive");
  }
}

RunOptions run_options(const CampaignConfig& config) {
  RunOptions options;
  options.max_generations = config.max_generations;
  options.stopping_interval = config.stopping_interval;
  options.family = config.family;
  options.engine.operators.differential_weight = config.differential_weight;
  return options;
}

}  // namespace adaptea
