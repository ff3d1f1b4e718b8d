#include "adaptea/records.hpp"

#include <charconv>
#include <cstdio>
#include <map>
#include <sstream>
#include <tuple>

#include "adaptea/config.hpp"

namespace adaptea {

std::string format_real(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void write_record_rows(std::ostream& out, const RunRecord& record) {
  for (const auto& point : record.best_fitness_at) {
    out << record.design << ',' << to_string(record.problem) << ',' << record.run_index << ','
        << record.seed << ',' << point.generation << ',' << format_real(point.best_fitness) << ','
        << (is_solved(point.best_fitness) ? 1 : 0) << '\n';
  }
}

void write_records_csv(std::ostream& out, std::span<const RunRecord> records) {
  out << kRecordHeader << '\n';
  for (const auto& r : records) {
    write_record_rows(out, r);
  }
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream stream(line);
  std::string field;
  while (std::getline(stream, field, ',')) {
    fields.push_back(field);
  }
  return fields;
}

template <typename T>
T to_number(const std::string& text, int line) {
  T out{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("records line " + std::to_string(line) + ": bad number '" + text + "'");
  }
  return out;
}

}  // namespace

std::vector<RunRecord> read_records_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    return {};
  }
  if (!line.empty() && line.back() == '\r') {
    line.pop_back();
  }
  if (line != kRecordHeader) {
    throw ConfigError("records: unexpected header '" + line + "'");
  }
  std::vector<RunRecord> records;
  std::map<std::tuple<std::string, int, int>, std::size_t> index;
  int line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    const auto fields = split(line);
    if (fields.size() != 7) {
      throw ConfigError("records line " + std::to_string(line_number) + ": expected 7 fields");
    }
    const auto problem = parse_problem_id(fields[1]);
    if (!problem) {
      throw ConfigError("records line " + std::to_string(line_number) + ": unknown problem");
    }
    const int run = to_number<int>(fields[2], line_number);
    const auto key = std::make_tuple(fields[0], static_cast<int>(*problem), run);
    auto [it, inserted] = index.try_emplace(key, records.size());
    if (inserted) {
      RunRecord r;
      r.design = fields[0];
      r.problem = *problem;
      r.run_index = run;
      r.seed = to_number<std::uint64_t>(fields[3], line_number);
      records.push_back(std::move(r));
    }
    RunRecord& record = records[it->second];
    double fitness = 0.0;
    try {
      fitness = std::stod(fields[5]);
    } catch (const std::exception&) {
      throw ConfigError("records line " + std::to_string(line_number) + ": bad fitness");
    }
    const int generation = to_number<int>(fields[4], line_number);
    record.best_fitness_at.push_back({generation, fitness});
    if (!record.solved_generation && fields[6] == "1") {
      record.solved_generation = generation;
    }
  }
  return records;
}

void write_probability_trace(std::ostream& out, const RunTrace& trace) {
  out << "generation,op_id,probability\n";
  for (const auto& row : trace.probabilities) {
    out << row.generation << ',' << static_cast<int>(row.op) << ','
        << format_real(row.probability) << '\n';
  }
}

void write_measurement_trace(std::ostream& out, const RunTrace& trace, const std::string& kind) {
  out << "generation,operator_id,kind,value\n";
  for (const auto& [window_start, row] : trace.measurements) {
    out << row.generation << ',' << static_cast<int>(row.op) << ',' << kind << ','
        << format_real(row.value) << '\n';
  }
}

}  // namespace adaptea
