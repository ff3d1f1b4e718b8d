#pragma once

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "adaptea/run.hpp"

namespace adaptea {

inline constexpr const char* kRecordHeader =
    "design,problem,run,seed,stopping_point,best_fitness,solved";

// Fitness with 17 significant digits so values round-trip exactly.
std::string format_real(double value);

// One row per stopping point, no header.
void write_record_rows(std::ostream& out, const RunRecord& record);
void write_records_csv(std::ostream& out, std::span<const RunRecord> records);

// Inverse of write_records_csv; rows of one run are grouped in file order.
// Throws ConfigError on malformed input.
std::vector<RunRecord> read_records_csv(std::istream& in);

void write_probability_trace(std::ostream& out, const RunTrace& trace);
void write_measurement_trace(std::ostream& out, const RunTrace& trace, const std::string& kind);

}  // namespace adaptea
