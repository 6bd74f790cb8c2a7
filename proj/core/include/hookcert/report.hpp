#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hookcert/claims.hpp"
#include "hookcert/lemmas.hpp"

namespace hookcert {

/// One JSON object per line, no trailing newline. With `timing` false every
/// millis field is written as 0, so repeated runs are byte-identical.
std::string to_json_line(const ClaimOutcome& outcome, bool timing = true);

/// Lossy summary: k,parity,status,tuples,partitions,millis.
std::string csv_header();
std::string to_csv_row(const ClaimOutcome& outcome, bool timing = true);

/// k,next_prime,gap,window.
std::string gap_csv_header();
std::string to_csv_row(const GapException& gap);
std::string to_json_line(const GapException& gap);

/// Marker appended when a run is interrupted.
std::string truncation_line(std::size_t completed, std::size_t requested);

/// (k, parity) of a fact-level record, or nullopt for other lines.
std::optional<std::pair<int, Parity>> fact_record_key(std::string_view line);

/// Reads a report's fact records keyed by (k, parity), keeping the lines
/// verbatim. Meta and truncation lines are dropped.
std::vector<std::pair<std::pair<int, Parity>, std::string>> read_fact_records(
    const std::string& path);

}  // namespace hookcert
