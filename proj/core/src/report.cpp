#include "hookcert/report.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hookcert {

namespace {

using nlohmann::json;

std::int64_t rounded(double millis, bool timing) {
  return timing ? static_cast<std::int64_t>(std::llround(millis)) : 0;
}

json partitions_json(const std::vector<Partition>& list) {
  json out = json::array();
  for (const auto& p : list) out.push_back(p.to_string());
  return out;
}

json outcome_json(const ClaimOutcome& o, bool timing, bool nested) {
  json j;
  j["claim"] = to_string(o.claim);
  j["k"] = o.k;
  j["parity"] = to_string(o.parity);
  j["status"] = to_string(o.status);
  if (!o.method.empty()) j["method"] = o.method;
  j["counterexamples"] = partitions_json(o.counterexamples);
  json matches = json::array();
  for (const auto& m : o.matches) {
    matches.push_back({{"partition", m.partition.to_string()}, {"target", to_string(m.kind)}});
  }
  j["matches"] = std::move(matches);
  j["tuples"] = o.tuples;
  j["partitions"] = o.partitions;
  j["prime_sub"] = o.prime_sub;
  j["millis"] = rounded(o.millis, timing);
  if (!o.notes.empty()) j["notes"] = o.notes;
  if (!o.parts.empty()) {
    json parts = json::array();
    for (const auto& part : o.parts) parts.push_back(outcome_json(part, timing, true));
    j["claims"] = std::move(parts);
  }
  if (nested) {
    j.erase("k");
    j.erase("parity");
  }
  return j;
}

}  // namespace

std::string to_json_line(const ClaimOutcome& outcome, bool timing) {
  return outcome_json(outcome, timing, false).dump();
}

std::string csv_header() { return "k,parity,status,tuples,partitions,millis"; }

std::string to_csv_row(const ClaimOutcome& o, bool timing) {
  std::ostringstream row;
  row << o.k << ',' << to_string(o.parity) << ',' << to_string(o.status) << ',' << o.tuples << ','
      << o.partitions << ',' << rounded(o.millis, timing);
  return row.str();
}

std::string gap_csv_header() { return "k,next_prime,gap,window"; }

std::string to_csv_row(const GapException& gap) {
  std::ostringstream row;
  row << gap.k << ',' << gap.next_prime << ',' << gap.gap << ',' << gap.window;
  return row.str();
}

std::string to_json_line(const GapException& gap) {
  return json{{"claim", "gap-exception"},
              {"k", gap.k},
              {"next_prime", gap.next_prime},
              {"gap", gap.gap},
              {"window", gap.window}}
      .dump();
}

std::string truncation_line(std::size_t completed, std::size_t requested) {
  return json{{"truncated", true}, {"completed", completed}, {"requested", requested}}.dump();
}

std::optional<std::pair<int, Parity>> fact_record_key(std::string_view line) {
  const json j = json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  if (j.value("claim", "") != "fact" || !j.contains("k") || !j.contains("parity")) {
    return std::nullopt;
  }
  try {
    return std::pair{j["k"].get<int>(), parse_parity(j["parity"].get<std::string>())};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::vector<std::pair<std::pair<int, Parity>, std::string>> read_fact_records(
    const std::string& path) {
  std::vector<std::pair<std::pair<int, Parity>, std::string>> out;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (auto key = fact_record_key(line)) out.emplace_back(*key, line);
  }
  return out;
}

}  // namespace hookcert
