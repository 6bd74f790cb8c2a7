#include "hookcert/orchestrator.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include <nlohmann/json.hpp>

#include "hookcert/lemmas.hpp"
#include "hookcert/report.hpp"

namespace hookcert {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

std::atomic<bool> g_stop{false};

constexpr std::size_t kFullRangeGapExceptions = 51;

// Records go to a temporary file that replaces the report only once the run
// ends (or is cut short), or straight to the output stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& out) : path_(path), out_(&out) {
    if (!path_.empty()) {
      temp_ = path_ + ".partial";
      file_.open(temp_, std::ios::trunc);
      if (!file_) throw ConfigError("cannot open report file " + temp_);
      out_ = &file_;
    }
  }

  void line(const std::string& text) {
    *out_ << text << '\n';
    out_->flush();
  }

  void commit() {
    if (path_.empty()) return;
    file_.close();
    std::filesystem::rename(temp_, path_);
  }

 private:
  std::string path_;
  std::string temp_;
  std::ofstream file_;
  std::ostream* out_;
};

std::string_view to_string(ParityChoice parity) {
  switch (parity) {
    case ParityChoice::odd: return "odd";
    case ParityChoice::even: return "even";
    case ParityChoice::both: return "both";
  }
  return "both";
}

std::string_view to_string(LemmaChoice lemmas) {
  switch (lemmas) {
    case LemmaChoice::two_primes: return "two-primes";
    case LemmaChoice::large_factor: return "large-factor";
    case LemmaChoice::all: return "all";
  }
  return "all";
}

std::int64_t isqrt(std::int64_t m) {
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= m) ++r;
  return r;
}

json meta_json(const RunConfig& c) {
  json meta{{"tool", "hookcert"},
            {"version", "1.0.0"},
            {"command", to_string(c.command)},
            {"sieve_bound", c.sieve_bound}};
  switch (c.command) {
    case Command::verify_fact:
    case Command::naive:
      meta["k_min"] = c.k_min;
      meta["k_max"] = c.k_max;
      meta["parity"] = to_string(c.parity);
      meta["cross_check"] = c.cross_check;
      break;
    case Command::verify_lemmas:
      meta["which"] = to_string(c.lemmas);
      [[fallthrough]];
    case Command::scan_gaps:
      meta["from"] = c.scan_from;
      meta["to"] = c.scan_to;
      break;
    case Command::dims:
    case Command::witness:
      meta["n"] = c.n;
      break;
  }
  return json{{"meta", meta}};
}

std::vector<std::pair<int, Parity>> fact_items(const RunConfig& c) {
  std::vector<std::pair<int, Parity>> items;
  for (const Parity parity : {Parity::odd, Parity::even}) {
    if (c.parity == ParityChoice::odd && parity != Parity::odd) continue;
    if (c.parity == ParityChoice::even && parity != Parity::even) continue;
    for (int k = c.k_min; k <= c.k_max; ++k) items.emplace_back(k, parity);
  }
  return items;
}

// Sort order of report records: parity first (odd before even), then k.
bool record_less(const std::pair<int, Parity>& a, const std::pair<int, Parity>& b) {
  return std::pair{a.second, a.first} < std::pair{b.second, b.first};
}

// `inner` threads go to a single item when there is nothing else to share.
ClaimOutcome evaluate(const RunConfig& c, int k, Parity parity, const PrimeTables& tables,
                      int inner) {
  if (c.command == Command::naive) {
    return naive_verify(k, parity, tables, inner, c.allow_large);
  }
  if (c.cross_check && k >= kPrunedMinK && k <= kNaiveMaxK) {
    return cross_check(k, parity, tables, inner);
  }
  return verify_fact(k, parity, tables, inner);
}

bool line_verified(const std::string& line) {
  const json j = json::parse(line, nullptr, false);
  return !j.is_discarded() && j.value("status", "") == "verified";
}

int run_facts(const RunConfig& c, const PrimeTables& tables, Sink& sink, std::ostream& log) {
  struct Slot {
    std::pair<int, Parity> key;
    bool ready = false;
    bool pending = false;
    std::string line;
    bool verified = false;
  };
  std::vector<Slot> slots;
  const auto items = fact_items(c);
  if (c.resume) {
    for (auto& [key, line] : read_fact_records(c.report_path)) {
      const bool wanted = std::find(items.begin(), items.end(), key) != items.end();
      const bool seen = std::any_of(slots.begin(), slots.end(),
                                    [&](const Slot& s) { return s.key == key; });
      if (!wanted || seen) continue;
      const bool verified = line_verified(line);
      slots.push_back({key, true, false, std::move(line), verified});
    }
  }
  for (const auto& key : items) {
    const bool done = std::any_of(slots.begin(), slots.end(),
                                  [&](const Slot& s) { return s.key == key; });
    if (!done) slots.push_back({key, false, true, {}, false});
  }
  std::stable_sort(slots.begin(), slots.end(),
                   [](const Slot& a, const Slot& b) { return record_less(a.key, b.key); });
  if (c.resume) {
    const auto skipped = std::count_if(slots.begin(), slots.end(), [](const Slot& s) { return s.ready; });
    log << "resume: " << skipped << " record(s) kept from " << c.report_path << '\n';
  }

  if (c.format == ReportFormat::csv) sink.line(csv_header());
  else sink.line(meta_json(c).dump());

  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].pending) todo.push_back(i);
  }
  std::mutex mutex;
  std::condition_variable changed;
  std::atomic<std::size_t> next{0};
  std::size_t running = 0;
  std::string failure;

  auto worker = [&] {
    for (;;) {
      if (g_stop.load()) break;
      const std::size_t t = next++;
      if (t >= todo.size()) break;
      Slot& slot = slots[todo[t]];
      std::string line;
      bool verified = false;
      try {
        const ClaimOutcome outcome =
            evaluate(c, slot.key.first, slot.key.second, tables, todo.size() == 1 ? c.workers : 1);
        line = c.format == ReportFormat::csv ? to_csv_row(outcome, c.timing)
                                             : to_json_line(outcome, c.timing);
        verified = outcome.status == Status::verified;
      } catch (const std::exception& e) {
        std::lock_guard lock(mutex);
        failure = e.what();
        g_stop = true;
      }
      std::lock_guard lock(mutex);
      slot.line = std::move(line);
      slot.verified = verified;
      slot.ready = failure.empty();
      changed.notify_all();
    }
    std::lock_guard lock(mutex);
    --running;
    changed.notify_all();
  };

  const int workers = std::max(1, std::min<int>(c.workers, static_cast<int>(todo.size())));
  std::vector<std::thread> threads;
  running = static_cast<std::size_t>(workers);
  for (int w = 0; w < workers; ++w) threads.emplace_back(worker);

  std::size_t written = 0;
  bool all_verified = true;
  {
    std::unique_lock lock(mutex);
    for (;;) {
      while (written < slots.size() && slots[written].ready) {
        if (c.format == ReportFormat::json_lines || slots[written].pending) {
          sink.line(slots[written].line);
        }
        all_verified = all_verified && slots[written].verified;
        ++written;
      }
      if (written == slots.size() || running == 0) break;
      changed.wait(lock);
    }
  }
  for (auto& t : threads) t.join();

  if (!failure.empty()) {
    log << "error: " << failure << '\n';
    if (c.format == ReportFormat::json_lines) sink.line(truncation_line(written, slots.size()));
    sink.commit();
    return kExitConfigError;
  }
  if (written < slots.size()) {
    if (c.format == ReportFormat::json_lines) sink.line(truncation_line(written, slots.size()));
    sink.commit();
    log << "interrupted after " << written << " of " << slots.size() << " record(s)\n";
    return kExitFailed;
  }
  sink.commit();
  return all_verified ? kExitVerified : kExitFailed;
}

int run_lemmas(const RunConfig& c, const PrimeTables& tables, Sink& sink, std::ostream& log) {
  sink.line(meta_json(c).dump());
  bool ok = true;
  const bool full = c.scan_from == kLemmaScanMin && c.scan_to == kLemmaScanMax;
  if (c.lemmas != LemmaChoice::large_factor) {
    const auto start = Clock::now();
    const auto failures = scan_two_primes(c.scan_from, c.scan_to, tables, c.workers);
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    ok = ok && failures.empty();
    sink.line(json{{"claim", "two-primes"},
                   {"from", c.scan_from},
                   {"to", c.scan_to},
                   {"checked", c.scan_to - c.scan_from + 1},
                   {"failures", failures},
                   {"status", failures.empty() ? "verified" : "counterexample"},
                   {"millis", c.timing ? std::llround(ms) : 0}}
                  .dump());
  }
  if (c.lemmas != LemmaChoice::two_primes) {
    const auto start = Clock::now();
    const auto gaps = scan_prime_gaps(c.scan_from, c.scan_to, tables, c.workers);
    std::vector<std::int64_t> exceptional;
    std::vector<json> failures;
    for (const auto& gap : gaps) {
      exceptional.push_back(gap.k);
      if (const auto h = first_large_factor_failure(gap.k, tables)) {
        failures.push_back({{"k", gap.k}, {"h", *h}});
      }
    }
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    json record{{"claim", "large-factor"},
                {"from", c.scan_from},
                {"to", c.scan_to},
                {"exceptions", gaps.size()},
                {"exceptional_k", exceptional},
                {"failures", failures},
                {"millis", c.timing ? std::llround(ms) : 0}};
    bool lemma_ok = failures.empty();
    if (full) {
      record["expected_exceptions"] = kFullRangeGapExceptions;
      if (gaps.size() != kFullRangeGapExceptions) {
        lemma_ok = false;
        log << "finding: " << gaps.size() << " exceptional k, expected "
            << kFullRangeGapExceptions << '\n';
      }
    }
    record["status"] = lemma_ok ? "verified" : "counterexample";
    ok = ok && lemma_ok;
    sink.line(record.dump());
  }
  sink.commit();
  return ok ? kExitVerified : kExitFailed;
}

int run_gaps(const RunConfig& c, const PrimeTables& tables, Sink& sink, std::ostream& log) {
  const auto gaps = scan_prime_gaps(c.scan_from, c.scan_to, tables, c.workers);
  if (c.format == ReportFormat::csv) {
    sink.line(gap_csv_header());
    for (const auto& g : gaps) sink.line(to_csv_row(g));
  } else {
    sink.line(meta_json(c).dump());
    for (const auto& g : gaps) sink.line(to_json_line(g));
    sink.line(json{{"claim", "scan-gaps"},
                   {"from", c.scan_from},
                   {"to", c.scan_to},
                   {"exceptions", gaps.size()}}
                  .dump());
  }
  sink.commit();
  log << gaps.size() << " exceptional k in [" << c.scan_from << ", " << c.scan_to << "]\n";
  const bool full = c.scan_from == kLemmaScanMin && c.scan_to == kLemmaScanMax;
  return full && gaps.size() != kFullRangeGapExceptions ? kExitFailed : kExitVerified;
}

std::vector<std::string> decimal(const std::set<BigInt>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

int run_dims(const RunConfig& c, const PrimeTables& tables, Sink& sink) {
  const DimensionSets sets = dimension_sets(c.n, tables);
  const bool differ = sets.symmetric != sets.alternating;
  if (c.format == ReportFormat::csv) {
    sink.line("group,dimension");
    for (const auto& v : sets.symmetric) sink.line("S," + v.str());
    for (const auto& v : sets.alternating) sink.line("A," + v.str());
  } else {
    sink.line(meta_json(c).dump());
    sink.line(json{{"claim", "dims"},
                   {"n", c.n},
                   {"symmetric", decimal(sets.symmetric)},
                   {"alternating", decimal(sets.alternating)},
                   {"differ", differ}}
                  .dump());
  }
  sink.commit();
  return differ ? kExitVerified : kExitFailed;
}

int run_witness(const RunConfig& c, const PrimeTables& tables, Sink& sink) {
  const WitnessRecord w = witness(c.n, tables);
  json record{{"claim", "witness"},
              {"n", c.n},
              {"partition", w.partition ? json(w.partition->to_string()) : json(nullptr)},
              {"dim_S", w.dim_symmetric},
              {"dim_A", w.dim_alternating},
              {"multiplicity_A", w.alternating_multiplicity},
              {"status", w.status}};
  sink.line(meta_json(c).dump());
  sink.line(record.dump());
  sink.commit();
  return w.status == "certified" ? kExitVerified : kExitFailed;
}

}  // namespace

std::string_view to_string(Command command) {
  switch (command) {
    case Command::verify_fact: return "verify-fact";
    case Command::naive: return "naive";
    case Command::verify_lemmas: return "verify-lemmas";
    case Command::scan_gaps: return "scan-gaps";
    case Command::dims: return "dims";
    case Command::witness: return "witness";
  }
  return "unknown";
}

void request_stop() noexcept { g_stop.store(true); }
void clear_stop() noexcept { g_stop.store(false); }

std::int64_t required_sieve_bound(const RunConfig& c) {
  constexpr std::int64_t kFloor = 1000;
  switch (c.command) {
    case Command::verify_fact:
    case Command::naive:
      return std::max<std::int64_t>(kFloor, 4 * (2 * std::int64_t{c.k_max} + 2));
    case Command::verify_lemmas:
      if (c.lemmas == LemmaChoice::two_primes) return std::max(kFloor, c.scan_to);
      return std::max(kFloor, c.scan_to + 3 * c.scan_to / 20 + 1);
    case Command::scan_gaps:
      return std::max(kFloor, c.scan_to + 2 * isqrt(c.scan_to) + 100);
    case Command::dims:
      return kFloor;
    case Command::witness:
      return std::max<std::int64_t>(kFloor, 4 * (std::int64_t{c.n} + 2));
  }
  return kFloor;
}

RunConfig validated(const RunConfig& config) {
  RunConfig c = config;
  if (c.workers < 1) throw ConfigError("workers must be >= 1");
  switch (c.command) {
    case Command::verify_fact:
    case Command::naive:
      if (c.k_min > c.k_max) throw ConfigError("k-min exceeds k-max");
      if (c.k_min < 2) throw ConfigError("k must be >= 2");
      if (c.command == Command::verify_fact && c.k_max > kMaxVerifiedK) {
        throw ConfigError("verify-fact covers k <= " + std::to_string(kMaxVerifiedK));
      }
      if (c.command == Command::naive && c.k_max > kNaiveMaxK && !c.allow_large) {
        throw ConfigError("naive search is limited to k <= " + std::to_string(kNaiveMaxK) +
                          " without --allow-large");
      }
      if (c.resume && c.format != ReportFormat::json_lines) {
        throw ConfigError("--resume needs the json-lines format");
      }
      if (c.resume && c.report_path.empty()) throw ConfigError("--resume needs --report");
      break;
    case Command::verify_lemmas:
    case Command::scan_gaps:
      if (c.scan_from > c.scan_to) throw ConfigError("scan range is empty");
      if (c.scan_from < kLemmaScanMin || c.scan_to > kLemmaScanMax) {
        throw ConfigError("scan range must lie within [" + std::to_string(kLemmaScanMin) + ", " +
                          std::to_string(kLemmaScanMax) + "]");
      }
      break;
    case Command::dims:
      if (c.n < 3 || c.n > kDimensionSetMaxN) {
        throw ConfigError("dims needs 3 <= n <= " + std::to_string(kDimensionSetMaxN));
      }
      break;
    case Command::witness:
      if (c.n < 3) throw ConfigError("witness needs n >= 3");
      break;
  }
  const std::int64_t required = required_sieve_bound(c);
  if (c.sieve_bound == 0) {
    if (const char* env = std::getenv(kSieveBoundEnv); env != nullptr && *env != '\0') {
      char* end = nullptr;
      const long long value = std::strtoll(env, &end, 10);
      if (end == env || *end != '\0' || value < 2) {
        throw ConfigError(std::string(kSieveBoundEnv) + " is not a valid bound: " + env);
      }
      c.sieve_bound = value;
    } else {
      c.sieve_bound = required;
    }
  }
  if (c.sieve_bound < required) {
    throw ResourceError("sieve bound " + std::to_string(c.sieve_bound) +
                            " is too small; this run needs at least " + std::to_string(required),
                        required);
  }
  return c;
}

WitnessRecord witness(int n, const PrimeTables& tables) {
  if (n < 3) throw std::invalid_argument("witness needs n >= 3");
  WitnessRecord w;
  w.n = n;
  if (n <= 4) {
    const DimensionSets sets = dimension_sets(n, tables);
    for (const auto& v : sets.symmetric) {
      if (!sets.alternating.count(v) && w.dim_symmetric.empty()) w.dim_symmetric = v.str();
    }
    for (const auto& v : sets.alternating) {
      if (!sets.symmetric.count(v) && w.dim_alternating.empty()) w.dim_alternating = v.str();
    }
    w.status = sets.symmetric != sets.alternating ? "certified" : "inconclusive";
    return w;
  }
  const Parity parity = n % 2 == 1 ? Parity::odd : Parity::even;
  const int k = parity == Parity::odd ? (n - 1) / 2 : (n - 2) / 2;
  const Partition lambda = witness_partition(k, parity);
  w.partition = lambda;
  w.dim_symmetric = dimension(lambda, Group::symmetric, tables).value.decimal();
  const Dimension alt = dimension(lambda, Group::alternating, tables);
  w.dim_alternating = alt.value.decimal();
  w.alternating_multiplicity = alt.multiplicity;
  if (k > kMaxVerifiedK) {
    w.status = "outside verified range";
    return w;
  }
  const ClaimOutcome fact = verify_fact(k, parity, tables);
  w.status = fact.status == Status::verified ? "certified" : std::string(to_string(fact.status));
  return w;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& log) {
  RunConfig c;
  try {
    c = validated(config);
  } catch (const ResourceError& e) {
    log << "resource error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    log << "configuration error: " << e.what() << '\n';
    return kExitConfigError;
  }
  try {
    const PrimeTables tables(c.sieve_bound);
    Sink sink(c.report_path, out);
    switch (c.command) {
      case Command::verify_fact:
      case Command::naive:
        return run_facts(c, tables, sink, log);
      case Command::verify_lemmas:
        return run_lemmas(c, tables, sink, log);
      case Command::scan_gaps:
        return run_gaps(c, tables, sink, log);
      case Command::dims:
        return run_dims(c, tables, sink);
      case Command::witness:
        return run_witness(c, tables, sink);
    }
  } catch (const ResourceError& e) {
    log << "resource error: " << e.what() << " (required bound " << e.required() << ")\n";
    return kExitConfigError;
  } catch (const std::bad_alloc&) {
    log << "resource error: out of memory for sieve bound " << c.sieve_bound << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitConfigError;
  }
  return kExitConfigError;
}

}  // namespace hookcert
