#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hookcert/claims.hpp"
#include "hookcert/lemmas.hpp"
#include "hookcert/primes.hpp"

namespace hookcert {

enum class Command : std::uint8_t { verify_fact, naive, verify_lemmas, scan_gaps, dims, witness };
enum class ReportFormat : std::uint8_t { json_lines, csv };
enum class ParityChoice : std::uint8_t { odd, even, both };
enum class LemmaChoice : std::uint8_t { two_primes, large_factor, all };

std::string_view to_string(Command command);

/// Process exit codes.
inline constexpr int kExitVerified = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitConfigError = 2;

/// Environment variable overriding the default sieve bound.
inline constexpr const char* kSieveBoundEnv = "HOOKCERT_SIEVE_BOUND";

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  Command command = Command::verify_fact;
  int k_min = 2;
  int k_max = kMaxVerifiedK;
  ParityChoice parity = ParityChoice::both;
  int workers = 1;
  std::string report_path;  ///< empty: write to the output stream
  ReportFormat format = ReportFormat::json_lines;
  bool cross_check = false;
  bool resume = false;
  bool timing = true;
  bool allow_large = false;  ///< lift the naive k guard
  std::int64_t sieve_bound = 0;  ///< 0: derived from the command, or the environment
  LemmaChoice lemmas = LemmaChoice::all;
  std::int64_t scan_from = kLemmaScanMin;
  std::int64_t scan_to = kLemmaScanMax;
  int n = 0;  ///< dims and witness
};

/// Sieve bound the command needs.
std::int64_t required_sieve_bound(const RunConfig& config);

/// Throws ConfigError for inconsistent settings; resolves the sieve bound
/// (explicit, then environment, then required) into the returned copy.
RunConfig validated(const RunConfig& config);

/// Executes the command, writing records to `out` or to the report file.
/// Returns an exit code. Configuration and resource problems are reported
/// on `log` and yield kExitConfigError.
int run(const RunConfig& config, std::ostream& out, std::ostream& log);

/// Asks a running `run` to stop after the items in flight; the report is then
/// closed with a truncation marker. Safe to call from a signal handler.
void request_stop() noexcept;
void clear_stop() noexcept;

struct WitnessRecord {
  int n = 0;
  std::optional<Partition> partition;  ///< absent for n = 3 and 4
  std::string dim_symmetric;
  std::string dim_alternating;
  int alternating_multiplicity = 1;
  std::string status;  ///< "certified", "counterexample", "inconclusive", "outside verified range"
};

/// The witness for weight n with its dimensions and certification. For n = 3
/// and 4 the dimension sets are compared directly.
WitnessRecord witness(int n, const PrimeTables& tables);

}  // namespace hookcert
