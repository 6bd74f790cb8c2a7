#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hookcert/factored.hpp"
#include "hookcert/partition.hpp"
#include "hookcert/primes.hpp"
#include "hookcert/target_matcher.hpp"

namespace hookcert {

enum class ClaimId : std::uint8_t {
  preliminary,
  no_double_hook,
  rows,
  row_column,
  naive,
  corner_hook,
  fact,
};

std::string_view to_string(ClaimId claim);

enum class Status : std::uint8_t { verified, counterexample, inconclusive };

std::string_view to_string(Status status);

struct TargetMatch {
  Partition partition;
  TargetKind kind = TargetKind::none;
  friend bool operator==(const TargetMatch&, const TargetMatch&) = default;
  friend auto operator<=>(const TargetMatch& a, const TargetMatch& b) {
    return a.partition <=> b.partition;
  }
};

/// Verdict of one claim (or of a whole fact, with the claims nested in
/// `parts`). Counterexamples are the matches other than the witness with the
/// unit target.
struct ClaimOutcome {
  ClaimId claim = ClaimId::fact;
  int k = 0;
  Parity parity = Parity::odd;
  Status status = Status::verified;
  std::string method;
  std::vector<TargetMatch> matches;  ///< sorted, no duplicates
  std::vector<Partition> counterexamples;
  std::uint64_t tuples = 0;
  std::uint64_t partitions = 0;
  std::string prime_sub;  ///< prime pairs actually searched, e.g. "(31,29)"
  std::vector<std::string> notes;
  double millis = 0;
  std::vector<ClaimOutcome> parts;
};

struct PreliminaryReport {
  AuxiliaryPrimes primes;
  std::array<bool, 6> holds{};
  bool required_hold() const { return holds[0] && holds[1]; }
};

/// Largest k any pruned or fact-level verifier accepts.
inline constexpr int kMaxVerifiedK = 337;
/// Largest k the naive path accepts without an override.
inline constexpr int kNaiveMaxK = 40;

/// The six inequalities for 35 <= k <= 337.
PreliminaryReport check_preliminary(int k, Parity parity, const PrimeTables& tables);

/// No box of hook 2p or 2q: the off-corner case by a prime not dividing the
/// targets, the corner case by enumeration.
ClaimOutcome verify_no_double_hook(int k, Parity parity, const PrimeTables& tables);

/// No target match with hooks p and q both in rows 1 and 2.
ClaimOutcome verify_rows_case(int k, Parity parity, const PrimeTables& tables);

/// The only target match with hooks p and q in both row 1 and column 1 is the
/// witness.
ClaimOutcome verify_rowcol_case(int k, Parity parity, const PrimeTables& tables);

/// Exhaustive search over all partitions of the weight. `workers` threads
/// split the work by first part.
ClaimOutcome naive_verify(int k, Parity parity, const PrimeTables& tables, int workers = 1,
                          bool allow_large = false);

/// Search restricted to a corner hook of n-1, valid when n-1 is a prime
/// dividing the unit target.
ClaimOutcome corner_hook_verify(int k, Parity parity, const PrimeTables& tables);

/// How verify_fact settles a given k.
enum class FactMethod : std::uint8_t { naive, corner_hook, pruned };

std::string_view to_string(FactMethod method);

FactMethod fact_method(int k, Parity parity);

/// Certifies that the witness is the only partition of the weight with a
/// target hook product, dispatching on k.
ClaimOutcome verify_fact(int k, Parity parity, const PrimeTables& tables, int workers = 1);

/// Runs both the pruned pipeline and the naive search and compares their
/// match sets up to conjugation; verified iff both verify and the sets
/// coincide. Where the preliminary inequalities fail the pruned search has
/// nothing to say and the naive verdict is reported with a note.
ClaimOutcome cross_check(int k, Parity parity, const PrimeTables& tables, int workers = 1);

struct DimensionSets {
  std::set<BigInt> symmetric;
  std::set<BigInt> alternating;
};

/// Largest n accepted by dimension_sets.
inline constexpr int kDimensionSetMaxN = 45;

DimensionSets dimension_sets(int n, const PrimeTables& tables);

}  // namespace hookcert
