#include "hookcert/claims.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "hookcert/configurations.hpp"
#include "hookcert/enumerate.hpp"

namespace hookcert {

std::string_view to_string(ClaimId claim) {
  switch (claim) {
    case ClaimId::preliminary: return "preliminary";
    case ClaimId::no_double_hook: return "no-double-hook";
    case ClaimId::rows: return "rows";
    case ClaimId::row_column: return "row-column";
    case ClaimId::naive: return "naive";
    case ClaimId::corner_hook: return "corner-hook";
    case ClaimId::fact: return "fact";
  }
  return "unknown";
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::verified: return "verified";
    case Status::counterexample: return "counterexample";
    case Status::inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string_view to_string(FactMethod method) {
  switch (method) {
    case FactMethod::naive: return "naive";
    case FactMethod::corner_hook: return "corner-hook";
    case FactMethod::pruned: return "pruned";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string pair_text(int larger, int smaller) {
  return "(" + std::to_string(larger) + "," + std::to_string(smaller) + ")";
}

// Everything a search for one (k, parity) needs.
struct Problem {
  Problem(int k_, Parity parity_, const PrimeTables& tables)
      : k(k_),
        parity(parity_),
        n(witness_weight(k_, parity_)),
        witness(witness_partition(k_, parity_)),
        goal(targets(k_, parity_, tables)),
        matcher(goal, n, tables) {}

  ClaimOutcome outcome(ClaimId claim) const {
    ClaimOutcome out;
    out.claim = claim;
    out.k = k;
    out.parity = parity;
    return out;
  }

  int k;
  Parity parity;
  int n;
  Partition witness;
  TargetSet goal;
  TargetMatcher matcher;
};

class Collector {
 public:
  explicit Collector(const TargetMatcher& matcher) : matcher_(matcher) {}

  void operator()(std::span<const int> rows) {
    const TargetKind kind = matcher_.match(rows, cols_);
    if (kind != TargetKind::none) {
      found_.push_back({Partition::trusted({rows.begin(), rows.end()}), kind});
    }
  }

  std::vector<TargetMatch>& found() { return found_; }

 private:
  const TargetMatcher& matcher_;
  std::vector<int> cols_;
  std::vector<TargetMatch> found_;
};

void add_matches(ClaimOutcome& out, const std::vector<TargetMatch>& found) {
  out.matches.insert(out.matches.end(), found.begin(), found.end());
}

// Sorts matches, derives counterexamples and the status from them.
void settle(ClaimOutcome& out, const Partition& witness) {
  std::sort(out.matches.begin(), out.matches.end());
  out.matches.erase(std::unique(out.matches.begin(), out.matches.end()), out.matches.end());
  out.counterexamples.clear();
  for (const auto& m : out.matches) {
    if (!(m.partition == witness && m.kind == TargetKind::unit)) {
      out.counterexamples.push_back(m.partition);
    }
  }
  if (!out.counterexamples.empty()) out.status = Status::counterexample;
}

void run_engine(ClaimOutcome& out, const Problem& problem, const auto& engine) {
  Collector collect(problem.matcher);
  const SearchTally tally = engine(PartitionVisitor(std::ref(collect)));
  out.tuples += tally.tuples;
  out.partitions += tally.partitions;
  add_matches(out, collect.found());
}

// Largest odd prime <= bound absent from the unit target. Half and double
// targets differ from the unit only in the prime 2.
std::optional<int> absent_prime(int bound, const TargetSet& goal, const PrimeTables& tables) {
  for (int l = bound; l >= 3; --l) {
    if (tables.is_prime(l) && goal.unit.exponent(l) == 0) return l;
  }
  return std::nullopt;
}

std::pair<int, int> searched_pair(const AuxiliaryPrimes& aux) {
  if (!aux.r_usable) return {aux.p, aux.q};
  const int twice_r = 2 * aux.r;
  if (aux.p > twice_r && twice_r > aux.q) return {aux.p, twice_r};
  if (twice_r > aux.p) return {twice_r, aux.q};
  return {aux.p, aux.q};
}

void require_pruned_range(int k) {
  if (k < kPrunedMinK || k > kMaxVerifiedK) {
    throw std::out_of_range("pruned search needs " + std::to_string(kPrunedMinK) + " <= k <= " +
                            std::to_string(kMaxVerifiedK) + ", got " + std::to_string(k));
  }
}

ClaimOutcome preliminary_outcome(const Problem& problem, const PreliminaryReport& pre) {
  ClaimOutcome out = problem.outcome(ClaimId::preliminary);
  const auto& a = pre.primes;
  out.prime_sub = "p=" + std::to_string(a.p) + ",q=" + std::to_string(a.q) +
                  ",r=" + std::to_string(a.r);
  std::string mask;
  for (const bool ok : pre.holds) mask += ok ? '1' : '0';
  out.notes.push_back("inequalities=" + mask);
  out.notes.push_back(std::string("r_usable=") + (a.r_usable ? "true" : "false"));
  if (!pre.required_hold()) {
    out.status = Status::inconclusive;
    out.notes.push_back("required inequalities fail; pruned search does not apply");
  }
  return out;
}

// Conjugation closure, for comparing searches that use different
// conjugation conventions.
std::set<Partition> closure(const std::vector<TargetMatch>& matches) {
  std::set<Partition> out;
  for (const auto& m : matches) {
    out.insert(m.partition);
    out.insert(conjugate(m.partition));
  }
  return out;
}

ClaimOutcome pruned_verify(const Problem& problem, const PrimeTables& tables) {
  const auto start = Clock::now();
  ClaimOutcome fact = problem.outcome(ClaimId::fact);
  fact.method = std::string(to_string(FactMethod::pruned));
  const PreliminaryReport pre = check_preliminary(problem.k, problem.parity, tables);
  fact.parts.push_back(preliminary_outcome(problem, pre));
  if (pre.required_hold()) {
    fact.parts.push_back(verify_no_double_hook(problem.k, problem.parity, tables));
    fact.parts.push_back(verify_rows_case(problem.k, problem.parity, tables));
    fact.parts.push_back(verify_rowcol_case(problem.k, problem.parity, tables));
  }
  std::vector<std::string> subs;
  bool inconclusive = false;
  for (const auto& part : fact.parts) {
    fact.tuples += part.tuples;
    fact.partitions += part.partitions;
    add_matches(fact, part.matches);
    if (part.status == Status::inconclusive) inconclusive = true;
    if (part.claim == ClaimId::rows || part.claim == ClaimId::row_column) {
      subs.push_back(std::string(to_string(part.claim)) + ":" + part.prime_sub);
    }
  }
  for (std::size_t i = 0; i < subs.size(); ++i) fact.prime_sub += (i ? ";" : "") + subs[i];
  settle(fact, problem.witness);
  if (fact.status == Status::verified) {
    const bool witness_seen =
        std::any_of(fact.matches.begin(), fact.matches.end(), [&](const TargetMatch& m) {
          return m.partition == problem.witness && m.kind == TargetKind::unit;
        });
    if (inconclusive) {
      fact.status = Status::inconclusive;
    } else if (!witness_seen) {
      fact.status = Status::inconclusive;
      fact.notes.push_back("witness not reached by the row-column search");
    }
  }
  fact.millis = millis_since(start);
  return fact;
}

}  // namespace

PreliminaryReport check_preliminary(int k, Parity parity, const PrimeTables& tables) {
  require_pruned_range(k);
  PreliminaryReport report;
  report.primes = auxiliary_primes(k, parity, tables);
  report.holds = preliminary_inequalities(witness_weight(k, parity), report.primes.p,
                                          report.primes.q, report.primes.r);
  return report;
}

ClaimOutcome verify_no_double_hook(int k, Parity parity, const PrimeTables& tables) {
  const auto start = Clock::now();
  const PreliminaryReport pre = check_preliminary(k, parity, tables);
  const Problem problem(k, parity, tables);
  ClaimOutcome out = problem.outcome(ClaimId::no_double_hook);
  const auto& aux = pre.primes;
  const int n = problem.n;

  // Off the corner, a box of hook >= 2q forces (4q - n)! into the hook product.
  const auto prime = absent_prime(4 * aux.q - n, problem.goal, tables);
  if (prime) {
    out.notes.push_back("off-corner excluded by prime " + std::to_string(*prime));
  } else {
    out.status = Status::inconclusive;
    out.notes.push_back("no prime <= 4q-n is absent from the targets");
  }

  const int side_p = aux.r_usable ? 2 * aux.r : aux.q;
  const int side_q = aux.r_usable ? 2 * aux.r : aux.p;
  run_engine(out, problem, [&](const PartitionVisitor& visit) {
    return enumerate_corner_pair(n, 2 * aux.p, side_p, visit);
  });
  run_engine(out, problem, [&](const PartitionVisitor& visit) {
    return enumerate_corner_pair(n, 2 * aux.q, side_q, visit);
  });
  out.prime_sub = pair_text(2 * aux.p, side_p) + "," + pair_text(2 * aux.q, side_q);
  const Status before = out.status;
  settle(out, problem.witness);
  if (out.status == Status::verified) out.status = before;
  out.millis = millis_since(start);
  return out;
}

ClaimOutcome verify_rows_case(int k, Parity parity, const PrimeTables& tables) {
  const auto start = Clock::now();
  const PreliminaryReport pre = check_preliminary(k, parity, tables);
  const Problem problem(k, parity, tables);
  ClaimOutcome out = problem.outcome(ClaimId::rows);
  const auto [larger, smaller] = searched_pair(pre.primes);
  run_engine(out, problem, [&](const PartitionVisitor& visit) {
    return enumerate_two_rows(problem.n, larger, smaller, visit);
  });
  out.prime_sub = pair_text(larger, smaller);
  settle(out, problem.witness);
  out.millis = millis_since(start);
  return out;
}

ClaimOutcome verify_rowcol_case(int k, Parity parity, const PrimeTables& tables) {
  const auto start = Clock::now();
  const PreliminaryReport pre = check_preliminary(k, parity, tables);
  const Problem problem(k, parity, tables);
  ClaimOutcome out = problem.outcome(ClaimId::row_column);
  const auto& aux = pre.primes;
  const auto [larger, smaller] = searched_pair(aux);
  run_engine(out, problem, [&](const PartitionVisitor& visit) {
    return enumerate_row_column(problem.n, larger, smaller, {}, visit);
  });
  out.prime_sub = pair_text(larger, smaller);
  if (larger != aux.p || smaller != aux.q) {
    // The substitution assumes the corner hook is not a multiple of r; those
    // corners are searched with the original pair.
    std::vector<int> corners;
    for (int m = 1; m <= 4 && m * aux.r <= problem.n; ++m) corners.push_back(m * aux.r);
    run_engine(out, problem, [&](const PartitionVisitor& visit) {
      return enumerate_row_column(problem.n, aux.p, aux.q, corners, visit);
    });
    out.prime_sub += "," + pair_text(aux.p, aux.q) + "@corner";
    for (std::size_t i = 0; i < corners.size(); ++i) {
      out.prime_sub += (i ? "|" : "=") + std::to_string(corners[i]);
    }
  }
  settle(out, problem.witness);
  out.millis = millis_since(start);
  return out;
}

ClaimOutcome naive_verify(int k, Parity parity, const PrimeTables& tables, int workers,
                          bool allow_large) {
  if (k < 2) throw std::out_of_range("naive search needs k >= 2");
  if (k > kNaiveMaxK && !allow_large) {
    throw std::out_of_range("naive search is limited to k <= " + std::to_string(kNaiveMaxK));
  }
  const auto start = Clock::now();
  const Problem problem(k, parity, tables);
  ClaimOutcome out = problem.outcome(ClaimId::naive);
  out.method = std::string(to_string(FactMethod::naive));
  const int n = problem.n;
  workers = std::max(1, workers);

  if (workers == 1) {
    Collector collect(problem.matcher);
    AllPartitions all(n, true);
    while (all.next()) {
      ++out.partitions;
      collect(all.current());
    }
    add_matches(out, collect.found());
  } else {
    std::atomic<int> next_first{n};
    std::vector<std::vector<TargetMatch>> found(static_cast<std::size_t>(workers));
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(workers), 0);
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        Collector collect(problem.matcher);
        for (int v = next_first--; v >= 1; v = next_first--) {
          const std::vector<int> lower{v};
          const std::vector<int> upper(static_cast<std::size_t>(n - v + 1), v);
          PartitionsBetween stream(n, lower, upper);
          while (stream.next()) {
            ++counts[w];
            collect(stream.current());
          }
        }
        found[w] = std::move(collect.found());
      });
    }
    for (auto& t : threads) t.join();
    for (int w = 0; w < workers; ++w) {
      out.partitions += counts[w];
      add_matches(out, found[w]);
    }
  }
  settle(out, problem.witness);
  out.millis = millis_since(start);
  return out;
}

ClaimOutcome corner_hook_verify(int k, Parity parity, const PrimeTables& tables) {
  const auto start = Clock::now();
  const Problem problem(k, parity, tables);
  ClaimOutcome out = problem.outcome(ClaimId::corner_hook);
  out.method = std::string(to_string(FactMethod::corner_hook));
  const int n = problem.n;
  const int h = n - 1;
  if (!tables.is_prime(h) || problem.goal.unit.exponent(h) == 0) {
    out.status = Status::inconclusive;
    out.notes.push_back("n-1 is not a prime dividing the target");
    out.millis = millis_since(start);
    return out;
  }
  // Off the corner, a box of hook n-1 forces (n-2)! into the hook product.
  const auto prime = absent_prime(n - 2, problem.goal, tables);
  if (!prime) {
    out.status = Status::inconclusive;
    out.notes.push_back("no prime <= n-2 is absent from the targets");
  } else {
    out.notes.push_back("off-corner excluded by prime " + std::to_string(*prime));
  }
  Collector collect(problem.matcher);
  PartitionsWithCornerHook stream(n, h);
  while (stream.next()) {
    ++out.partitions;
    collect(stream.current());
  }
  add_matches(out, collect.found());
  out.prime_sub = "corner=" + std::to_string(h);
  const Status before = out.status;
  settle(out, problem.witness);
  if (out.status == Status::verified) out.status = before;
  out.millis = millis_since(start);
  return out;
}

FactMethod fact_method(int k, Parity parity) {
  if (k < kPrunedMinK) return FactMethod::naive;
  if (parity == Parity::even && k == 37) return FactMethod::naive;
  if (parity == Parity::even && k == 41) return FactMethod::corner_hook;
  return FactMethod::pruned;
}

ClaimOutcome verify_fact(int k, Parity parity, const PrimeTables& tables, int workers) {
  if (k < 2 || k > kMaxVerifiedK) {
    throw std::out_of_range("k must lie in [2, " + std::to_string(kMaxVerifiedK) + "]");
  }
  const FactMethod method = fact_method(k, parity);
  if (method == FactMethod::pruned) return pruned_verify(Problem(k, parity, tables), tables);

  const auto start = Clock::now();
  ClaimOutcome inner = method == FactMethod::naive ? naive_verify(k, parity, tables, workers)
                                                   : corner_hook_verify(k, parity, tables);
  ClaimOutcome fact;
  fact.claim = ClaimId::fact;
  fact.k = k;
  fact.parity = parity;
  fact.method = std::string(to_string(method));
  fact.status = inner.status;
  fact.matches = inner.matches;
  fact.counterexamples = inner.counterexamples;
  fact.tuples = inner.tuples;
  fact.partitions = inner.partitions;
  fact.prime_sub = inner.prime_sub;
  const Partition witness = witness_partition(k, parity);
  if (fact.status == Status::verified &&
      !std::any_of(fact.matches.begin(), fact.matches.end(), [&](const TargetMatch& m) {
        return m.partition == witness && m.kind == TargetKind::unit;
      })) {
    fact.status = Status::inconclusive;
    fact.notes.push_back("witness not reached");
  }
  fact.parts.push_back(std::move(inner));
  fact.millis = millis_since(start);
  return fact;
}

ClaimOutcome cross_check(int k, Parity parity, const PrimeTables& tables, int workers) {
  const auto start = Clock::now();
  const Problem problem(k, parity, tables);
  ClaimOutcome pruned = pruned_verify(problem, tables);
  ClaimOutcome naive = naive_verify(k, parity, tables, workers, true);
  ClaimOutcome out = problem.outcome(ClaimId::fact);
  out.method = "cross-check";
  out.matches = naive.matches;
  out.counterexamples = naive.counterexamples;
  out.tuples = pruned.tuples;
  out.partitions = pruned.partitions + naive.partitions;
  out.prime_sub = pruned.prime_sub;
  const bool applicable = pruned.parts.empty() || pruned.parts.front().status == Status::verified;
  if (!applicable) {
    // Nothing to compare: the naive verdict stands on its own.
    out.status = naive.status;
    out.notes.push_back("pruned search not applicable; required inequalities fail");
  } else if (pruned.status != Status::verified || naive.status != Status::verified) {
    out.status = naive.status == Status::counterexample ? Status::counterexample
                                                        : Status::inconclusive;
  } else if (closure(pruned.matches) != closure(naive.matches)) {
    out.status = Status::inconclusive;
    out.notes.push_back("pruned and naive match sets differ");
  }
  out.parts.push_back(std::move(pruned));
  out.parts.push_back(std::move(naive));
  out.millis = millis_since(start);
  return out;
}

DimensionSets dimension_sets(int n, const PrimeTables& tables) {
  if (n < 3 || n > kDimensionSetMaxN) {
    throw std::out_of_range("dimension sets need 3 <= n <= " + std::to_string(kDimensionSetMaxN));
  }
  const FactoredInteger order = factorial_factored(n, tables);
  DimensionSets sets;
  AllPartitions all(n);
  while (all.next()) {
    const Partition lambda(std::vector<int>(all.current().begin(), all.current().end()));
    const FactoredInteger hooks = hook_product_factored(lambda, tables);
    const FactoredInteger dim = order.exact_divide(hooks);
    sets.symmetric.insert(dim.value());
    if (is_self_conjugate(lambda)) {
      sets.alternating.insert(dim.shifted(2, -1).value());
    } else {
      sets.alternating.insert(dim.value());
    }
  }
  return sets;
}

}  // namespace hookcert
