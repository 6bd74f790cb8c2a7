#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "hookcert/factored.hpp"
#include "hookcert/primes.hpp"

namespace hookcert {

enum class TargetKind : std::uint8_t { none, half, unit, twice };

std::string_view to_string(TargetKind kind);

/// Decides whether a partition's hook product is one of {Pi/2, Pi, 2Pi}.
///
/// The product is first reduced modulo the Mersenne prime 2^61 - 1; only a
/// residue hit triggers the exact exponent-vector comparison, so a reported
/// match is always exact and a rejection is always sound.
class TargetMatcher {
 public:
  /// `max_weight` bounds the size of partitions that will be tested.
  TargetMatcher(const TargetSet& targets, int max_weight, const PrimeTables& tables);

  /// `cols` is scratch space for the conjugate.
  TargetKind match(std::span<const int> rows, std::vector<int>& cols) const;

  /// Hook product modulo 2^61 - 1 (exposed for tests and benchmarks).
  std::uint64_t residue(std::span<const int> rows, std::span<const int> cols) const;

 private:
  TargetKind exact(std::span<const int> rows, std::span<const int> cols) const;

  int max_weight_;
  int block_;  // hooks multiplied in plain 64-bit before each reduction
  std::array<std::uint64_t, 3> residues_{};
  std::array<bool, 3> present_{};
  // Exponent of prime index i in each target; primes are those <= max_weight.
  std::array<std::vector<int>, 3> exponents_;
  bool representable_[3] = {true, true, true};
  std::vector<int> primes_;
  // factor_index_[h] = list of (prime index, exponent) for h <= max_weight.
  std::vector<std::vector<std::pair<int, int>>> factor_index_;
};

}  // namespace hookcert
