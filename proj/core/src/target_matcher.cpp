#include "hookcert/target_matcher.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hookcert {

namespace {

__extension__ using u128 = unsigned __int128;

constexpr std::uint64_t kModulus = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  const u128 z = static_cast<u128>(a) * b;
  const std::uint64_t lo = static_cast<std::uint64_t>(z) & kModulus;
  const std::uint64_t hi = static_cast<std::uint64_t>(z >> 61);
  const std::uint64_t s = lo + hi;
  return s >= kModulus ? s - kModulus : s;
}

std::uint64_t residue_of(const FactoredInteger& value) {
  std::uint64_t r = 1;
  for (const auto& [prime, e] : value.terms()) {
    const std::uint64_t base = static_cast<std::uint64_t>(prime) % kModulus;
    for (int i = 0; i < e; ++i) r = mulmod(r, base);
  }
  return r;
}

}  // namespace

std::string_view to_string(TargetKind kind) {
  switch (kind) {
    case TargetKind::half: return "half";
    case TargetKind::unit: return "unit";
    case TargetKind::twice: return "double";
    case TargetKind::none: break;
  }
  return "none";
}

TargetMatcher::TargetMatcher(const TargetSet& targets, int max_weight, const PrimeTables& tables)
    : max_weight_(max_weight) {
  if (max_weight < 1 || max_weight > tables.bound()) {
    throw std::invalid_argument("target matcher weight outside prime table");
  }
  const int bits = std::bit_width(static_cast<unsigned>(max_weight));
  block_ = std::max(1, 60 / bits);

  for (const std::uint32_t p : tables.primes()) {
    if (p > static_cast<std::uint32_t>(max_weight)) break;
    primes_.push_back(static_cast<int>(p));
  }
  factor_index_.resize(static_cast<std::size_t>(max_weight) + 1);
  for (int h = 2; h <= max_weight; ++h) {
    for (const auto& [prime, e] : tables.factor(h)) {
      const auto idx = std::lower_bound(primes_.begin(), primes_.end(), prime) - primes_.begin();
      factor_index_[h].emplace_back(static_cast<int>(idx), e);
    }
  }

  const FactoredInteger* values[3] = {targets.half ? &*targets.half : nullptr, &targets.unit,
                                      &targets.twice};
  for (int t = 0; t < 3; ++t) {
    present_[t] = values[t] != nullptr;
    if (!present_[t]) continue;
    residues_[t] = residue_of(*values[t]);
    exponents_[t].assign(primes_.size(), 0);
    for (const auto& [prime, e] : values[t]->terms()) {
      if (prime > max_weight) {
        representable_[t] = false;  // no hook can supply this prime
        continue;
      }
      const auto idx = std::lower_bound(primes_.begin(), primes_.end(), prime) - primes_.begin();
      exponents_[t][idx] = e;
    }
  }
}

std::uint64_t TargetMatcher::residue(std::span<const int> rows, std::span<const int> cols) const {
  std::uint64_t acc = 1;
  std::uint64_t block = 1;
  int filled = 0;
  const int block_size = block_;
  for_each_hook(rows, cols, [&](int h) {
    block *= static_cast<std::uint64_t>(h);
    if (++filled == block_size) {
      acc = mulmod(acc, block);
      block = 1;
      filled = 0;
    }
  });
  return mulmod(acc, block);
}

TargetKind TargetMatcher::match(std::span<const int> rows, std::vector<int>& cols) const {
  conjugate_into(rows, cols);
  const std::uint64_t r = residue(rows, cols);
  for (int t = 0; t < 3; ++t) {
    if (present_[t] && residues_[t] == r) return exact(rows, cols);
  }
  return TargetKind::none;
}

TargetKind TargetMatcher::exact(std::span<const int> rows, std::span<const int> cols) const {
  std::vector<int> exps(primes_.size(), 0);
  bool too_big = false;
  for_each_hook(rows, cols, [&](int h) {
    if (h > max_weight_) {
      too_big = true;
      return;
    }
    for (const auto& [idx, e] : factor_index_[h]) exps[idx] += e;
  });
  if (too_big) throw std::invalid_argument("partition exceeds the matcher's weight bound");
  constexpr TargetKind kinds[3] = {TargetKind::half, TargetKind::unit, TargetKind::twice};
  for (int t = 0; t < 3; ++t) {
    if (present_[t] && representable_[t] && exps == exponents_[t]) return kinds[t];
  }
  return TargetKind::none;
}

}  // namespace hookcert
