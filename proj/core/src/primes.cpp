#include "hookcert/primes.hpp"

#include <algorithm>
#include <cmath>
#include <new>

namespace hookcert {

namespace {

constexpr std::int64_t kSegmentSize = 1 << 16;

std::vector<std::uint32_t> simple_sieve(std::int64_t limit) {
  std::vector<bool> composite(static_cast<std::size_t>(limit + 1), false);
  std::vector<std::uint32_t> primes;
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::int64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

}  // namespace

PrimeTables::PrimeTables(std::int64_t bound) : bound_(bound) {
  if (bound < 2) throw std::invalid_argument("prime table bound must be >= 2");
  try {
    bits_.assign(static_cast<std::size_t>(bound / 64 + 1), 0);
    // pi(x) < 1.26 x / log x for x > 1.
    const double estimate = 1.26 * static_cast<double>(bound) / std::log(static_cast<double>(bound)) + 8;
    primes_.reserve(static_cast<std::size_t>(estimate));
  } catch (const std::bad_alloc&) {
    throw ResourceError("cannot allocate prime table for bound " + std::to_string(bound) +
                            " (needs about " + std::to_string(bound / 8 + bound / 4) + " bytes)",
                        bound);
  }

  const auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(bound))) + 1;
  const auto base = simple_sieve(root);

  std::vector<std::uint8_t> segment(kSegmentSize);
  for (std::int64_t lo = 0; lo <= bound; lo += kSegmentSize) {
    const std::int64_t hi = std::min(lo + kSegmentSize - 1, bound);
    std::fill(segment.begin(), segment.end(), 1);
    for (const std::uint32_t p : base) {
      const std::int64_t pp = static_cast<std::int64_t>(p) * p;
      if (pp > hi) break;
      std::int64_t start = std::max(pp, (lo + p - 1) / p * p);
      for (std::int64_t m = start; m <= hi; m += p) segment[m - lo] = 0;
    }
    for (std::int64_t m = std::max<std::int64_t>(lo, 2); m <= hi; ++m) {
      if (segment[m - lo]) {
        bits_[static_cast<std::size_t>(m) >> 6] |= std::uint64_t{1} << (m & 63);
        primes_.push_back(static_cast<std::uint32_t>(m));
      }
    }
  }
}

std::int64_t PrimeTables::pi(std::int64_t x) const {
  if (x < 2) return 0;
  check_range(x);
  return std::upper_bound(primes_.begin(), primes_.end(), static_cast<std::uint32_t>(x)) -
         primes_.begin();
}

std::vector<std::int64_t> PrimeTables::primes_in(std::int64_t lo, std::int64_t hi) const {
  check_range(lo);
  check_range(hi);
  std::vector<std::int64_t> out;
  if (lo > hi) return out;
  auto it = std::lower_bound(primes_.begin(), primes_.end(), static_cast<std::uint32_t>(lo));
  for (; it != primes_.end() && *it <= hi; ++it) out.push_back(*it);
  return out;
}

std::int64_t PrimeTables::count_in(std::int64_t lo, std::int64_t hi) const {
  check_range(lo);
  check_range(hi);
  if (lo > hi) return 0;
  return pi(hi) - pi(lo - 1);
}

std::optional<std::int64_t> PrimeTables::next_prime_after(std::int64_t x) const {
  if (x < 0) x = 0;
  if (x >= bound_) return std::nullopt;
  auto it = std::upper_bound(primes_.begin(), primes_.end(), static_cast<std::uint32_t>(x));
  if (it == primes_.end()) return std::nullopt;
  return *it;
}

std::optional<std::int64_t> PrimeTables::largest_prime_at_most(std::int64_t x) const {
  if (x < 2) return std::nullopt;
  check_range(x);
  auto it = std::upper_bound(primes_.begin(), primes_.end(), static_cast<std::uint32_t>(x));
  if (it == primes_.begin()) return std::nullopt;
  return *std::prev(it);
}

std::vector<std::pair<std::int64_t, int>> PrimeTables::factor(std::int64_t m) const {
  if (m < 1) throw std::invalid_argument("factor() needs m >= 1");
  if (m / bound_ > bound_) {
    throw std::out_of_range("value " + std::to_string(m) + " exceeds bound^2 for trial division");
  }
  std::vector<std::pair<std::int64_t, int>> out;
  if (m <= bound_ && is_prime(m)) {
    out.emplace_back(m, 1);
    return out;
  }
  for (const std::uint32_t p : primes_) {
    const std::int64_t pp = static_cast<std::int64_t>(p) * p;
    if (pp > m) break;
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

std::int64_t PrimeTables::largest_prime_factor(std::int64_t m) const {
  const auto f = factor(m);
  return f.empty() ? 1 : f.back().first;
}

std::array<bool, 6> preliminary_inequalities(int weight, int p, int q, int r) {
  const int n = weight;
  return {
      3 * q > n,
      2 * (2 * q + 2) + (p - 1) > 2 * n,
      2 * q + r > n,
      q + 3 * r > n,
      3 * r < 2 * q,
      5 * r > n,
  };
}

AuxiliaryPrimes auxiliary_primes(int k, Parity parity, const PrimeTables& tables) {
  if (k < kPrunedMinK) {
    throw std::invalid_argument("auxiliary primes are defined for k >= " +
                                std::to_string(kPrunedMinK));
  }
  if (tables.bound() < k + 1) {
    throw ResourceError("prime table too small for k=" + std::to_string(k), k + 1);
  }
  AuxiliaryPrimes aux;
  if (parity == Parity::odd) {
    aux.p = static_cast<int>(*tables.largest_prime_at_most(k));
    aux.q = static_cast<int>(*tables.largest_prime_at_most(aux.p - 1));
    aux.r = static_cast<int>(*tables.largest_prime_at_most(k / 2));
  } else {
    const int below = static_cast<int>(*tables.largest_prime_at_most(k - 1));
    const int second = static_cast<int>(*tables.largest_prime_at_most(below - 1));
    if (tables.is_prime(k + 1)) {
      aux.p = k + 1;
      aux.q = below;
    } else {
      aux.p = below;
      aux.q = second;
    }
    if ((k + 1) % 2 == 0 && tables.is_prime((k + 1) / 2)) {
      aux.r = (k + 1) / 2;
    } else {
      aux.r = static_cast<int>(*tables.largest_prime_at_most((k - 1) / 2));
    }
  }
  const auto ok = preliminary_inequalities(witness_weight(k, parity), aux.p, aux.q, aux.r);
  aux.r_usable = ok[2] && ok[3] && ok[4] && ok[5];
  return aux;
}

}  // namespace hookcert
