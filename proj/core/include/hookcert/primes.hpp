#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hookcert/partition.hpp"

namespace hookcert {

/// Raised when a computation needs more memory or a larger sieve than is
/// available. The message carries the required bound.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::int64_t required)
      : std::runtime_error(what), required_(required) {}
  std::int64_t required() const { return required_; }

 private:
  std::int64_t required_;
};

/// Sieve-backed prime services over [0, bound].
///
/// Built once with a segmented sieve of Eratosthenes and immutable afterwards,
/// so any number of threads may query the same instance.
class PrimeTables {
 public:
  explicit PrimeTables(std::int64_t bound);

  std::int64_t bound() const { return bound_; }

  bool is_prime(std::int64_t m) const {
    check_range(m);
    return m >= 2 && ((bits_[static_cast<std::size_t>(m) >> 6] >> (m & 63)) & 1U);
  }

  /// Number of primes <= x.
  std::int64_t pi(std::int64_t x) const;

  std::span<const std::uint32_t> primes() const { return primes_; }

  /// All primes in [lo, hi], ascending. Throws std::out_of_range past the bound.
  std::vector<std::int64_t> primes_in(std::int64_t lo, std::int64_t hi) const;
  std::int64_t count_in(std::int64_t lo, std::int64_t hi) const;

  /// Smallest prime > x, if it is within the table.
  std::optional<std::int64_t> next_prime_after(std::int64_t x) const;
  /// Largest prime <= x, if any.
  std::optional<std::int64_t> largest_prime_at_most(std::int64_t x) const;

  /// Prime factorization by trial division with tabulated primes; valid for
  /// 1 <= m <= bound^2. Ascending primes with exponents.
  std::vector<std::pair<std::int64_t, int>> factor(std::int64_t m) const;
  std::int64_t largest_prime_factor(std::int64_t m) const;

 private:
  void check_range(std::int64_t m) const {
    if (m < 0 || m > bound_) {
      throw std::out_of_range("value " + std::to_string(m) + " outside prime table bound " +
                              std::to_string(bound_));
    }
  }

  std::int64_t bound_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint32_t> primes_;
};

/// The primes driving the pruned search for one k.
struct AuxiliaryPrimes {
  int p = 0;  ///< largest
  int q = 0;  ///< second largest, q < p
  int r = 0;
  bool r_usable = false;
  friend bool operator==(const AuxiliaryPrimes&, const AuxiliaryPrimes&) = default;
};

/// The six inequalities the pruned search relies on, for weight n:
///   3q > n, 2q + (p-1)/2 + 2 > n, 2q + r > n, q + 3r > n, 3r < 2q, 5r > n.
/// The first two are required; the last four gate the r substitution.
/// (p-1)/2 is compared exactly, i.e. 2*(2q+2) + p - 1 > 2n.
std::array<bool, 6> preliminary_inequalities(int weight, int p, int q, int r);

/// Smallest k for which the pruned pipeline is defined.
inline constexpr int kPrunedMinK = 35;

/// Odd: p > q the two largest primes <= k, r the largest prime <= k/2.
/// Even: p > q the two largest primes in [1, k-1] u {k+1}; r = (k+1)/2 when
/// that is prime, otherwise the largest prime <= (k-1)/2.
/// r_usable is true iff the last four preliminary inequalities hold.
AuxiliaryPrimes auxiliary_primes(int k, Parity parity, const PrimeTables& tables);

}  // namespace hookcert
