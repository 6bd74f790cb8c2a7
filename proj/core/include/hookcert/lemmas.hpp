#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hookcert/partition.hpp"
#include "hookcert/primes.hpp"

namespace hookcert {

// Prime-interval lemmas, checked over their finite computational ranges.

/// Lower end of the finite range for the two-primes and large-factor checks.
inline constexpr std::int64_t kLemmaScanMin = 337;
/// Upper end; beyond it the statements follow from explicit prime-gap bounds.
inline constexpr std::int64_t kLemmaScanMax = 2'010'760;

/// True iff [k - floor(k/20), k] contains at least two primes.
bool verify_two_primes(std::int64_t k, const PrimeTables& tables);

/// Every k in [k_min, k_max] for which verify_two_primes fails.
std::vector<std::int64_t> scan_two_primes(std::int64_t k_min, std::int64_t k_max,
                                          const PrimeTables& tables, int workers = 1);

struct BbooCertificate {
  enum class Kind { certified, refused, violated };
  Kind kind = Kind::refused;
  std::int64_t i = 0;      ///< offset with k + i carrying the prime
  std::int64_t prime = 0;  ///< prime factor of k + i exceeding y
};

/// If k^h >= h^h (k+h)^pi(y), some k+i (1 <= i <= h) has a prime factor > y;
/// finds one. `refused` when the hypothesis fails, `violated` if the
/// hypothesis holds yet no such factor exists. Requires 1 <= h <= y < k.
BbooCertificate bboo_certify(std::int64_t k, std::int64_t h, std::int64_t y,
                             const PrimeTables& tables);

/// Smallest and largest h of the large-factor window for k.
std::int64_t large_factor_h_min(std::int64_t k);
std::int64_t large_factor_h_max(std::int64_t k);

/// True iff some prime >= 3h divides one of k+1, ..., k+h. Throws
/// std::invalid_argument when h lies outside the window for k.
bool verify_large_prime_factor(std::int64_t k, std::int64_t h, const PrimeTables& tables);

/// Checks every h of the window at once in O(window) after one sieve pass.
/// Returns the first failing h, if any.
std::optional<std::int64_t> first_large_factor_failure(std::int64_t k, const PrimeTables& tables);

struct GapException {
  std::int64_t k = 0;
  std::int64_t next_prime = 0;
  std::int64_t gap = 0;     ///< next_prime - k
  std::int64_t window = 0;  ///< floor(sqrt(k)/2)
  friend bool operator==(const GapException&, const GapException&) = default;
};

/// Every k in [k_min, k_max] with no prime in [k+1, k + floor(sqrt(k)/2)].
std::vector<GapException> scan_prime_gaps(std::int64_t k_min, std::int64_t k_max,
                                          const PrimeTables& tables, int workers = 1);

// Combinatorial inequalities, evaluated exactly (except the factorial bound's
// transcendental right side).

/// Relative guard band applied to the floating right side of the factorial bound.
inline constexpr double kFactorialBoundGuard = 1e-9;

/// (x+y)!(x-y)! <= x!^2 e^2/(2 pi) min(e^{(x+y)/(x-y) y^2/x}, e^{2y^2/x}),
/// accepted only if it holds with the guard band to spare.
bool check_factorial_bound(int x, int y);

/// (2h - n)! divides the hook product, for a box b != (1,1) with 2h >= n.
bool check_factorial_divides(const Partition& lambda, BoxPosition box, const PrimeTables& tables);

/// prod (N - j + c_j) * (N - sum c) <= N * prod (N - j), j = 1..len(c).
bool check_product_bound(std::int64_t n, const std::vector<int>& c);

/// Hook (A+1, 1^B) with tau inserted below-right of the corner:
/// Pi(mu)(A+1-t)(B+1-t) <= Pi(hook) Pi(tau)(A+1)(B+1).
bool check_insertion_bound(int a, int b, const Partition& tau);

/// mu = (A+1, B, tau...): Pi(mu)(A+3-t)(B+1-t) <= Pi((A+1,B)) Pi(tau)(A+3)(B+1).
bool check_two_row_bound(int a, int b, const Partition& tau);

}  // namespace hookcert
