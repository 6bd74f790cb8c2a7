#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hookcert/partition.hpp"
#include "hookcert/primes.hpp"

namespace hookcert {

using BigInt = boost::multiprecision::cpp_int;

/// A positive integer held as its prime factorization.
///
/// Hook products and the targets they are compared against have hundreds of
/// digits; all the verification needs is multiplication, exact division and
/// equality, which are exponent-wise here. Terms are kept sorted by prime with
/// every exponent >= 1, so equal values have identical term lists.
class FactoredInteger {
 public:
  using Term = std::pair<std::int64_t, int>;

  FactoredInteger() = default;

  /// Terms need not be sorted or merged; zero exponents are dropped.
  /// Negative exponents throw std::domain_error. Primality of the keys is the
  /// caller's responsibility.
  static FactoredInteger from_terms(std::vector<Term> terms);

  std::span<const Term> terms() const { return terms_; }
  int exponent(std::int64_t prime) const;
  bool is_one() const { return terms_.empty(); }

  FactoredInteger& operator*=(const FactoredInteger& other);
  friend FactoredInteger operator*(FactoredInteger a, const FactoredInteger& b) {
    a *= b;
    return a;
  }
  FactoredInteger pow(int e) const;

  /// Multiplies by prime^delta; delta may be negative as long as the result
  /// stays integral (std::domain_error otherwise).
  FactoredInteger shifted(std::int64_t prime, int delta) const;

  bool divides(const FactoredInteger& other) const;
  /// this / divisor, exponent-wise. Throws std::domain_error if not integral.
  FactoredInteger exact_divide(const FactoredInteger& divisor) const;

  BigInt value() const;
  std::string decimal() const { return value().str(); }
  /// "2^2·5"; "1" for the empty product.
  std::string to_string() const;

  friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;

 private:
  std::vector<Term> terms_;
};

/// Factorization of 1 <= m <= tables.bound().
FactoredInteger factor_small(std::int64_t m, const PrimeTables& tables);

/// m! via Legendre's formula; needs m <= tables.bound().
FactoredInteger factorial_factored(std::int64_t m, const PrimeTables& tables);

/// Product of all hook lengths of `lambda`.
FactoredInteger hook_product_factored(const Partition& lambda, const PrimeTables& tables);

/// The three hook products {Pi/2, Pi, 2Pi} a competitor of the witness would
/// need. `half` is empty when Pi is odd.
struct TargetSet {
  std::optional<FactoredInteger> half;
  FactoredInteger unit;
  FactoredInteger twice;
};

/// Odd: Pi_k = (2k+1) k!^2. Even: Pi'_k = (2k+1) (k+1)^2 (k-1)!^2.
TargetSet targets(int k, Parity parity, const PrimeTables& tables);

enum class Group : std::uint8_t { symmetric, alternating };

/// Irreducible degree for the class of `lambda`, with the number of
/// irreducibles of that group sharing it (2 for split self-conjugate classes
/// of A_n, otherwise 1).
struct Dimension {
  FactoredInteger value;
  int multiplicity = 1;
};

/// S_n: n!/Pi(lambda). A_n: the same for lambda != lambda*, and n!/(2 Pi)
/// with multiplicity 2 when lambda is self-conjugate.
Dimension dimension(const Partition& lambda, Group group, const PrimeTables& tables);

}  // namespace hookcert
