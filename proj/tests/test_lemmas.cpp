#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "hookcert/enumerate.hpp"
#include "hookcert/lemmas.hpp"
#include "oracles.hpp"

using namespace hookcert;

namespace {

const PrimeTables& tables() {
  static const PrimeTables t(1'200'000);
  return t;
}

std::int64_t largest_prime_factor(std::int64_t m) {
  std::int64_t best = 1;
  for (std::int64_t d = 2; d * d <= m; ++d) {
    while (m % d == 0) {
      best = d;
      m /= d;
    }
  }
  return m > 1 ? std::max(best, m) : best;
}

}  // namespace

TEST(TwoPrimes, Examples) {
  EXPECT_TRUE(verify_two_primes(337, tables()));
  EXPECT_TRUE(verify_two_primes(1000, tables()));
  EXPECT_FALSE(verify_two_primes(20, tables()));  // [19,20] holds one prime
}

TEST(TwoPrimes, AgreesWithTrialDivision) {
  for (std::int64_t k = 337; k <= 20000; k += 7) {
    int count = 0;
    for (std::int64_t m = k - k / 20; m <= k; ++m) count += oracle::is_prime(m) ? 1 : 0;
    EXPECT_EQ(verify_two_primes(k, tables()), count >= 2) << k;
  }
  EXPECT_TRUE(scan_two_primes(337, 200000, tables(), 3).empty());
  EXPECT_THROW(scan_two_primes(337, 2'000'000, tables()), ResourceError);
}

TEST(Bboo, RefusesWhenTheConditionFails) {
  EXPECT_EQ(bboo_certify(1000, 3, 10, tables()).kind, BbooCertificate::Kind::refused);
  EXPECT_THROW(bboo_certify(1000, 11, 10, tables()), std::invalid_argument);
  EXPECT_THROW(bboo_certify(10, 3, 10, tables()), std::invalid_argument);
  EXPECT_THROW(bboo_certify(1000, 0, 10, tables()), std::invalid_argument);
}

TEST(Bboo, CertificatesAreGenuine) {
  int certified = 0;
  for (std::int64_t k = 1000; k <= 400000; k += 997) {
    for (std::int64_t h : {2, 3, 5, 8}) {
      for (std::int64_t y : {h, 2 * h, 3 * h}) {
        const BbooCertificate c = bboo_certify(k, h, y, tables());
        EXPECT_NE(c.kind, BbooCertificate::Kind::violated);
        if (c.kind != BbooCertificate::Kind::certified) continue;
        ++certified;
        EXPECT_GE(c.i, 1);
        EXPECT_LE(c.i, h);
        EXPECT_GT(c.prime, y);
        EXPECT_TRUE(oracle::is_prime(c.prime));
        EXPECT_EQ((k + c.i) % c.prime, 0);
      }
    }
  }
  EXPECT_GT(certified, 0);
}

TEST(LargePrimeFactor, Examples) {
  EXPECT_TRUE(verify_large_prime_factor(337, 10, tables()));
  EXPECT_TRUE(verify_large_prime_factor(337, 50, tables()));
  EXPECT_TRUE(verify_large_prime_factor(1'000'000, 500, tables()));
  EXPECT_THROW(verify_large_prime_factor(337, 9, tables()), std::invalid_argument);
  EXPECT_THROW(verify_large_prime_factor(337, 51, tables()), std::invalid_argument);
  EXPECT_EQ(large_factor_h_min(337), 10);
  EXPECT_EQ(large_factor_h_min(400), 10);
  EXPECT_EQ(large_factor_h_max(337), 50);
}

TEST(LargePrimeFactor, FirstFailureAgreesWithBruteForce) {
  for (std::int64_t k = 337; k <= 6000; k += 13) {
    std::optional<std::int64_t> expect;
    for (std::int64_t h = large_factor_h_min(k); h <= large_factor_h_max(k) && !expect; ++h) {
      std::int64_t best = 0;
      for (std::int64_t i = 1; i <= h; ++i) best = std::max(best, largest_prime_factor(k + i));
      if (best < 3 * h) expect = h;
    }
    EXPECT_EQ(first_large_factor_failure(k, tables()), expect) << k;
  }
}

TEST(PrimeGaps, AgreesWithPlainSieve) {
  const std::int64_t hi = 300000;
  const auto s = oracle::sieve(hi + 2000);
  std::vector<std::int64_t> expect;
  for (std::int64_t k = 337; k <= hi; ++k) {
    const auto window = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(k)) / 2));
    bool found = false;
    for (std::int64_t m = k + 1; m <= k + window; ++m) found = found || s[m];
    if (!found) expect.push_back(k);
  }
  std::vector<std::int64_t> got;
  for (const auto& g : scan_prime_gaps(337, hi, tables(), 4)) {
    got.push_back(g.k);
    EXPECT_EQ(g.gap, g.next_prime - g.k);
    EXPECT_GT(g.gap, g.window);
  }
  EXPECT_EQ(got, expect);
}

TEST(PrimeGaps, WorkerCountDoesNotChangeTheResult) {
  EXPECT_EQ(scan_prime_gaps(337, 500000, tables(), 1), scan_prime_gaps(337, 500000, tables(), 5));
}

TEST(FactorialBound, Examples) {
  EXPECT_TRUE(check_factorial_bound(0, 0));
  EXPECT_TRUE(check_factorial_bound(17, 0));
  EXPECT_TRUE(check_factorial_bound(10, 3));
  EXPECT_TRUE(check_factorial_bound(200, 50));
  EXPECT_TRUE(check_factorial_bound(5, 5));
  EXPECT_THROW(check_factorial_bound(3, 4), std::invalid_argument);
}

TEST(FactorialBound, MarginAgreesWithLogGammaOracle) {
  for (int x = 1; x <= 120; ++x) {
    for (int y = 0; y <= x; ++y) {
      const long double lhs = std::lgamma(static_cast<long double>(x + y + 1)) +
                              std::lgamma(static_cast<long double>(x - y + 1)) -
                              2 * std::lgamma(static_cast<long double>(x + 1));
      long double exponent = 2.0L * y * y / x;
      if (y < x) exponent = std::min(exponent, (x + y) * 1.0L / (x - y) * y * y / x);
      const long double rhs = 2 - std::log(2 * 3.14159265358979323846L) + exponent;
      ASSERT_LT(lhs, rhs) << x << "," << y;
      ASSERT_TRUE(check_factorial_bound(x, y)) << x << "," << y;
    }
  }
}

TEST(FactorialDivides, Examples) {
  EXPECT_THROW(check_factorial_divides(Partition{3, 1, 1}, {1, 2}, tables()), std::invalid_argument);
  EXPECT_TRUE(check_factorial_divides(Partition{5, 1}, {1, 2}, tables()));
  EXPECT_THROW(check_factorial_divides(Partition{5, 1}, {1, 1}, tables()), std::invalid_argument);
}

TEST(FactorialDivides, SmallSweepAgainstOracle) {
  for (int n = 2; n <= 12; ++n) {
    for (const auto& parts : oracle::partitions(n)) {
      const oracle::BigInt pi = oracle::hook_product(parts);
      for (int i = 1; i <= static_cast<int>(parts.size()); ++i) {
        for (int j = 1; j <= parts[i - 1]; ++j) {
          if (i == 1 && j == 1) continue;
          const int m = 2 * oracle::hook(parts, i, j) - n;
          if (m < 0) continue;
          EXPECT_EQ(pi % oracle::factorial(m), 0);
          EXPECT_TRUE(check_factorial_divides(Partition(parts), {i, j}, tables()));
        }
      }
    }
  }
}

TEST(ProductBound, Examples) {
  for (int n = 4; n <= 40; ++n) EXPECT_TRUE(check_product_bound(n, {1, 1, 1}));
  EXPECT_TRUE(check_product_bound(10, {3, 2}));
  EXPECT_THROW(check_product_bound(5, {3, 2}), std::invalid_argument);
  EXPECT_THROW(check_product_bound(10, {3, 0}), std::invalid_argument);
}

TEST(ProductBound, AllOnesIsEquality) {
  // prod (N-j+1) = N!/(N-k)! and N/(N-k) prod (N-j) = N!/(N-k)! as well.
  for (int n = 4; n <= 30; ++n) {
    for (int k = 1; k < n; ++k) {
      oracle::BigInt lhs = 1, rhs = n;
      for (int j = 1; j <= k; ++j) {
        lhs *= n - j + 1;
        rhs *= n - j;
      }
      EXPECT_EQ(lhs * (n - k), rhs);
      EXPECT_TRUE(check_product_bound(n, std::vector<int>(static_cast<std::size_t>(k), 1)));
    }
  }
}

TEST(ProductBound, RandomHundred) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<int> c;
    int sum = 0;
    const int len = 1 + static_cast<int>(rng() % 20);
    for (int j = 0; j < len && sum < 90; ++j) {
      c.push_back(1 + static_cast<int>(rng() % 8));
      sum += c.back();
    }
    if (sum >= 100) continue;
    EXPECT_TRUE(check_product_bound(100, c));
  }
}

TEST(InsertionBound, Examples) {
  EXPECT_TRUE(check_insertion_bound(4, 4, Partition()));
  EXPECT_TRUE(check_insertion_bound(4, 4, Partition{2, 1}));
  EXPECT_THROW(check_insertion_bound(1, 4, Partition{2, 1}), std::invalid_argument);
}

TEST(InsertionBound, EmptyTauIsEquality) {
  // With tau empty both sides are Pi(lambda) * (A+1)(B+1); verified through
  // the oracle hook product of the hook partition.
  for (int a = 0; a <= 10; ++a) {
    for (int b = 0; b <= 10; ++b) {
      oracle::Parts hook{a + 1};
      for (int i = 0; i < b; ++i) hook.push_back(1);
      EXPECT_EQ(oracle::hook_product(hook), oracle::factorial(a) * oracle::factorial(b) * (a + b + 1));
      EXPECT_TRUE(check_insertion_bound(a, b, Partition()));
    }
  }
}

TEST(TwoRowBound, Examples) {
  EXPECT_TRUE(check_two_row_bound(5, 4, Partition()));
  EXPECT_TRUE(check_two_row_bound(5, 4, Partition{2, 1}));
  EXPECT_THROW(check_two_row_bound(5, 1, Partition{2, 1}), std::invalid_argument);
}
