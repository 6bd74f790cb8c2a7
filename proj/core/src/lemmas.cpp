#include "hookcert/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "hookcert/factored.hpp"

namespace hookcert {

namespace {

using Float = boost::multiprecision::cpp_bin_float_100;

std::int64_t isqrt(std::int64_t m) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(m)));
  while (r * r > m) --r;
  while ((r + 1) * (r + 1) <= m) ++r;
  return r;
}

// Splits [lo, hi] into `workers` contiguous chunks, runs `scan` on each and
// concatenates the results in ascending order.
template <typename T, typename Scan>
std::vector<T> chunked(std::int64_t lo, std::int64_t hi, int workers, Scan scan) {
  if (lo > hi) return {};
  workers = std::max(1, workers);
  const std::int64_t span = hi - lo + 1;
  workers = static_cast<int>(std::min<std::int64_t>(workers, span));
  std::vector<std::vector<T>> parts(static_cast<std::size_t>(workers));
  if (workers == 1) {
    parts[0] = scan(lo, hi);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
      const std::int64_t a = lo + span * w / workers;
      const std::int64_t b = lo + span * (w + 1) / workers - 1;
      threads.emplace_back([&parts, &scan, w, a, b] { parts[w] = scan(a, b); });
    }
    for (auto& t : threads) t.join();
  }
  std::vector<T> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Largest prime factor of every m in [lo, hi], by sieving with primes up to
// sqrt(hi).
std::vector<std::int64_t> largest_prime_factors(std::int64_t lo, std::int64_t hi,
                                                const PrimeTables& tables) {
  const auto len = static_cast<std::size_t>(hi - lo + 1);
  std::vector<std::int64_t> rest(len);
  std::vector<std::int64_t> largest(len, 1);
  std::iota(rest.begin(), rest.end(), lo);
  const std::int64_t root = isqrt(hi);
  if (root > tables.bound()) throw std::out_of_range("prime table too small to factor window");
  for (const std::uint32_t p : tables.primes()) {
    if (p > root) break;
    for (std::int64_t m = (lo + p - 1) / p * p; m <= hi; m += p) {
      auto& r = rest[static_cast<std::size_t>(m - lo)];
      while (r % p == 0) r /= p;
      largest[static_cast<std::size_t>(m - lo)] = p;
    }
  }
  for (std::size_t i = 0; i < len; ++i) {
    if (rest[i] > 1) largest[i] = rest[i];
  }
  return largest;
}

BigInt factorial_value(int m) {
  BigInt v = 1;
  for (int i = 2; i <= m; ++i) v *= i;
  return v;
}

BigInt hook_product_value(const Partition& lambda) {
  BigInt v = 1;
  for (const int h : hook_multiset(lambda)) v *= h;
  return v;
}

}  // namespace

bool verify_two_primes(std::int64_t k, const PrimeTables& tables) {
  if (k < 1) throw std::invalid_argument("two-primes check needs k >= 1");
  return tables.count_in(k - k / 20, k) >= 2;
}

std::vector<std::int64_t> scan_two_primes(std::int64_t k_min, std::int64_t k_max,
                                          const PrimeTables& tables, int workers) {
  if (k_max > tables.bound()) {
    throw ResourceError("two-primes scan exceeds the sieve bound", k_max);
  }
  return chunked<std::int64_t>(k_min, k_max, workers, [&](std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> failures;
    for (std::int64_t k = lo; k <= hi; ++k) {
      if (!verify_two_primes(k, tables)) failures.push_back(k);
    }
    return failures;
  });
}

BbooCertificate bboo_certify(std::int64_t k, std::int64_t h, std::int64_t y,
                             const PrimeTables& tables) {
  if (!(1 <= h && h <= y && y < k)) {
    throw std::invalid_argument("bboo_certify needs 1 <= h <= y < k");
  }
  const std::int64_t pi_y = tables.pi(y);
  BbooCertificate out;
  // Logarithms only discard hopeless inputs; acceptance is exact.
  const double lhs_log = static_cast<double>(h) * std::log(static_cast<double>(k) / h);
  const double rhs_log = static_cast<double>(pi_y) * std::log(static_cast<double>(k + h));
  if (lhs_log + 1e-6 * (1.0 + std::abs(rhs_log)) < rhs_log) return out;
  using boost::multiprecision::pow;
  const BigInt lhs = pow(BigInt(k), static_cast<unsigned>(h));
  const BigInt rhs =
      pow(BigInt(h), static_cast<unsigned>(h)) * pow(BigInt(k + h), static_cast<unsigned>(pi_y));
  if (lhs < rhs) return out;
  for (std::int64_t i = 1; i <= h; ++i) {
    const std::int64_t prime = tables.largest_prime_factor(k + i);
    if (prime > y) {
      out.kind = BbooCertificate::Kind::certified;
      out.i = i;
      out.prime = prime;
      return out;
    }
  }
  out.kind = BbooCertificate::Kind::violated;
  return out;
}

std::int64_t large_factor_h_min(std::int64_t k) {
  // Smallest h with 2h >= sqrt(k), i.e. 4h^2 >= k.
  std::int64_t h = isqrt(k) / 2;
  while (4 * h * h < k) ++h;
  return h;
}

std::int64_t large_factor_h_max(std::int64_t k) { return 3 * k / 20; }

bool verify_large_prime_factor(std::int64_t k, std::int64_t h, const PrimeTables& tables) {
  if (h < large_factor_h_min(k) || h > large_factor_h_max(k)) {
    throw std::invalid_argument("h=" + std::to_string(h) + " outside the window for k=" +
                                std::to_string(k));
  }
  const auto largest = largest_prime_factors(k + 1, k + h, tables);
  return *std::max_element(largest.begin(), largest.end()) >= 3 * h;
}

std::optional<std::int64_t> first_large_factor_failure(std::int64_t k, const PrimeTables& tables) {
  const std::int64_t h_min = large_factor_h_min(k);
  const std::int64_t h_max = large_factor_h_max(k);
  if (h_min > h_max) return std::nullopt;
  const auto largest = largest_prime_factors(k + 1, k + h_max, tables);
  std::int64_t best = 0;
  for (std::int64_t h = 1; h <= h_max; ++h) {
    best = std::max(best, largest[static_cast<std::size_t>(h - 1)]);
    if (h >= h_min && best < 3 * h) return h;
  }
  return std::nullopt;
}

std::vector<GapException> scan_prime_gaps(std::int64_t k_min, std::int64_t k_max,
                                          const PrimeTables& tables, int workers) {
  if (k_min < 1 || k_min > k_max) throw std::invalid_argument("empty gap-scan range");
  return chunked<GapException>(k_min, k_max, workers, [&](std::int64_t lo, std::int64_t hi) {
    std::vector<GapException> found;
    auto next = tables.next_prime_after(lo);
    for (std::int64_t k = lo; k <= hi; ++k) {
      if (!next || *next <= k) next = tables.next_prime_after(k);
      if (!next) {
        throw ResourceError("gap scan needs primes beyond the sieve bound", k + isqrt(k) / 2 + 1);
      }
      const std::int64_t window = isqrt(k) / 2;
      if (*next > k + window) found.push_back({k, *next, *next - k, window});
    }
    return found;
  });
}

bool check_factorial_bound(int x, int y) {
  if (y < 0 || y > x) throw std::invalid_argument("factorial bound needs 0 <= y <= x");
  const BigInt lhs = factorial_value(x + y) * factorial_value(x - y);
  const BigInt fx = factorial_value(x);
  const Float ratio = Float(lhs) / Float(fx * fx);
  const Float e = boost::math::constants::e<Float>();
  const Float pi = boost::math::constants::pi<Float>();
  Float exponent = 0;
  if (y > 0) {
    exponent = Float(2) * y * y / x;
    if (y < x) {
      const Float first = Float(x + y) / (x - y) * y * y / x;
      exponent = std::min(exponent, first);
    }
  }
  const Float rhs = e * e / (2 * pi) * exp(exponent);
  return ratio <= rhs * (1 - Float(kFactorialBoundGuard));
}

bool check_factorial_divides(const Partition& lambda, BoxPosition box, const PrimeTables& tables) {
  if (box.row == 1 && box.col == 1) throw std::invalid_argument("corner box excluded");
  const int h = hook_length(lambda, box);
  const int m = 2 * h - lambda.weight();
  if (m < 0) throw std::invalid_argument("needs 2h >= n");
  return factorial_factored(m, tables).divides(hook_product_factored(lambda, tables));
}

bool check_product_bound(std::int64_t n, const std::vector<int>& c) {
  const std::int64_t total = std::accumulate(c.begin(), c.end(), std::int64_t{0});
  if (n <= total) throw std::invalid_argument("product bound needs N > sum c");
  BigInt lhs = n - total;
  BigInt rhs = n;
  for (std::size_t j = 1; j <= c.size(); ++j) {
    const std::int64_t cj = c[j - 1];
    if (cj < 1) throw std::invalid_argument("product bound needs positive c_j");
    const std::int64_t jj = static_cast<std::int64_t>(j);
    lhs *= n - jj + cj;
    rhs *= n - jj;
  }
  return lhs <= rhs;
}

bool check_insertion_bound(int a, int b, const Partition& tau) {
  const int t = tau.weight();
  if (a < 0 || b < 0 || tau.row(1) > a || tau.length() > b || t >= std::min(a + 1, b + 1)) {
    throw std::invalid_argument("tau does not fit inside the hook");
  }
  std::vector<int> mu(static_cast<std::size_t>(b) + 1, 1);
  mu[0] = a + 1;
  for (int i = 1; i <= tau.length(); ++i) mu[i] += tau.row(i);
  const Partition hook = Partition::from_runs({{a + 1, 1}, {1, b}});
  const BigInt lhs = hook_product_value(Partition(std::move(mu))) * (a + 1 - t) * (b + 1 - t);
  const BigInt rhs = hook_product_value(hook) * hook_product_value(tau) * (a + 1) * (b + 1);
  return lhs <= rhs;
}

bool check_two_row_bound(int a, int b, const Partition& tau) {
  const int t = tau.weight();
  if (a < 0 || b < 0 || b > a + 1 || tau.row(1) > b || t >= std::min(a + 3, b + 1)) {
    throw std::invalid_argument("mu = (A+1, B, tau) is not a valid configuration");
  }
  std::vector<int> mu{a + 1, b};
  mu.insert(mu.end(), tau.parts().begin(), tau.parts().end());
  while (!mu.empty() && mu.back() == 0) mu.pop_back();
  const Partition lambda = b > 0 ? Partition{a + 1, b} : Partition{a + 1};
  const BigInt lhs = hook_product_value(Partition(std::move(mu))) * (a + 3 - t) * (b + 1 - t);
  const BigInt rhs = hook_product_value(lambda) * hook_product_value(tau) * (a + 3) * (b + 1);
  return lhs <= rhs;
}

}  // namespace hookcert
