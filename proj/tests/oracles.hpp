#pragma once

// Reference implementations the library is tested against. They share no
// code with the library and favour obviousness over speed.

#include <cstdint>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;
using Parts = std::vector<int>;

inline void partitions_rec(int rem, int cap, Parts& cur, std::vector<Parts>& out) {
  if (rem == 0) {
    out.push_back(cur);
    return;
  }
  for (int v = std::min(rem, cap); v >= 1; --v) {
    cur.push_back(v);
    partitions_rec(rem - v, v, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Parts> partitions(int n) {
  std::vector<Parts> out;
  Parts cur;
  partitions_rec(n, n, cur, out);
  return out;
}

// p(0..nmax) by the pentagonal number recurrence.
inline std::vector<std::uint64_t> euler_counts(int nmax) {
  std::vector<std::int64_t> p(static_cast<std::size_t>(nmax) + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= nmax; ++n) {
    std::int64_t sum = 0;
    for (int j = 1;; ++j) {
      const int g1 = j * (3 * j - 1) / 2;
      const int g2 = j * (3 * j + 1) / 2;
      if (g1 > n) break;
      const std::int64_t sign = j % 2 == 1 ? 1 : -1;
      sum += sign * p[n - g1];
      if (g2 <= n) sum += sign * p[n - g2];
    }
    p[n] = sum;
  }
  return {p.begin(), p.end()};
}

inline int row_len(const Parts& p, int i) { return i <= static_cast<int>(p.size()) ? p[i - 1] : 0; }

inline int col_len(const Parts& p, int j) {
  int c = 0;
  for (int v : p) c += v >= j ? 1 : 0;
  return c;
}

inline int hook(const Parts& p, int i, int j) {
  return (row_len(p, i) - j) + (col_len(p, j) - i) + 1;
}

inline std::vector<int> hooks(const Parts& p) {
  std::vector<int> out;
  for (int i = 1; i <= static_cast<int>(p.size()); ++i) {
    for (int j = 1; j <= p[i - 1]; ++j) out.push_back(hook(p, i, j));
  }
  return out;
}

inline BigInt hook_product(const Parts& p) {
  BigInt out = 1;
  for (int h : hooks(p)) out *= h;
  return out;
}

inline BigInt factorial(int m) {
  BigInt out = 1;
  for (int i = 2; i <= m; ++i) out *= i;
  return out;
}

inline Parts conjugate(const Parts& p) {
  Parts out;
  for (int j = 1; j <= (p.empty() ? 0 : p[0]); ++j) out.push_back(col_len(p, j));
  return out;
}

inline bool is_prime(std::int64_t m) {
  if (m < 2) return false;
  for (std::int64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) return false;
  }
  return true;
}

// Plain sieve of Eratosthenes.
inline std::vector<bool> sieve(std::int64_t bound) {
  std::vector<bool> s(static_cast<std::size_t>(bound) + 1, true);
  s[0] = false;
  if (bound >= 1) s[1] = false;
  for (std::int64_t i = 2; i * i <= bound; ++i) {
    if (!s[i]) continue;
    for (std::int64_t j = i * i; j <= bound; j += i) s[j] = false;
  }
  return s;
}

inline bool contains(const Parts& outer, const Parts& inner) {
  if (inner.size() > outer.size()) return false;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] > outer[i]) return false;
  }
  return true;
}

// Odd: (2k+1) k!^2. Even: (2k+1) (k+1)^2 (k-1)!^2.
inline BigInt unit_target(int k, bool odd) {
  if (odd) return BigInt(2 * k + 1) * factorial(k) * factorial(k);
  return BigInt(2 * k + 1) * (k + 1) * (k + 1) * factorial(k - 1) * factorial(k - 1);
}

}  // namespace oracle
