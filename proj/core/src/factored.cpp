#include "hookcert/factored.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hookcert {

FactoredInteger FactoredInteger::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end());
  FactoredInteger out;
  for (const auto& [prime, e] : terms) {
    if (e < 0) throw std::domain_error("negative exponent in factored integer");
    if (e == 0) continue;
    if (prime < 2) throw std::domain_error("factor key must be prime");
    if (!out.terms_.empty() && out.terms_.back().first == prime) {
      out.terms_.back().second += e;
    } else {
      out.terms_.emplace_back(prime, e);
    }
  }
  return out;
}

int FactoredInteger::exponent(std::int64_t prime) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{prime, 0});
  return it != terms_.end() && it->first == prime ? it->second : 0;
}

FactoredInteger& FactoredInteger::operator*=(const FactoredInteger& other) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      merged.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

FactoredInteger FactoredInteger::pow(int e) const {
  if (e < 0) throw std::domain_error("negative power");
  FactoredInteger out;
  if (e == 0) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.second *= e;
  return out;
}

FactoredInteger FactoredInteger::shifted(std::int64_t prime, int delta) const {
  const int e = exponent(prime) + delta;
  if (e < 0) throw std::domain_error("division leaves a fractional value");
  std::vector<Term> terms = terms_;
  auto it = std::lower_bound(terms.begin(), terms.end(), Term{prime, 0});
  if (it != terms.end() && it->first == prime) {
    if (e == 0) {
      terms.erase(it);
    } else {
      it->second = e;
    }
  } else if (e > 0) {
    terms.insert(it, Term{prime, e});
  }
  FactoredInteger out;
  out.terms_ = std::move(terms);
  return out;
}

bool FactoredInteger::divides(const FactoredInteger& other) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return other.exponent(t.first) >= t.second; });
}

FactoredInteger FactoredInteger::exact_divide(const FactoredInteger& divisor) const {
  if (!divisor.divides(*this)) {
    throw std::domain_error(divisor.to_string() + " does not divide " + to_string());
  }
  std::vector<Term> terms;
  for (const auto& [prime, e] : terms_) {
    const int rest = e - divisor.exponent(prime);
    if (rest > 0) terms.emplace_back(prime, rest);
  }
  FactoredInteger out;
  out.terms_ = std::move(terms);
  return out;
}

BigInt FactoredInteger::value() const {
  BigInt v = 1;
  for (const auto& [prime, e] : terms_) {
    v *= boost::multiprecision::pow(BigInt(prime), static_cast<unsigned>(e));
  }
  return v;
}

std::string FactoredInteger::to_string() const {
  if (terms_.empty()) return "1";
  std::string out;
  for (const auto& [prime, e] : terms_) {
    if (!out.empty()) out += "·";
    out += std::to_string(prime);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

FactoredInteger factor_small(std::int64_t m, const PrimeTables& tables) {
  if (m <= 0) throw std::invalid_argument("factor_small needs m >= 1");
  if (m > tables.bound()) {
    throw std::out_of_range(std::to_string(m) + " exceeds prime table bound " +
                            std::to_string(tables.bound()));
  }
  return FactoredInteger::from_terms(tables.factor(m));
}

FactoredInteger factorial_factored(std::int64_t m, const PrimeTables& tables) {
  if (m < 0) throw std::invalid_argument("factorial of a negative number");
  if (m > tables.bound()) {
    throw std::out_of_range(std::to_string(m) + "! needs primes beyond the table bound");
  }
  std::vector<FactoredInteger::Term> terms;
  for (const std::uint32_t p : tables.primes()) {
    if (p > m) break;
    int e = 0;
    for (std::int64_t power = p; power <= m; power *= p) e += static_cast<int>(m / power);
    terms.emplace_back(p, e);
  }
  return FactoredInteger::from_terms(std::move(terms));
}

FactoredInteger hook_product_factored(const Partition& lambda, const PrimeTables& tables) {
  std::map<int, int> counts;
  for (const int h : hook_multiset(lambda)) ++counts[h];
  std::map<std::int64_t, int> exponents;
  for (const auto& [h, count] : counts) {
    for (const auto& [prime, e] : tables.factor(h)) exponents[prime] += e * count;
  }
  return FactoredInteger::from_terms({exponents.begin(), exponents.end()});
}

TargetSet targets(int k, Parity parity, const PrimeTables& tables) {
  if (k < 2) throw std::invalid_argument("targets need k >= 2");
  FactoredInteger unit = factor_small(2 * k + 1, tables);
  if (parity == Parity::odd) {
    unit *= factorial_factored(k, tables).pow(2);
  } else {
    unit *= factor_small(k + 1, tables).pow(2);
    unit *= factorial_factored(k - 1, tables).pow(2);
  }
  TargetSet set;
  if (unit.exponent(2) > 0) set.half = unit.shifted(2, -1);
  set.twice = unit.shifted(2, 1);
  set.unit = std::move(unit);
  return set;
}

Dimension dimension(const Partition& lambda, Group group, const PrimeTables& tables) {
  const FactoredInteger order = factorial_factored(lambda.weight(), tables);
  FactoredInteger hooks = hook_product_factored(lambda, tables);
  Dimension dim;
  if (group == Group::alternating && is_self_conjugate(lambda)) {
    hooks = hooks.shifted(2, 1);
    dim.multiplicity = 2;
  }
  dim.value = order.exact_divide(hooks);
  return dim;
}

}  // namespace hookcert
