#include "hookcert/enumerate.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hookcert {

AllPartitions::AllPartitions(int n, bool allow_large) : n_(n) {
  if (n < 0) throw std::invalid_argument("cannot partition a negative number");
  if (n > kNaiveWeightGuard && !allow_large) {
    throw std::invalid_argument("n=" + std::to_string(n) + " exceeds the enumeration guard of " +
                                std::to_string(kNaiveWeightGuard));
  }
}

void AllPartitions::restart() {
  started_ = false;
  done_ = false;
  parts_.clear();
}

bool AllPartitions::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    parts_.clear();
    if (n_ > 0) parts_.push_back(n_);
    return true;
  }
  int rem = 0;
  while (!parts_.empty() && parts_.back() == 1) {
    parts_.pop_back();
    ++rem;
  }
  if (parts_.empty()) {
    done_ = true;
    return false;
  }
  const int v = --parts_.back();
  ++rem;
  while (rem > v) {
    parts_.push_back(v);
    rem -= v;
  }
  if (rem > 0) parts_.push_back(rem);
  return true;
}

namespace {

int weight_of(std::span<const int> parts) { return std::accumulate(parts.begin(), parts.end(), 0); }

}  // namespace

bool PartitionsBetween::feasible(int n, std::span<const int> lower, std::span<const int> upper) {
  if (n < 0 || !is_partition(lower) || !is_partition(upper)) return false;
  if (!contains(upper, lower)) return false;
  const int lw = weight_of(lower);
  const int uw = weight_of(upper);
  return lw <= n && n <= uw;
}

PartitionsBetween::PartitionsBetween(int n, std::span<const int> lower, std::span<const int> upper)
    : n_(n) {
  if (!feasible(n, lower, upper)) {
    throw std::invalid_argument("partition bounds are inconsistent for n=" + std::to_string(n));
  }
  rows_cap_ = std::min(static_cast<int>(upper.size()), n);
  lo_.assign(static_cast<std::size_t>(rows_cap_), 0);
  up_.assign(static_cast<std::size_t>(rows_cap_), 0);
  for (int i = 0; i < rows_cap_; ++i) {
    up_[i] = std::min(upper[i], n);
    if (i < static_cast<int>(lower.size())) lo_[i] = lower[i];
  }
  lo_suffix_.assign(static_cast<std::size_t>(rows_cap_) + 1, 0);
  up_suffix_.assign(static_cast<std::size_t>(rows_cap_) + 1, 0);
  for (int i = rows_cap_ - 1; i >= 0; --i) {
    lo_suffix_[i] = lo_suffix_[i + 1] + lo_[i];
    up_suffix_[i] = up_suffix_[i + 1] + up_[i];
  }
  rows_.assign(static_cast<std::size_t>(rows_cap_), 0);
  rem_before_.assign(static_cast<std::size_t>(rows_cap_), 0);
}

void PartitionsBetween::restart() {
  started_ = false;
  done_ = false;
  depth_ = 0;
}

int PartitionsBetween::max_suffix(int i, int cap) const {
  // up_ is weakly decreasing: rows [i, t) are capped, rows [t, end) are not.
  auto first_small = std::lower_bound(up_.begin() + i, up_.end(), cap, std::greater<>{});
  const int t = static_cast<int>(first_small - up_.begin());
  return cap * (t - i) + up_suffix_[t];
}

void PartitionsBetween::fill(int from, int rem) {
  int d = from;
  while (rem > 0) {
    const int cap = d == 0 ? INT_MAX : rows_[d - 1];
    const int v = std::min({up_[d], cap, rem - lo_suffix_[d + 1]});
    assert(v >= lo_[d] && v >= 1);
    assert(v + max_suffix(d + 1, v) >= rem);
    rem_before_[d] = rem;
    rows_[d] = v;
    rem -= v;
    ++d;
  }
  depth_ = d;
}

bool PartitionsBetween::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    fill(0, n_);
    return true;
  }
  for (int d = depth_ - 1; d >= 0; --d) {
    const int smaller = rows_[d] - 1;
    if (smaller < std::max(lo_[d], 1)) continue;
    const int rem = rem_before_[d];
    if (smaller + max_suffix(d + 1, smaller) < rem) continue;
    rows_[d] = smaller;
    fill(d + 1, rem - smaller);
    return true;
  }
  done_ = true;
  return false;
}

PartitionsWithCornerHook::PartitionsWithCornerHook(int n, int h)
    : n_(n), h_(h), inner_(0, std::span<const int>{}, std::span<const int>{}) {
  if (h < 1 || h > n) {
    throw std::invalid_argument("corner hook " + std::to_string(h) + " impossible for n=" +
                                std::to_string(n));
  }
  restart();
}

void PartitionsWithCornerHook::restart() {
  first_row_ = h_ + 1;
  inner_open_ = false;
  done_ = false;
}

bool PartitionsWithCornerHook::open_inner() {
  const int cols = first_row_ - 1;
  const int rows = h_ + 1 - first_row_ - 1;
  const int rest = n_ - h_;
  if (rest > cols * rows) return false;
  box_.assign(static_cast<std::size_t>(rows), cols);
  if (rest == 0) box_.clear();
  inner_ = PartitionsBetween(rest, empty_, box_);
  inner_open_ = true;
  return true;
}

bool PartitionsWithCornerHook::next() {
  while (!done_) {
    if (inner_open_ && inner_.next()) {
      const auto inner = inner_.current();
      const int column = h_ + 1 - first_row_;
      parts_.assign(static_cast<std::size_t>(column), 1);
      parts_[0] = first_row_;
      for (std::size_t i = 0; i < inner.size(); ++i) parts_[i + 1] += inner[i];
      return true;
    }
    inner_open_ = false;
    --first_row_;
    if (first_row_ < 1) {
      done_ = true;
      break;
    }
    open_inner();
  }
  return false;
}

}  // namespace hookcert
