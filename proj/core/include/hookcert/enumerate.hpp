#pragma once

#include <cstddef>
#include <iterator>
#include <span>
#include <vector>

#include "hookcert/partition.hpp"

namespace hookcert {

/// Largest n the unrestricted enumerator accepts without an explicit
/// override; p(90) is about 5.7e7.
inline constexpr int kNaiveWeightGuard = 90;

namespace detail {

/// Input iterator adaptor for the pull-based streams below. Dereferencing
/// yields a view of the current parts that is invalidated by increment.
template <typename Stream>
class StreamIterator {
 public:
  using value_type = std::span<const int>;
  using difference_type = std::ptrdiff_t;

  StreamIterator() = default;
  explicit StreamIterator(Stream* stream) : stream_(stream) {
    if (stream_ && !stream_->next()) stream_ = nullptr;
  }
  std::span<const int> operator*() const { return stream_->current(); }
  StreamIterator& operator++() {
    if (!stream_->next()) stream_ = nullptr;
    return *this;
  }
  void operator++(int) { ++*this; }
  friend bool operator==(const StreamIterator& it, std::default_sentinel_t) {
    return it.stream_ == nullptr;
  }

 private:
  Stream* stream_ = nullptr;
};

}  // namespace detail

/// Every partition of n exactly once, in descending lexicographic order.
///
///   AllPartitions all(5);
///   while (all.next()) use(all.current());
class AllPartitions {
 public:
  explicit AllPartitions(int n, bool allow_large = false);

  /// Advances; false once exhausted. The first call yields the first partition.
  bool next();
  std::span<const int> current() const { return parts_; }
  void restart();

  auto begin() {
    restart();
    return detail::StreamIterator<AllPartitions>(this);
  }
  std::default_sentinel_t end() const { return {}; }

 private:
  int n_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> parts_;
};

/// Every lambda |- n with lower ⊆ lambda ⊆ upper, in descending lexicographic
/// order. Rows are chosen one at a time within [lower_i, min(upper_i, row
/// above)], keeping the remaining weight attainable by the rows below, so no
/// branch of the search dead-ends.
class PartitionsBetween {
 public:
  /// Throws std::invalid_argument unless upper contains lower and
  /// |lower| <= n <= |upper|.
  PartitionsBetween(int n, std::span<const int> lower, std::span<const int> upper);
  PartitionsBetween(int n, const Partition& lower, const Partition& upper)
      : PartitionsBetween(n, lower.parts(), upper.parts()) {}

  /// Non-throwing feasibility test for the constructor's preconditions.
  static bool feasible(int n, std::span<const int> lower, std::span<const int> upper);

  bool next();
  std::span<const int> current() const { return {rows_.data(), static_cast<std::size_t>(depth_)}; }
  void restart();

  auto begin() {
    restart();
    return detail::StreamIterator<PartitionsBetween>(this);
  }
  std::default_sentinel_t end() const { return {}; }

 private:
  // Sum over rows j >= i of min(upper_j, cap).
  int max_suffix(int i, int cap) const;
  // Greedy completion of rows [from, ...) given `rem` boxes left.
  void fill(int from, int rem);

  int n_;
  int rows_cap_ = 0;
  std::vector<int> lo_;
  std::vector<int> up_;
  std::vector<int> lo_suffix_;  // size rows_cap_ + 1
  std::vector<int> up_suffix_;  // size rows_cap_ + 1
  std::vector<int> rows_;
  std::vector<int> rem_before_;
  int depth_ = 0;
  bool started_ = false;
  bool done_ = false;
};

/// Every lambda |- n whose corner box (1,1) has hook length h, i.e.
/// lambda_1 + lambda*_1 = h + 1, with the other n - h boxes forming a
/// sub-diagram anchored at (2,2). Descending lexicographic order.
class PartitionsWithCornerHook {
 public:
  PartitionsWithCornerHook(int n, int h);

  bool next();
  std::span<const int> current() const { return parts_; }
  void restart();

  auto begin() {
    restart();
    return detail::StreamIterator<PartitionsWithCornerHook>(this);
  }
  std::default_sentinel_t end() const { return {}; }

 private:
  bool open_inner();

  int n_;
  int h_;
  int first_row_ = 0;
  std::vector<int> box_;
  std::vector<int> parts_;
  std::vector<int> empty_;
  PartitionsBetween inner_;
  bool inner_open_ = false;
  bool done_ = false;
};

}  // namespace hookcert
