#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hookcert {

/// Which witness family a computation refers to. Odd weight 2k+1 uses the
/// hook (k+1, 1^k); even weight 2k+2 uses (k+1, 2, 1^(k-1)).
enum class Parity : std::uint8_t { odd, even };

std::string_view to_string(Parity parity);
Parity parse_parity(std::string_view text);

/// Weight of the witness partition for a given k: 2k+1 or 2k+2.
constexpr int witness_weight(int k, Parity parity) {
  return parity == Parity::odd ? 2 * k + 1 : 2 * k + 2;
}

/// A box of a Young diagram in matrix convention, 1-based.
struct BoxPosition {
  int row = 1;
  int col = 1;
  friend bool operator==(const BoxPosition&, const BoxPosition&) = default;
};

/// An integer partition stored as its weakly decreasing positive rows.
///
/// The empty partition is the unique partition of 0. Values are immutable
/// once constructed and are freely shareable between threads.
class Partition {
 public:
  Partition() = default;

  /// Validates that `parts` is weakly decreasing with every part >= 1.
  /// Throws std::invalid_argument otherwise.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  /// Builds a partition from (value, multiplicity) runs, e.g. {{k+1,1},{1,k}}.
  /// Runs with multiplicity 0 are ignored.
  static Partition from_runs(std::initializer_list<std::pair<int, int>> runs);

  /// Parses the textual form "[3,1,1]" (brackets optional, "[]" is empty).
  static Partition parse(std::string_view text);

  /// Skips validation; the caller guarantees the invariant.
  static Partition trusted(std::vector<int> parts) {
    Partition p;
    p.parts_ = std::move(parts);
    return p;
  }

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vector() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int weight() const;

  /// Row length for a 1-based row index; 0 past the last row.
  int row(int index) const {
    return index >= 1 && index <= length() ? parts_[index - 1] : 0;
  }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on parts; the enumerators emit in descending order.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

bool is_partition(std::span<const int> parts);

Partition conjugate(const Partition& lambda);
/// Conjugate of raw weakly decreasing parts, written into `out`.
void conjugate_into(std::span<const int> parts, std::vector<int>& out);

bool is_self_conjugate(const Partition& lambda);

/// Arm + leg + 1 of box `box`. Throws std::out_of_range for boxes outside
/// the diagram.
int hook_length(const Partition& lambda, BoxPosition box);

/// Hook lengths of every box, in row-major order.
std::vector<int> hook_multiset(const Partition& lambda);

/// Calls `visit(hook)` for every box of the diagram given its rows and
/// columns (the conjugate). Hot path for the enumerators.
template <typename Visitor>
inline void for_each_hook(std::span<const int> rows, std::span<const int> cols,
                          Visitor&& visit) {
  const int length = static_cast<int>(rows.size());
  for (int i = 0; i < length; ++i) {
    const int base = rows[i] - i;
    for (int j = 0; j < rows[i]; ++j) {
      visit(base - j + cols[j] - 1);
    }
  }
}

/// True iff `inner` fits inside `outer`: no more rows, each row no longer.
bool contains(const Partition& outer, const Partition& inner);
bool contains(std::span<const int> outer, std::span<const int> inner);

/// (k+1, 1^k) for odd, (k+1, 2, 1^(k-1)) for even. Requires k >= 2.
Partition witness_partition(int k, Parity parity);

}  // namespace hookcert
