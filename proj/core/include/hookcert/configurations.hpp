#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace hookcert {

// Tuple searches behind the pruned pipeline. Each engine walks a tuple space
// describing where two large hooks sit in a diagram of weight n, keeps the
// tuples passing a box-count filter, and hands every partition between the
// tuple's lower and upper template to the visitor. Engines are parameterized
// by the weight and the hook lengths, so the same code serves both parities
// and the r-substituted prime pairs.

using PartitionVisitor = std::function<void(std::span<const int>)>;

struct SearchTally {
  std::uint64_t tuples = 0;      ///< tuples reached inside the loop nest
  std::uint64_t templates = 0;   ///< tuples whose templates bound a non-empty region
  std::uint64_t partitions = 0;  ///< partitions handed to the visitor

  SearchTally& operator+=(const SearchTally& other) {
    tuples += other.tuples;
    templates += other.templates;
    partitions += other.partitions;
    return *this;
  }
};

/// One run v^count of a bound template.
struct Run {
  int value;
  int count;
};

/// Expands runs into parts, at most `max_rows` of them. Returns false when a
/// count is negative, a value is negative, or the result is not weakly
/// decreasing. Runs of value 0 end the partition.
bool expand_template(std::initializer_list<Run> runs, int max_rows, std::vector<int>& out);

/// Corner box (1,1) has hook `corner`; a box of hook `side` sits in row 1
/// (column >= 2) and another in column 1 (row >= 2). Uses the convention that
/// the row-1 side box is at least as far out as the column-1 one, so every
/// such diagram is reached up to conjugation.
SearchTally enumerate_corner_pair(int weight, int corner, int side, const PartitionVisitor& visit);

/// Hooks `larger` > `smaller` each occur in row 1 and in row 2 (three
/// sub-cases by column order). Column configurations follow by conjugation.
SearchTally enumerate_two_rows(int weight, int larger, int smaller, const PartitionVisitor& visit);

/// Which of the row-column sub-cases to run; case 2 is empty by argument.
enum class RowColumnCase : int { zero = 0, one = 1, three = 3, four = 4 };

inline constexpr RowColumnCase kRowColumnCases[] = {RowColumnCase::zero, RowColumnCase::one,
                                                    RowColumnCase::three, RowColumnCase::four};

/// Hooks `larger` > `smaller` each occur in row 1 (off the corner) and in
/// column 1 (off the corner), with the larger-hook row box at least as far
/// out as its column twin. When `corner_hooks` is non-empty only diagrams
/// whose (1,1) hook lies in it are produced.
SearchTally enumerate_row_column(int weight, int larger, int smaller, RowColumnCase which,
                                 std::span<const int> corner_hooks, const PartitionVisitor& visit);

/// Runs every row-column sub-case.
SearchTally enumerate_row_column(int weight, int larger, int smaller,
                                 std::span<const int> corner_hooks, const PartitionVisitor& visit);

}  // namespace hookcert
