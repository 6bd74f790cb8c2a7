#include "hookcert/configurations.hpp"

#include <algorithm>

#include "hookcert/enumerate.hpp"

namespace hookcert {

namespace {

int floor_div(int a, int b) {
  const int q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

// Expands a template pair and streams the partitions between them.
class Between {
 public:
  Between(int weight, SearchTally& tally, const PartitionVisitor& visit)
      : weight_(weight), tally_(tally), visit_(visit) {}

  void operator()(std::initializer_list<Run> lower, std::initializer_list<Run> upper) {
    if (!expand_template(lower, weight_, lo_) || !expand_template(upper, weight_, up_)) return;
    if (!PartitionsBetween::feasible(weight_, lo_, up_)) return;
    ++tally_.templates;
    PartitionsBetween stream(weight_, lo_, up_);
    while (stream.next()) {
      ++tally_.partitions;
      visit_(stream.current());
    }
  }

 private:
  int weight_;
  SearchTally& tally_;
  const PartitionVisitor& visit_;
  std::vector<int> lo_;
  std::vector<int> up_;
};

}  // namespace

bool expand_template(std::initializer_list<Run> runs, int max_rows, std::vector<int>& out) {
  out.clear();
  bool ended = false;
  for (const Run& run : runs) {
    if (run.count < 0 || run.value < 0) return false;
    if (run.count == 0) continue;
    if (run.value == 0) {
      ended = true;
      continue;
    }
    if (ended || (!out.empty() && out.back() < run.value)) return false;
    const int room = max_rows - static_cast<int>(out.size());
    out.insert(out.end(), static_cast<std::size_t>(std::min(run.count, std::max(room, 0))),
               run.value);
  }
  return true;
}

SearchTally enumerate_corner_pair(int n, int big, int h, const PartitionVisitor& visit) {
  SearchTally tally;
  Between between(n, tally, visit);
  // The leg below (1, c+1) and the arm right of (d+1, 1) share the box
  // (d+1, c+1) when b >= c, so a + b may reach n - big + 1.
  for (int a = 0; a <= n - big + 1; ++a) {
    for (int b = 0; b <= n - big + 1 - a; ++b) {
      for (int c = 1; c <= n - 2 * h + 1; ++c) {
        ++tally.tuples;
        const int d = big - 2 * h + 1 - c + a + b;
        if (d < 1 || d > c) continue;
        if ((b >= c) != (a >= d)) continue;
        if (big + b * d + std::max(a * (c - b), 0) + std::max(c * (a - d), 0) > n) continue;
        const int r1 = c + h - a;
        if (b < c) {
          between({{r1, 1}, {c + 1, a}, {b + 1, d - a}, {1, h - b - 1}},
                  {{r1, a + 1}, {c, d - a - 1}, {b + 1, h - b}});
        } else {
          between({{r1, 1}, {b + 1, d}, {c + 1, a - d}, {1, h - b - 1 - (a - d)}},
                  {{r1, d}, {b + 1, a - d + 1}, {c, h - b - 1 - (a - d)}});
        }
      }
    }
  }
  return tally;
}

SearchTally enumerate_two_rows(int n, int P, int Q, const PartitionVisitor& visit) {
  SearchTally tally;
  Between between(n, tally, visit);
  const int gap = P - Q;
  const int x_max = floor_div(n + 2 - 2 * P, 2);
  const int r2_min = Q + 2 * P - n + 1;
  auto r1_lo = [&](int u) { return std::max(1, u + Q + 2 * P - n - 2); };
  auto r1_hi = [&](int u) { return u + Q - 1; };

  // x < z < y < u
  for (int x = 1; x <= x_max; ++x) {
    for (int z = x + 1; z <= x + gap; ++z) {
      for (int y = z + 1; y <= n + 3 - 2 * P - x; ++y) {
        for (int u = y + 1; u <= y + gap; ++u) {
          for (int r1 = r1_lo(u); r1 <= r1_hi(u); ++r1) {
            for (int r2 = std::max(1, r2_min); r2 <= r1 - y + z - gap + 1; ++r2) {
              ++tally.tuples;
              const int a = x + P - 1 - r2, b = z + Q - 1 - r2;
              const int c = y + P - 1 - r1, d = u + Q - 1 - r1;
              if (a < 0 || b < 0 || c < 0 || d < 0) continue;
              if (r1 + r2 + (d - 1) * u + (c - d) * y + (b - c + 1) * z + (a - b) * x > n) continue;
              between({{r1, 1}, {r2, 1}, {u, d - 1}, {y, c - d}, {z, b - c + 1}, {x, a - b}},
                      {{r1, 1}, {r2, d}, {u - 1, c - d}, {y - 1, b - c + 1}, {z - 1, a - b},
                       {x - 1, n}});
            }
          }
        }
      }
    }
  }

  // x < y = z < u
  for (int x = 1; x <= x_max; ++x) {
    for (int y = x + 1; y <= x + gap; ++y) {
      for (int u = y + 1; u <= y + gap; ++u) {
        for (int r1 = r1_lo(u); r1 <= r1_hi(u); ++r1) {
          ++tally.tuples;
          const int r2 = r1 + 1 - gap;
          if (r2 < 1) continue;
          const int a = x + P - 1 - r2;
          const int c = y + P - 1 - r1, d = u + Q - 1 - r1;
          if (a < 0 || c < 0 || d < 0) continue;
          if (r1 + r2 + (d - 1) * u + (c - d) * y + (a - c + 1) * x > n) continue;
          between({{r1, 1}, {r2, 1}, {u, d - 1}, {y, c - d}, {x, a - c + 1}},
                  {{r1, 1}, {r2, d}, {u - 1, c - d}, {y - 1, a - c + 1}, {x - 1, n}});
        }
      }
    }
  }

  // x < y < z < u
  for (int x = 1; x <= x_max; ++x) {
    for (int y = x + 1; y <= x + gap - 1; ++y) {
      for (int z = y + 1; z <= x + gap; ++z) {
        for (int u = z + 1; u <= y + gap; ++u) {
          for (int r1 = r1_lo(u); r1 <= r1_hi(u); ++r1) {
            const int lo = std::max({1, r2_min, r1 - y + z - gap + 1});
            const int hi = std::min(r1 - y + x + 1, r1 - u + z + 1);
            for (int r2 = lo; r2 <= hi; ++r2) {
              ++tally.tuples;
              const int a = x + P - 1 - r2, b = z + Q - 1 - r2;
              const int c = y + P - 1 - r1, d = u + Q - 1 - r1;
              if (a < 0 || b < 0 || c < 0 || d < 0) continue;
              if (r1 + r2 + (d - 1) * u + (b - d + 1) * z + (c - b - 1) * y + (a - c + 1) * x > n) {
                continue;
              }
              between({{r1, 1}, {r2, 1}, {u, d - 1}, {z, b - d + 1}, {y, c - b - 1}, {x, a - c + 1}},
                      {{r1, 1}, {r2, d}, {u - 1, b - d + 1}, {z - 1, c - b - 1}, {y - 1, a - c + 1},
                       {x - 1, n}});
            }
          }
        }
      }
    }
  }
  return tally;
}

SearchTally enumerate_row_column(int n, int P, int Q, RowColumnCase which,
                                 std::span<const int> corner_hooks, const PartitionVisitor& visit) {
  SearchTally tally;
  Between between(n, tally, visit);
  const int gap = P - Q;
  const int x_max = floor_div(n + 2 - 2 * P, 2);
  const int d_max0 = floor_div(n - 2 * P, 2);
  const int spare = n + 1 - 2 * P;
  const int spare_q = n - 2 * Q;
  auto corner_ok = [&](int r1, int c1) {
    return corner_hooks.empty() ||
           std::find(corner_hooks.begin(), corner_hooks.end(), r1 + c1 - 1) != corner_hooks.end();
  };

  switch (which) {
    case RowColumnCase::zero:
      for (int d = 0; d <= d_max0; ++d) {
        for (int c = d; c <= d + gap - 1; ++c) {
          for (int x = c + 1; x <= x_max; ++x) {
            for (int y = x + 1; y <= x + gap; ++y) {
              for (int c1 = x + P - c; c1 <= P - c + floor_div(spare, c + 1); ++c1) {
                for (int r1 = 2 * P - c + x - c1 + 1; r1 <= y + Q; ++r1) {
                  ++tally.tuples;
                  if (!corner_ok(r1, c1)) continue;
                  const int a = x + P - r1, b = y + Q - r1;
                  const int z = c1 - P + c, u = c1 - Q + d;
                  if (r1 + c1 - 1 + b * y + (a - b) * x + (z - a) * c + (u - z) * d > n) continue;
                  between({{r1, 1}, {y + 1, b}, {x + 1, a - b}, {c + 1, z - a}, {d + 1, u - z},
                           {1, c1 - u - 1}},
                          {{r1, b + 1}, {y, a - b}, {x, z - a - 1}, {c + 1, u - z}, {d + 1, c1 - u}});
                }
              }
            }
          }
        }
      }
      break;

    case RowColumnCase::one:
      for (int d = 0; d <= d_max0; ++d) {
        for (int x = d + 1; x <= x_max; ++x) {
          for (int c = x; c <= d + gap - 1; ++c) {
            for (int y = c + 1; y <= x + gap; ++y) {
              for (int c1 = x + P - c; c1 <= P - c + floor_div(spare, x); ++c1) {
                const int lo = std::max(P + Q + y - c - c1, P + Q + x - d - c1) + 1;
                const int hi = std::min(2 * P - c + x - c1, y + Q);
                for (int r1 = lo; r1 <= hi; ++r1) {
                  ++tally.tuples;
                  if (!corner_ok(r1, c1)) continue;
                  const int a = x + P - r1, b = y + Q - r1;
                  const int z = c1 - P + c, u = c1 - Q + d;
                  if (r1 + c1 - 1 + b * y + (z - b) * c + (a - z) * x + (u - a) * d > n) continue;
                  between({{r1, 1}, {y + 1, b}, {c + 1, z - b}, {x + 1, a - z}, {d + 1, u - a},
                           {1, c1 - u - 1}},
                          {{r1, b + 1}, {y, z - b - 1}, {c + 1, a - z + 1}, {x, u - a - 1},
                           {d + 1, c1 - u}});
                }
              }
            }
          }
        }
      }
      break;

    case RowColumnCase::three:
      for (int x = 1; x <= x_max; ++x) {
        for (int d = x; d <= x + gap - 1; ++d) {
          for (int y = d + 1; y <= x + gap; ++y) {
            for (int c = y; c <= d + gap - 1; ++c) {
              for (int c1 = x + P - c; c1 <= P - c + floor_div(spare, x); ++c1) {
                const int lo = 2 * Q - d + y - c1 + 1;
                const int hi = std::min(P + Q + y - c - c1, P + Q + x - d - c1);
                for (int r1 = lo; r1 <= hi; ++r1) {
                  ++tally.tuples;
                  if (!corner_ok(r1, c1)) continue;
                  const int a = x + P - r1, b = y + Q - r1;
                  const int z = c1 - P + c, u = c1 - Q + d;
                  if (r1 + c1 - 1 + z * c + (b - z) * y + (u - b) * d + (a - u) * x > n) continue;
                  between({{r1, 1}, {c + 1, z}, {y + 1, b - z}, {d + 1, u - b}, {x + 1, a - u},
                           {1, c1 - a - 1}},
                          {{r1, z}, {c + 1, b - z + 2}, {y, u - b - 1}, {d + 1, a - u + 1},
                           {x, c1 - a - 1}});
                }
              }
            }
          }
        }
      }
      break;

    case RowColumnCase::four:
      for (int x = 1; x <= x_max; ++x) {
        for (int y = x + 1; y <= x + gap; ++y) {
          for (int d = y; d <= spare; ++d) {
            for (int c = d; c <= d + gap - 1; ++c) {
              for (int c1 = x + P - c; c1 <= P - c + floor_div(spare, x); ++c1) {
                const int lo = x + P - floor_div(spare_q, x);
                const int hi = 2 * Q - d + y - c1;
                for (int r1 = lo; r1 <= hi; ++r1) {
                  ++tally.tuples;
                  if (!corner_ok(r1, c1)) continue;
                  const int a = x + P - r1, b = y + Q - r1;
                  const int z = c1 - P + c, u = c1 - Q + d;
                  if (r1 + c1 - 1 + z * c + (u - z) * d + (b - u) * y + (a - b) * x > n) continue;
                  between({{r1, 1}, {c + 1, z}, {d + 1, u - z}, {y + 1, b - u}, {x + 1, a - b},
                           {1, c1 - a - 1}},
                          {{r1, z}, {c + 1, u - z}, {d + 1, b - u + 1}, {y, a - b}, {x, c1 - a - 1}});
                }
              }
            }
          }
        }
      }
      break;
  }
  return tally;
}

SearchTally enumerate_row_column(int n, int P, int Q, std::span<const int> corner_hooks,
                                 const PartitionVisitor& visit) {
  SearchTally total;
  for (const RowColumnCase which : kRowColumnCases) {
    total += enumerate_row_column(n, P, Q, which, corner_hooks, visit);
  }
  return total;
}

}  // namespace hookcert
