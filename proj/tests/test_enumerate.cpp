#include <gtest/gtest.h>

#include "enumeration_cases.hpp"
#include "hookcert/enumerate.hpp"
#include "hookcert/partition.hpp"
#include "oracles.hpp"

using namespace hookcert;

TEST(AllPartitions, Examples) {
  AllPartitions five(5);
  EXPECT_EQ(cases::collect(five).size(), 7U);
  AllPartitions zero(0);
  ASSERT_TRUE(zero.next());
  EXPECT_TRUE(zero.current().empty());
  EXPECT_FALSE(zero.next());
  EXPECT_THROW(AllPartitions(-1), std::invalid_argument);
  EXPECT_THROW(AllPartitions(kNaiveWeightGuard + 1), std::invalid_argument);
  EXPECT_NO_THROW(AllPartitions(kNaiveWeightGuard + 1, true));
}

TEST(AllPartitions, CountsMatchEulerRecurrence) {
  const auto p = oracle::euler_counts(60);
  EXPECT_EQ(p[50], 204226U);
  for (int n = 0; n <= 60; ++n) {
    AllPartitions all(n);
    std::uint64_t count = 0;
    while (all.next()) ++count;
    EXPECT_EQ(count, p[n]) << n;
  }
}

TEST(AllPartitions, StreamsValidDistinctPartitions) {
  for (int n = 1; n <= 18; ++n) {
    AllPartitions all(n);
    int dup = 0;
    const auto got = cases::collect(all, &dup);
    EXPECT_EQ(dup, 0);
    const auto want = oracle::partitions(n);
    EXPECT_EQ(got, std::set<oracle::Parts>(want.begin(), want.end()));
  }
}

TEST(AllPartitions, RestartAndRangeFor) {
  AllPartitions six(6);
  int first = 0;
  for (auto p : six) first += is_partition(p) ? 1 : 0;
  int second = 0;
  for (auto p : six) second += static_cast<int>(p.size()) > 0 ? 1 : 0;
  EXPECT_EQ(first, 11);
  EXPECT_EQ(second, 11);
}

TEST(PartitionsBetween, Example) {
  PartitionsBetween s(5, Partition{2, 1}, Partition{3, 3, 3});
  EXPECT_EQ(cases::collect(s), (std::set<oracle::Parts>{{3, 2}, {2, 2, 1}, {3, 1, 1}}));
}

TEST(PartitionsBetween, EndpointsAreSingletons) {
  const Partition lower{3, 2, 1};
  const Partition upper{5, 4, 4, 1};
  PartitionsBetween at_lower(lower.weight(), lower, upper);
  EXPECT_EQ(cases::collect(at_lower), std::set<oracle::Parts>{lower.vector()});
  PartitionsBetween at_upper(upper.weight(), lower, upper);
  EXPECT_EQ(cases::collect(at_upper), std::set<oracle::Parts>{upper.vector()});
}

TEST(PartitionsBetween, InconsistentBounds) {
  EXPECT_FALSE(PartitionsBetween::feasible(5, std::vector<int>{3}, std::vector<int>{2, 2, 2}));
  EXPECT_FALSE(PartitionsBetween::feasible(9, std::vector<int>{1}, std::vector<int>{2, 2}));
  EXPECT_THROW(PartitionsBetween(9, Partition{1}, Partition{2, 2}), std::invalid_argument);
}

TEST(PartitionsBetween, MatchesBruteForceOnRandomBounds) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const auto b = cases::random_bound_pair(rng);
    PartitionsBetween s(b.n, b.lower, b.upper);
    int dup = 0;
    EXPECT_EQ(cases::collect(s, &dup), cases::brute_between(b));
    EXPECT_EQ(dup, 0);
  }
}

TEST(CornerHook, Examples) {
  PartitionsWithCornerHook five(6, 5);
  EXPECT_EQ(cases::collect(five), (std::set<oracle::Parts>{{4, 2}, {3, 2, 1}, {2, 2, 1, 1}}));
  // Every hook shape (a+1, 1^b) with a + b = 5; there are six of them.
  PartitionsWithCornerHook six(6, 6);
  EXPECT_EQ(cases::collect(six), (std::set<oracle::Parts>{{6},
                                                          {5, 1},
                                                          {4, 1, 1},
                                                          {3, 1, 1, 1},
                                                          {2, 1, 1, 1, 1},
                                                          {1, 1, 1, 1, 1, 1}}));
  EXPECT_THROW(PartitionsWithCornerHook(6, 7), std::invalid_argument);
}

TEST(CornerHook, EightyFourWithHookEightyThree) {
  PartitionsWithCornerHook s(84, 83);
  int count = 0;
  while (s.next()) {
    const oracle::Parts p(s.current().begin(), s.current().end());
    ++count;
    ASSERT_GE(p.size(), 2U);
    EXPECT_EQ(p[1], 2);
    EXPECT_EQ(static_cast<int>(p.size()) + p[0] - 1, 83);
    for (std::size_t i = 2; i < p.size(); ++i) EXPECT_EQ(p[i], 1);
  }
  EXPECT_EQ(count, 81);
}

TEST(CornerHook, MatchesBruteForce) {
  for (int n = 1; n <= 20; ++n) {
    for (int h = 1; h <= n; ++h) {
      std::set<oracle::Parts> want;
      for (const auto& p : oracle::partitions(n)) {
        if (oracle::hook(p, 1, 1) == h) want.insert(p);
      }
      PartitionsWithCornerHook s(n, h);
      int dup = 0;
      EXPECT_EQ(cases::collect(s, &dup), want) << n << "," << h;
      EXPECT_EQ(dup, 0);
    }
  }
}
