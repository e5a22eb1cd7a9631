#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "lrsq/partition.hpp"

using namespace lrsq;

namespace {

// Euler's pentagonal recurrence, independent of the enumerator.
std::vector<long long> partition_numbers(int n_max) {
  std::vector<long long> p(static_cast<std::size_t>(n_max) + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    long long s = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const long long sign = (k % 2) ? 1 : -1;
      s += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) s += sign * p[static_cast<std::size_t>(n - g2)];
    }
    p[static_cast<std::size_t>(n)] = s;
  }
  return p;
}

// Counts partitions of n with at most l parts, each at most k, by DP.
long long bounded_count(int n, int l, int k) {
  if (n == 0) return 1;
  if (l == 0 || k == 0) return 0;
  long long s = 0;
  for (int first = 1; first <= std::min(n, k); ++first) s += bounded_count(n - first, l - 1, first);
  return s;
}

}  // namespace

TEST(Partition, CanonicalFormStripsZeros) {
  Partition p({3, 1, 0, 0});
  EXPECT_EQ(p.length(), 2u);
  EXPECT_EQ(p.size(), 4);
  EXPECT_EQ(p, Partition({3, 1}));
  EXPECT_EQ(p[5], 0);
  EXPECT_EQ(p.padded(4), (std::vector<int>{3, 1, 0, 0}));
}

TEST(Partition, RejectsBadParts) {
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, -1}), std::invalid_argument);
  EXPECT_EQ(Partition::from_unsorted({1, 3, 0, 2}), Partition({3, 2, 1}));
}

TEST(Partition, SmallEnumerations) {
  EXPECT_EQ(partitions_of(0), std::vector<Partition>{Partition{}});
  EXPECT_EQ(partitions_of(1), std::vector<Partition>{Partition({1})});
  const auto p4 = partitions_of(4);
  ASSERT_EQ(p4.size(), 5u);
  EXPECT_EQ(p4.front(), Partition({4}));
  EXPECT_EQ(p4.back(), Partition({1, 1, 1, 1}));
}

TEST(Partition, CountsMatchPentagonalRecurrence) {
  const auto p = partition_numbers(20);
  for (int n = 0; n <= 20; ++n) EXPECT_EQ(static_cast<long long>(partitions_of(n).size()), p[static_cast<std::size_t>(n)]) << n;
}

TEST(Partition, BoundedEnumerationCounts) {
  for (int n = 0; n <= 10; ++n)
    for (int l = 1; l <= 5; ++l)
      for (int k = 1; k <= 5; ++k) {
        const auto ps = partitions_of(n, l, k);
        EXPECT_EQ(static_cast<long long>(ps.size()), bounded_count(n, l, k));
        for (const auto& x : ps) {
          EXPECT_LE(static_cast<int>(x.length()), l);
          EXPECT_TRUE(x.empty() || x[0] <= k);
        }
      }
}

TEST(Partition, OrderIsReverseLexAndExtendsDominance) {
  for (int n = 1; n <= 9; ++n) {
    const auto ps = partitions_of(n);
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) EXPECT_GT(ps[i].parts(), ps[i + 1].parts());
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j) EXPECT_FALSE(dominates(ps[j], ps[i])) << ps[j] << " " << ps[i];
  }
}

TEST(Partition, DominanceIsAPartialOrder) {
  const auto ps = partitions_of(6);
  for (const auto& a : ps) {
    EXPECT_TRUE(dominates(a, a));
    for (const auto& b : ps) {
      if (dominates(a, b) && dominates(b, a)) {
        EXPECT_EQ(a, b);
      }
      // conjugation reverses dominance
      EXPECT_EQ(dominates(a, b), dominates(b.conjugate(), a.conjugate()));
    }
  }
}

TEST(Partition, ConjugateIsAnInvolution) {
  EXPECT_EQ(Partition({3, 1}).conjugate(), Partition({2, 1, 1}));
  for (int n = 0; n <= 10; ++n)
    for (const auto& p : partitions_of(n)) {
      EXPECT_EQ(p.conjugate().conjugate(), p);
      EXPECT_EQ(p.conjugate().size(), n);
    }
}

TEST(Partition, TypeVectors) {
  auto tv = type_vector(Partition({3, 1, 1}));
  EXPECT_EQ(tv.at(1), 2);
  EXPECT_EQ(tv.at(3), 1);
  EXPECT_EQ(tv.at(2), 0);
  EXPECT_EQ(type_vector(Partition({2, 2, 2})).at(2), 3);
  for (int i = 1; i <= 4; ++i) EXPECT_EQ(type_vector(Partition{}).at(i), 0);
  for (const auto& p : partitions_of(8)) EXPECT_EQ(from_type_vector(type_vector(p)), p);
}

TEST(Partition, CentralizerOrders) {
  EXPECT_EQ(z_lambda(Partition({1, 1, 1})), 6);
  EXPECT_EQ(z_lambda(Partition({2, 1})), 2);
  EXPECT_EQ(z_lambda(Partition({3})), 3);
  EXPECT_EQ(conjugacy_class_size(Partition({1, 1, 1})), 1);
  EXPECT_EQ(conjugacy_class_size(Partition({2, 1})), 3);
  EXPECT_EQ(conjugacy_class_size(Partition({3})), 2);
}

TEST(Partition, ClassSizesSumToFactorial) {
  for (int n = 0; n <= 10; ++n) {
    BigInt s = 0;
    for (const auto& p : partitions_of(n)) {
      EXPECT_EQ(factorial(static_cast<unsigned>(n)) % z_lambda(p), 0);
      s += conjugacy_class_size(p);
    }
    EXPECT_EQ(s, factorial(static_cast<unsigned>(n)));
  }
}

TEST(Partition, Concatenation) {
  EXPECT_EQ(concat(PartitionTuple({Partition({2, 1}), Partition({3})})), Partition({3, 2, 1}));
  EXPECT_EQ(concat(PartitionTuple({Partition{}, Partition{}})), Partition{});
  EXPECT_EQ(concat(PartitionTuple({Partition({1, 1}), Partition({1})})), Partition({1, 1, 1}));
}

TEST(Partition, Compositions) {
  // C(d+m-1, m-1) weak compositions, 2^(d-1) compositions
  EXPECT_EQ(weak_compositions(4, 3).size(), 15u);
  EXPECT_EQ(weak_compositions(0, 2).size(), 1u);
  EXPECT_EQ(compositions(5).size(), 16u);
  std::set<std::vector<int>> seen;
  for (const auto& c : weak_compositions(5, 3)) {
    EXPECT_EQ(c[0] + c[1] + c[2], 5);
    EXPECT_TRUE(seen.insert(c).second);
  }
  for (const auto& c : compositions(6))
    for (int x : c) EXPECT_GT(x, 0);
}

TEST(Partition, TextRoundTrip) {
  EXPECT_EQ(parse_partition("3,2,1"), Partition({3, 2, 1}));
  EXPECT_EQ(parse_partition(""), Partition{});
  EXPECT_EQ(parse_partition("0"), Partition{});
  EXPECT_EQ(to_string(Partition({3, 2, 1})), "3,2,1");
  const auto t = parse_partition_tuple("2,1;3;1,1");
  ASSERT_EQ(t.count(), 3u);
  EXPECT_EQ(t[1], Partition({3}));
  EXPECT_EQ(t.total_size(), 8);
  EXPECT_EQ(to_string(t), "2,1;3;1,1");
  for (const auto& p : partitions_of(7)) EXPECT_EQ(parse_partition(to_string(p)), p);
}

TEST(Partition, MalformedText) {
  EXPECT_THROW(parse_partition("2,1,x"), std::invalid_argument);
  EXPECT_THROW(parse_partition("1,2"), std::invalid_argument);
  EXPECT_THROW(parse_partition("2,,1"), std::invalid_argument);
  EXPECT_THROW(parse_partition("-1"), std::invalid_argument);
  EXPECT_THROW(parse_partition_tuple("2;a"), std::invalid_argument);
}
