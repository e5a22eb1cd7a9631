#include <gtest/gtest.h>

#include <set>

#include "lrsq/finite.hpp"
#include "lrsq/hilbert.hpp"

using namespace lrsq;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

// Rotation classes of all m^k strings, by canonical (least) rotation.
std::size_t necklaces_brute(int k, int m) {
  std::set<std::vector<int>> reps;
  std::vector<int> s(static_cast<std::size_t>(k), 0);
  while (true) {
    std::vector<int> best = s;
    for (int r = 1; r < k; ++r) {
      std::vector<int> rot(s.begin() + r, s.end());
      rot.insert(rot.end(), s.begin(), s.begin() + r);
      best = std::min(best, rot);
    }
    reps.insert(best);
    int i = 0;
    while (i < k && ++s[static_cast<std::size_t>(i)] == m) s[static_cast<std::size_t>(i++)] = 0;
    if (i == k) break;
  }
  return reps.size();
}

std::uint64_t factorial64(int d) {
  std::uint64_t f = 1;
  for (int i = 2; i <= d; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

TEST(Finite, Totient) {
  EXPECT_EQ(totient(1), 1u);
  EXPECT_EQ(totient(4), 2u);
  EXPECT_EQ(totient(12), 4u);
  EXPECT_EQ(totient(97), 96u);
  EXPECT_THROW(totient(0), std::invalid_argument);
}

TEST(Finite, NecklaceCounts) {
  EXPECT_EQ(necklace_count(1, 2), 2);
  EXPECT_EQ(necklace_count(4, 2), 6);
  for (int k = 1; k <= 10; ++k) EXPECT_EQ(necklace_count(k, 1), 1);
  EXPECT_EQ(necklace_count(60, 2) > 0, true);
  EXPECT_THROW(necklace_count(0, 2), std::invalid_argument);
}

TEST(Finite, NecklaceFormulaMatchesBruteForce) {
  for (int m = 1; m <= 3; ++m)
    for (int k = 1; k <= 8; ++k) EXPECT_EQ(necklace_count(k, m), necklaces_brute(k, m)) << k << " " << m;
}

TEST(Finite, EtaSeries) {
  EXPECT_EQ(eta_series(1, 5).univariate_coefficients(), big({1, 1, 2, 3, 5, 7}));
  EXPECT_EQ(eta_series(2, 8).univariate_coefficients(), big({1, 2, 6, 14, 34, 74, 166, 350, 746}));
  EXPECT_EQ(eta_series(3, 8).univariate_coefficients(), big({1, 3, 12, 39, 129, 399, 1245, 3783, 11514}));
  for (int m = 1; m <= 4; ++m) EXPECT_EQ(eta_series(m, 8), stable_block_series(m, 8)) << m;
}

TEST(Finite, EtaCoefficientsAreLrSquareSums) {
  for (int m = 1; m <= 3; ++m) {
    const auto eta = eta_series(m, 5);
    for (int d = 0; d <= 5; ++d) {
      BigInt s = 0;
      for (const auto& c : weak_compositions(d, m)) s += orbit_count_lr(c);
      EXPECT_EQ(s, eta.coefficient(d)) << m << " " << d;
    }
  }
}

TEST(Finite, PermutationRanking) {
  const int d = 5;
  std::set<std::vector<int>> seen;
  for (std::uint64_t r = 0; r < factorial64(d); ++r) {
    const auto p = Permutation::unrank(r, d);
    EXPECT_EQ(p.rank(), r);
    EXPECT_TRUE(seen.insert(p.images()).second);
    EXPECT_EQ(p * p.inverse(), Permutation::identity(d));
  }
  EXPECT_EQ(Permutation::unrank(0, 4), Permutation::identity(4));
  EXPECT_THROW(Permutation({0, 0, 1}), std::invalid_argument);
}

TEST(Finite, OrbitExamples) {
  EXPECT_EQ(orbit_count_brute({1, 1}), 2u);
  EXPECT_EQ(orbit_count_brute({2, 1}), 4u);
  EXPECT_EQ(orbit_count_lr({1, 1}), 2);
  EXPECT_EQ(orbit_count_lr({2, 1}), 4);
  EXPECT_EQ(orbit_count_lr({1, 1, 1}), 6);
  for (int d = 1; d <= 6; ++d) EXPECT_EQ(orbit_count_brute({d}), partitions_of(d).size());
  // trivial subgroup: every permutation is its own orbit
  EXPECT_EQ(orbit_count_brute({1, 1, 1, 1}), 24u);
}

TEST(Finite, OrbitsAcceptZeroBlocks) {
  EXPECT_EQ(orbit_count_brute({0, 2, 0, 1}), orbit_count_brute({2, 1}));
  EXPECT_EQ(orbit_count_lr({0, 2, 0, 1}), orbit_count_lr({2, 1}));
  EXPECT_EQ(orbit_count_brute({}), 1u);
}

TEST(Finite, OrbitBruteForceBound) {
  EXPECT_THROW(orbit_count_brute({5, 4}), std::out_of_range);
  EXPECT_THROW(orbit_count_brute({2, -1}), std::invalid_argument);
}

TEST(Finite, OrbitCountsAgree) {
  for (int d = 1; d <= 5; ++d)
    for (const auto& c : compositions(d)) EXPECT_EQ(BigInt(orbit_count_brute(c)), orbit_count_lr(c));
}

TEST(Finite, PartitionsByLength) {
  const int D = 10;
  const auto s = partitions_by_length_series(D);
  EXPECT_EQ(s.names(), (std::vector<std::string>{"q", "t"}));
  for (int n = 1; n + 1 <= D; ++n) EXPECT_EQ(s.coefficient({1, n}), 1);
  EXPECT_EQ(s.coefficient({2, 4}), 2);
  for (int l = 1; 2 * l <= D; ++l) EXPECT_EQ(s.coefficient({l, l}), 1);
  for (int n = 0; n <= D; ++n)
    for (int l = 0; l + n <= D; ++l) {
      std::size_t exact = 0;
      for (const auto& p : partitions_of(n))
        if (static_cast<int>(p.length()) == l) ++exact;
      EXPECT_EQ(s.coefficient({l, n}), exact);
    }
}

TEST(Finite, GlqSeries) {
  EXPECT_EQ(glq_class_series(2, 3).univariate_coefficients(), big({1, 1, 3, 6}));
  EXPECT_EQ(glq_class_series(3, 1).coefficient(1), 2);
  EXPECT_EQ(glq_class_series(4, 2).coefficient(0), 1);
  // non-prime q is fine as a formal parameter; t^1 counts q - 1 scalars
  for (int q = 2; q <= 9; ++q) EXPECT_EQ(glq_class_series(q, 1).coefficient(1), q - 1);
  EXPECT_THROW(glq_class_series(1, 3), std::invalid_argument);
}

TEST(Finite, MatrixArithmetic) {
  const auto a = MatrixModQ(2, 3, {1, 2, 0, 1});
  const auto b = MatrixModQ(2, 3, {1, 1, 0, 1});
  EXPECT_EQ(a * b, MatrixModQ(2, 3, {1, 0, 0, 1}));
  EXPECT_TRUE(is_invertible(a));
  EXPECT_FALSE(is_invertible(MatrixModQ(2, 2, {1, 1, 1, 1})));
  EXPECT_EQ(MatrixModQ(2, 3, {-1, 4, 0, 0}).entries(), (std::vector<int>{2, 1, 0, 0}));
}

TEST(Finite, GroupOrders) {
  auto order = [](int m, int q) {
    std::uint64_t total = 1, count = 0;
    for (int i = 0; i < m * m; ++i) total *= static_cast<std::uint64_t>(q);
    for (std::uint64_t c = 0; c < total; ++c) count += is_invertible(MatrixModQ::decode(c, m, q));
    return count;
  };
  EXPECT_EQ(order(2, 2), 6u);
  EXPECT_EQ(order(2, 3), 48u);
  EXPECT_EQ(order(3, 2), 168u);
}

TEST(Finite, CommutantBasis) {
  const auto id = MatrixModQ(3, 2, {1, 0, 0, 0, 1, 0, 0, 0, 1});
  EXPECT_EQ(commutant_basis(id).size(), 9u);
  // a regular element has an m-dimensional commutant
  const auto jordan = MatrixModQ(3, 3, {1, 1, 0, 0, 1, 1, 0, 0, 1});
  const auto basis = commutant_basis(jordan);
  EXPECT_EQ(basis.size(), 3u);
  for (const auto& x : basis) EXPECT_EQ(jordan * x, x * jordan);
}

TEST(Finite, GlqBruteForce) {
  EXPECT_EQ(glq_class_count_brute(1, 2), 1);
  EXPECT_EQ(glq_class_count_brute(2, 2), 3);
  EXPECT_EQ(glq_class_count_brute(2, 3), 8);
  EXPECT_EQ(glq_class_count_brute(3, 2), 6);
  EXPECT_EQ(glq_class_count_brute(1, 5), 4);
  EXPECT_EQ(glq_class_count_brute(2, 3, 4), 8);
  EXPECT_THROW(glq_class_count_brute(2, 4), std::invalid_argument);
  EXPECT_THROW(glq_class_count_brute(2, 7), std::out_of_range);
  EXPECT_THROW(glq_class_count_brute(3, 5), std::out_of_range);
  // 3^9 matrices sits exactly on the bound
  EXPECT_EQ(glq_class_count_brute(3, 3), glq_class_series(3, 3).coefficient(3));
  EXPECT_THROW(glq_class_count_brute(4, 2), std::out_of_range);
}

TEST(Finite, EtaGlqIdentity) {
  const auto r2 = eta_glq_identity(2, 8);
  EXPECT_TRUE(r2.equal);
  ASSERT_TRUE(r2.alternate.has_value());
  EXPECT_EQ(r2.lhs.coefficient(2), 3);
  EXPECT_EQ(r2.rhs.coefficient(2), 3);
  EXPECT_EQ(r2.alternate->coefficient(2), 3);
  EXPECT_TRUE(eta_glq_identity(3, 6).equal);
}
