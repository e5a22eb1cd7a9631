#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "lrsq/symfunc.hpp"

using namespace lrsq;

namespace {

// Polynomials in N commuting variables; the oracle for every symfunc operation.
using Poly = std::map<std::vector<int>, BigInt>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r[e] += ca * cb;
    }
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

Poly poly_one(int N) { return {{std::vector<int>(static_cast<std::size_t>(N), 0), BigInt(1)}}; }

void all_exponents(int N, int deg, std::vector<int>& cur, std::size_t i, std::vector<std::vector<int>>& out) {
  if (i + 1 == static_cast<std::size_t>(N)) {
    cur[i] = deg;
    out.push_back(cur);
    return;
  }
  for (int a = deg; a >= 0; --a) {
    cur[i] = a;
    all_exponents(N, deg - a, cur, i + 1, out);
  }
}

Poly complete_h(int N, int k) {
  if (k < 0) return {};
  Poly r;
  std::vector<int> cur(static_cast<std::size_t>(N));
  std::vector<std::vector<int>> exps;
  all_exponents(N, k, cur, 0, exps);
  for (auto& e : exps) r[e] = 1;
  return r;
}

Poly power_sum_poly(int N, int r) {
  Poly p;
  for (int i = 0; i < N; ++i) {
    std::vector<int> e(static_cast<std::size_t>(N), 0);
    e[static_cast<std::size_t>(i)] = r;
    p[e] = 1;
  }
  return p;
}

// Jacobi-Trudi determinant det(h_{lambda_i - i + j}) by Leibniz expansion.
Poly jacobi_trudi(const Partition& lambda, int N) {
  const auto l = lambda.length();
  std::vector<std::size_t> perm(l);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Poly total;
  do {
    int inv = 0;
    for (std::size_t a = 0; a < l; ++a)
      for (std::size_t b = a + 1; b < l; ++b) inv += perm[a] > perm[b];
    Poly term = poly_one(N);
    for (std::size_t i = 0; i < l && !term.empty(); ++i)
      term = poly_mul(term, complete_h(N, lambda[i] - static_cast<int>(i) + static_cast<int>(perm[i])));
    for (auto& [e, c] : term) total[e] += inv % 2 ? -c : c;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::erase_if(total, [](const auto& kv) { return kv.second == 0; });
  return total;
}

// Coefficient of m_delta in a symmetric polynomial: the coefficient of x^delta.
BigInt m_coeff(const Poly& p, const Partition& delta, int N) {
  auto it = p.find(delta.padded(static_cast<std::size_t>(N)));
  return it == p.end() ? BigInt(0) : it->second;
}

void expect_matches(const SymFunc& f, const Poly& p, int N) {
  for (const auto& delta : partitions_of(f.degree())) {
    if (static_cast<int>(delta.length()) > N) continue;
    EXPECT_EQ(f.coefficient(delta), m_coeff(p, delta, N)) << "m_" << delta;
  }
}

SymFunc from(std::initializer_list<std::pair<Partition, int>> terms) {
  int deg = terms.size() ? terms.begin()->first.size() : 0;
  SymFunc f(deg);
  for (const auto& [p, c] : terms) f.add(p, c);
  return f;
}

}  // namespace

TEST(SymFunc, MonomialBasis) {
  EXPECT_EQ(monomial(Partition({2, 1})).coeffs().size(), 1u);
  EXPECT_EQ(monomial(Partition{}).coefficient(Partition{}), 1);
  EXPECT_THROW(SymFunc(3).add(Partition({2}), 1), std::invalid_argument);
}

TEST(SymFunc, SmallProducts) {
  const Partition one({1});
  EXPECT_EQ(multiply(monomial(one), monomial(one)), from({{Partition({2}), 1}, {Partition({1, 1}), 2}}));
  EXPECT_EQ(multiply(monomial(Partition{}), monomial(Partition({2}))), monomial(Partition({2})));
  EXPECT_EQ(multiply(monomial(Partition({2})), monomial(Partition{})), monomial(Partition({2})));
}

TEST(SymFunc, ProductsMatchPolynomialOracle) {
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 6; ++b) {
      const int N = std::max(a + b, 1);
      for (const auto& alpha : partitions_of(a))
        for (const auto& beta : partitions_of(b)) {
          Poly pa, pb;
          detail::for_each_arrangement(alpha.parts(), static_cast<std::size_t>(N), [&](const std::vector<int>& v) { pa[v] = 1; });
          detail::for_each_arrangement(beta.parts(), static_cast<std::size_t>(N), [&](const std::vector<int>& v) { pb[v] = 1; });
          expect_matches(multiply(monomial(alpha), monomial(beta)), poly_mul(pa, pb), N);
        }
    }
}

TEST(SymFunc, PowerSums) {
  EXPECT_EQ(power_sum(Partition({2})), monomial(Partition({2})));
  EXPECT_EQ(power_sum(Partition({1, 1})), from({{Partition({2}), 1}, {Partition({1, 1}), 2}}));
  EXPECT_EQ(power_sum(Partition({2, 1})), from({{Partition({3}), 1}, {Partition({2, 1}), 1}}));
  EXPECT_EQ(power_sum_to_monomial(Partition({3})), (std::map<Partition, BigInt>{{Partition({3}), 1}}));
  for (int d = 1; d <= 6; ++d)
    for (const auto& gamma : partitions_of(d)) {
      Poly p = poly_one(d);
      for (int r : gamma.parts()) p = poly_mul(p, power_sum_poly(d, r));
      expect_matches(power_sum(gamma), p, d);
    }
}

TEST(SymFunc, SemistandardTableauCounts) {
  EXPECT_EQ(count_semistandard_tableaux(Partition({2, 1}), {1, 1, 1}), 2);
  EXPECT_EQ(count_semistandard_tableaux(Partition({2, 1}), {2, 1}), 1);
  EXPECT_EQ(count_semistandard_tableaux(Partition({1, 1}), {2}), 0);
  // content order does not matter
  EXPECT_EQ(count_semistandard_tableaux(Partition({3, 2}), {1, 2, 2}), count_semistandard_tableaux(Partition({3, 2}), {2, 2, 1}));
}

TEST(SymFunc, SchurExamples) {
  EXPECT_EQ(schur(Partition({1})), monomial(Partition({1})));
  EXPECT_EQ(schur(Partition({2, 1})), from({{Partition({2, 1}), 1}, {Partition({1, 1, 1}), 2}}));
  EXPECT_EQ(schur(Partition({1, 1})), monomial(Partition({1, 1})));
}

TEST(SymFunc, SchurMatchesJacobiTrudi) {
  for (int d = 1; d <= 5; ++d)
    for (const auto& lambda : partitions_of(d)) expect_matches(schur(lambda), jacobi_trudi(lambda, d), d);
}

TEST(SymFunc, KostkaMatrixIsUnitriangular) {
  for (int d = 1; d <= 7; ++d)
    for (const auto& lambda : partitions_of(d)) {
      const auto s = schur(lambda);
      EXPECT_EQ(s.coefficient(lambda), 1);
      for (const auto& [delta, c] : s.coeffs()) {
        EXPECT_GT(c, 0);
        EXPECT_TRUE(dominates(lambda, delta)) << lambda << " " << delta;
      }
    }
}

TEST(SymFunc, SchurExpansion) {
  for (const auto& lambda : partitions_of(5)) {
    const auto e = schur_expand(schur(lambda));
    EXPECT_EQ(e, (std::map<Partition, BigInt>{{lambda, 1}}));
  }
  EXPECT_EQ(schur_expand(multiply(schur(Partition({2})), schur(Partition({1})))),
            (std::map<Partition, BigInt>{{Partition({3}), 1}, {Partition({2, 1}), 1}}));
  EXPECT_EQ(schur_expand(power_sum(Partition({1, 1}))),
            (std::map<Partition, BigInt>{{Partition({2}), 1}, {Partition({1, 1}), 1}}));
}

TEST(SymFunc, HallScalarProduct) {
  EXPECT_EQ(hall(schur(Partition({2, 1})), schur(Partition({2, 1}))), 1);
  EXPECT_EQ(hall(power_sum(Partition({2})), power_sum(Partition({2}))), 2);
  EXPECT_EQ(hall(power_sum(Partition({2})), power_sum(Partition({1, 1}))), 0);
  for (int d = 1; d <= 5; ++d)
    for (const auto& g : partitions_of(d))
      for (const auto& h : partitions_of(d)) {
        EXPECT_EQ(hall(power_sum(g), power_sum(h)), g == h ? z_lambda(g) : BigInt(0));
        EXPECT_EQ(hall(schur(g), schur(h)), g == h ? 1 : 0);
      }
}

TEST(SymFunc, CountFunctionsExamples) {
  EXPECT_EQ(count_functions(Partition({1, 1}), Partition({1, 1})), 2);
  EXPECT_EQ(count_functions(Partition({1, 1}), Partition({2})), 1);
  EXPECT_EQ(count_functions(Partition({2, 1}), Partition({2, 1})), 1);
  EXPECT_EQ(count_functions(Partition({2}), Partition({1, 1})), 0);
  EXPECT_EQ(count_functions(Partition({2}), Partition({3})), 0);
}

TEST(SymFunc, PowerSumCoordinatesCountFunctions) {
  for (int d = 1; d <= 6; ++d)
    for (const auto& gamma : partitions_of(d)) {
      const auto L = power_sum_to_monomial(gamma);
      for (const auto& delta : partitions_of(d)) {
        auto it = L.find(delta);
        EXPECT_EQ(it == L.end() ? BigInt(0) : it->second, count_functions(gamma, delta)) << gamma << " " << delta;
      }
    }
}

TEST(SymFunc, CorollaryCounts) {
  EXPECT_EQ(macdonald_corollary_count(Partition({1})), 1);
  EXPECT_EQ(macdonald_corollary_count(Partition({1, 1})), 2);
  EXPECT_EQ(macdonald_corollary_count(Partition({2, 1})), 4);
  // delta = (1^d): every gamma |- d with f a surjection onto d singletons, d! in total
  for (int d = 1; d <= 6; ++d)
    EXPECT_EQ(macdonald_corollary_count(Partition(std::vector<int>(static_cast<std::size_t>(d), 1))),
              factorial(static_cast<unsigned>(d)));
}
