#pragma once

// Hilbert series of conjugation invariants on tuples of matrices and of
// block-diagonal invariants in the harmonic polynomials, each computed two
// ways: as an infinite product and as a sum of squared LR coefficients.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "lr.hpp"
#include "parallel.hpp"
#include "partition.hpp"
#include "series.hpp"

namespace lrsq {

/// prod_{k>=1} 1 / (1 - (t_1^k + ... + t_m^k)) truncated at total degree D.
inline TruncatedSeries main_formula_lhs(int m, int max_degree) {
  if (m < 1) throw std::invalid_argument("main formula needs m >= 1");
  return product_over_k(
      [&](int k) {
        TruncatedSeries power_sum(m, max_degree);
        for (int j = 0; j < m; ++j) power_sum += TruncatedSeries::variable(m, max_degree, j, k);
        return inverse_one_minus(power_sum);
      },
      m, max_degree);
}

namespace detail {

// Every exponent vector over `weights.size()` slots with sum_s a_s * weights[s] <= budget.
inline void weighted_exponents(const std::vector<int>& weights, int budget, std::size_t slot, Exponent& cur,
                               std::vector<Exponent>& out) {
  if (slot == weights.size()) {
    out.push_back(cur);
    return;
  }
  for (int a = 0; a * weights[slot] <= budget; ++a) {
    cur[slot] = a;
    weighted_exponents(weights, budget - a * weights[slot], slot + 1, cur, out);
  }
  cur[slot] = 0;
}

}  // namespace detail

/// sum_lambda sum_mu (c^lambda_mu)^2 * prod_s images[s]^{|mu^(s)|}, one slot per image
/// monomial, truncated at total degree D in the target variables.
inline TruncatedSeries lr_squares_series(const std::vector<Exponent>& images, int target_vars, int max_degree,
                                         std::vector<std::string> names = {}, unsigned threads = 1) {
  std::vector<int> weights;
  for (const auto& img : images) {
    if (static_cast<int>(img.size()) != target_vars) throw std::invalid_argument("slot image has wrong length");
    const int w = total_degree(img);
    if (w <= 0) throw std::domain_error("slot image must have positive degree");
    weights.push_back(w);
  }
  std::vector<Exponent> slots_exps;
  Exponent cur(images.size(), 0);
  detail::weighted_exponents(weights, max_degree, 0, cur, slots_exps);

  std::vector<BigInt> values(slots_exps.size());
  parallel_for(slots_exps.size(), threads, [&](std::size_t i) {
    std::vector<int> profile;
    for (int a : slots_exps[i])
      if (a > 0) profile.push_back(a);  // empty tensor factors are the identity
    values[i] = sum_lr_squared_profile(profile);
  });

  TruncatedSeries out(target_vars, max_degree, std::move(names));
  Exponent target(static_cast<std::size_t>(target_vars));
  for (std::size_t i = 0; i < slots_exps.size(); ++i) {
    std::fill(target.begin(), target.end(), 0);
    for (std::size_t s = 0; s < images.size(); ++s)
      for (std::size_t v = 0; v < target.size(); ++v) target[v] += slots_exps[i][s] * images[s][v];
    out.add_term(target, values[i]);
  }
  return out;
}

/// Coefficient at t^a is the sum of (c^lambda_mu)^2 over lambda and mu with |mu^(j)| = a_j.
inline TruncatedSeries main_formula_rhs(int m, int max_degree, unsigned threads = 1) {
  if (m < 1) throw std::invalid_argument("main formula needs m >= 1");
  std::vector<Exponent> images;
  for (int j = 0; j < m; ++j) {
    Exponent e(static_cast<std::size_t>(m), 0);
    e[static_cast<std::size_t>(j)] = 1;
    images.push_back(e);
  }
  return lr_squares_series(images, m, max_degree, {}, threads);
}

inline IdentityReport verify_main_formula(int m, int max_degree, unsigned threads = 1) {
  return compare_series(main_formula_lhs(m, max_degree), main_formula_rhs(m, max_degree, threads));
}

/// a_n(d): dimension of the GL_n-invariants of multidegree d on m copies of
/// n x n matrices, as the LR-square sum with l(lambda) <= n.
inline BigInt finite_invariant_dim(int n, const std::vector<int>& profile) {
  if (n < 1) throw std::invalid_argument("finite_invariant_dim: n must be positive");
  return sum_lr_squared_profile(profile, LengthBounds{n, {}});
}

/// True once n >= |d|, where the length restriction is vacuous.
inline bool invariant_dim_is_stable(int n, const std::vector<int>& profile) {
  return n >= std::accumulate(profile.begin(), profile.end(), 0);
}

namespace detail {

using Laurent = std::map<std::vector<int>, BigInt>;

inline Laurent laurent_mul(const Laurent& a, const Laurent& b) {
  Laurent r;
  std::vector<int> e;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      e.resize(ea.size());
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] = ea[i] + eb[i];
      auto& slot = r[e];
      slot += ca * cb;
      if (slot == 0) r.erase(e);
    }
  return r;
}

// Complete homogeneous polynomial h_d evaluated at the n^2 Laurent monomials
// x_i / x_j: the degree-d part of the character of S(gl_n) under the torus.
inline Laurent adjoint_symmetric_power(int n, int d) {
  const auto un = static_cast<std::size_t>(n);
  std::vector<Laurent> by_degree(static_cast<std::size_t>(d) + 1);
  by_degree[0][std::vector<int>(un, 0)] = 1;
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j) {
      std::vector<Laurent> next(by_degree.size());
      for (int e = 0; e <= d; ++e)
        for (int u = 0; u <= e; ++u)
          for (const auto& [mono, c] : by_degree[static_cast<std::size_t>(e - u)]) {
            std::vector<int> shifted = mono;
            shifted[i] += u;
            shifted[j] -= u;
            next[static_cast<std::size_t>(e)][shifted] += c;
          }
      by_degree = std::move(next);
    }
  return by_degree[static_cast<std::size_t>(d)];
}

}  // namespace detail

/// a_n(d) by Weyl integration: (1/n!) times the constant term of
/// prod_{i != j} (1 - x_i/x_j) * prod_l h_{d_l}(x_i/x_j).  Independent of
/// every LR computation; limited to n <= 3 and |d| <= 6.
inline BigInt molien_invariant_dim(int n, const std::vector<int>& profile) {
  const int total = std::accumulate(profile.begin(), profile.end(), 0);
  if (n < 1 || n > 3) throw std::out_of_range("molien_invariant_dim: n must be in [1, 3]");
  if (total > 6) throw std::out_of_range("molien_invariant_dim: total degree must be <= 6");
  for (int d : profile)
    if (d < 0) throw std::invalid_argument("molien_invariant_dim: negative degree");
  const auto un = static_cast<std::size_t>(n);
  detail::Laurent integrand{{std::vector<int>(un, 0), BigInt(1)}};
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j) {
      if (i == j) continue;
      std::vector<int> root(un, 0);
      root[i] = 1;
      root[j] = -1;
      detail::Laurent factor{{std::vector<int>(un, 0), BigInt(1)}, {root, BigInt(-1)}};
      integrand = detail::laurent_mul(integrand, factor);
    }
  for (int d : profile) integrand = detail::laurent_mul(integrand, detail::adjoint_symmetric_power(n, d));
  auto it = integrand.find(std::vector<int>(un, 0));
  const BigInt ct = it == integrand.end() ? BigInt(0) : it->second;
  const BigInt order = factorial(static_cast<unsigned>(n));
  if (ct % order != 0) throw std::logic_error("molien_invariant_dim: constant term not divisible by n!");
  return ct / order;
}

/// Dimension of the K(n_1,...,n_m)-invariant polynomials of degree d on
/// n x n matrices, n = sum n_j: LR-square sum with l(lambda) <= n and
/// l(mu^(j)) <= n_j, over every weak degree profile.
inline BigInt block_invariant_dim(const std::vector<int>& block_sizes, int d) {
  if (block_sizes.empty()) throw std::invalid_argument("block_invariant_dim: need at least one block");
  for (int nj : block_sizes)
    if (nj < 1) throw std::invalid_argument("block_invariant_dim: block sizes must be positive");
  const int n = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
  const LengthBounds bounds{n, block_sizes};
  BigInt total = 0;
  for (const auto& p : weak_compositions(d, static_cast<int>(block_sizes.size()))) total += sum_lr_squared_profile(p, bounds);
  return total;
}

inline bool block_dim_is_stable(const std::vector<int>& block_sizes, int d) {
  return std::all_of(block_sizes.begin(), block_sizes.end(), [d](int nj) { return nj >= d; });
}

/// prod_k 1/(1 - m t^k).
inline TruncatedSeries stable_block_series(int m, int max_degree) {
  if (m < 1) throw std::invalid_argument("stable_block_series: m must be positive");
  return product_over_k([&](int k) { return inverse_one_minus(TruncatedSeries::variable(1, max_degree, 0, k) * BigInt(m)); },
                        1, max_degree);
}

/// prod_k (1 - t^k) / (1 - m t^k).
inline TruncatedSeries harmonic_stable_series(int m, int max_degree) {
  if (m < 2) throw std::invalid_argument("harmonic_stable_series: m must be >= 2");
  return product_over_k(
      [&](int k) {
        const auto tk = TruncatedSeries::variable(1, max_degree, 0, k);
        return (TruncatedSeries::one(1, max_degree) - tk) * inverse_one_minus(tk * BigInt(m));
      },
      1, max_degree);
}

/// Weight of slot j (1-based) in the graded specialization: slots come in
/// blocks of m-1 sharing the weights 1, 2, 3, ...
inline int graded_slot_weight(int m, int slot) { return (slot + m - 2) / (m - 1); }

/// sum (c^lambda_mu)^2 t^{gr(mu)} with gr(mu) = sum_j weight(j) |mu^(j)|.
inline TruncatedSeries graded_rhs(int m, int max_degree, unsigned threads = 1) {
  if (m < 2) throw std::invalid_argument("graded_rhs: m must be >= 2");
  std::vector<Exponent> images;
  for (int j = 1; j <= (m - 1) * max_degree; ++j) images.push_back(Exponent{graded_slot_weight(m, j)});
  return lr_squares_series(images, 1, max_degree, {}, threads);
}

/// h_d(n): dimension of the degree-d K(n)-invariant harmonic polynomials,
/// the coefficient of t^d in (sum_e a^(n)(e) t^e) * prod_{j<=n} (1 - t^j).
inline BigInt harmonic_finite_dim(const std::vector<int>& block_sizes, int d) {
  if (d < 0) throw std::invalid_argument("harmonic_finite_dim: d must be non-negative");
  const int n = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
  TruncatedSeries invariants(1, d);
  for (int e = 0; e <= d; ++e) invariants.add_term(Exponent{e}, block_invariant_dim(block_sizes, e));
  TruncatedSeries basic = TruncatedSeries::one(1, d);
  for (int j = 1; j <= std::min(n, d); ++j) basic = basic * (TruncatedSeries::one(1, d) - TruncatedSeries::variable(1, d, 0, j));
  return (invariants * basic).coefficient(d);
}

/// In (q, t): prod_k 1/(1 - sum_{i,j>=1} (q^i t^j)^k) against
/// prod_k (1-q^k)(1-t^k)/(1-(q^k+t^k)), with the LR-square sum under the
/// substitution z_s -> q^i t^j as the alternate side.
inline IdentityReport bigraded_identity(int max_degree, unsigned threads = 1) {
  const std::vector<std::string> names{"q", "t"};
  const int D = max_degree;
  auto mono = [&](int i, int j) { return TruncatedSeries::monomial(2, D, Exponent{i, j}, 1, names); };
  const auto one = TruncatedSeries::one(2, D, names);

  TruncatedSeries lhs = product_over_k(
      [&](int k) {
        TruncatedSeries s(2, D, names);
        for (int i = 1; (i + 1) * k <= D; ++i)
          for (int j = 1; (i + j) * k <= D; ++j) s += mono(i * k, j * k);
        return inverse_one_minus(s);
      },
      2, D, names);

  TruncatedSeries rhs = product_over_k(
      [&](int k) { return (one - mono(k, 0)) * (one - mono(0, k)) * inverse_one_minus(mono(k, 0) + mono(0, k)); }, 2, D,
      names);

  std::vector<Exponent> images;
  for (int s = 2; s <= D; ++s)
    for (int i = 1; i < s; ++i) images.push_back(Exponent{i, s - i});
  TruncatedSeries lr_side = images.empty() ? one : lr_squares_series(images, 2, D, names, threads);

  return compare_series(std::move(lhs), std::move(rhs), std::move(lr_side));
}

}  // namespace lrsq
