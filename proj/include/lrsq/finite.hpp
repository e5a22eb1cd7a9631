#pragma once

// Necklaces, colored conjugacy classes of the symmetric group, and
// conjugacy classes of GL_m over a prime field.

#include <algorithm>
#include <cstddef>
#include <cstdint>
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

/// Euler's totient by trial factorization.
inline std::uint64_t totient(std::uint64_t r) {
  if (r == 0) throw std::invalid_argument("totient: argument must be positive");
  std::uint64_t result = r;
  for (std::uint64_t p = 2; p * p <= r; ++p) {
    if (r % p) continue;
    while (r % p == 0) r /= p;
    result -= result / p;
  }
  if (r > 1) result -= result / r;
  return result;
}

/// N_k(m) = (1/k) sum_{r | k} phi(r) m^{k/r}: k-bead necklaces in m colors.
inline BigInt necklace_count(int k, int m) {
  if (k < 1 || m < 1) throw std::invalid_argument("necklace_count: k and m must be positive");
  BigInt s = 0;
  for (int r = 1; r <= k; ++r)
    if (k % r == 0) s += BigInt(totient(static_cast<std::uint64_t>(r))) * ipow(BigInt(m), static_cast<unsigned>(k / r));
  if (s % k != 0) throw std::logic_error("necklace_count: inexact division");
  return s / k;
}

/// eta_m(t) = prod_k (1/(1-t^k))^{N_k(m)}.
inline TruncatedSeries eta_series(int m, int max_degree) {
  if (m < 1) throw std::invalid_argument("eta_series: m must be positive");
  return product_over_k(
      [&](int k) {
        const auto geometric = inverse_one_minus(TruncatedSeries::variable(1, max_degree, 0, k));
        return power(geometric, static_cast<unsigned long long>(necklace_count(k, m)));
      },
      1, max_degree);
}

/// Permutations of {0..d-1} as image vectors, ranked by Lehmer code.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
      if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[static_cast<std::size_t>(x)])
        throw std::invalid_argument("permutation images must form a bijection");
      seen[static_cast<std::size_t>(x)] = true;
    }
  }

  static Permutation identity(int d) {
    std::vector<int> v(static_cast<std::size_t>(d));
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
  }

  static Permutation unrank(std::uint64_t rank, int d) {
    std::vector<int> pool(static_cast<std::size_t>(d));
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<std::uint64_t> fact(static_cast<std::size_t>(d) + 1, 1);
    for (int i = 1; i <= d; ++i) fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * static_cast<std::uint64_t>(i);
    std::vector<int> out;
    for (int i = d; i >= 1; --i) {
      const std::uint64_t f = fact[static_cast<std::size_t>(i - 1)];
      const auto idx = static_cast<std::size_t>(rank / f);
      rank %= f;
      out.push_back(pool[idx]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Permutation(std::move(out));
  }

  std::uint64_t rank() const {
    std::uint64_t r = 0;
    const std::size_t d = images_.size();
    for (std::size_t i = 0; i < d; ++i) {
      std::uint64_t smaller = 0;
      for (std::size_t j = i + 1; j < d; ++j)
        if (images_[j] < images_[i]) ++smaller;
      r = r * (d - i) + smaller;
    }
    return r;
  }

  const std::vector<int>& images() const noexcept { return images_; }
  int size() const noexcept { return static_cast<int>(images_.size()); }

  /// (a * b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    std::vector<int> v(b.images_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
    return Permutation(std::move(v));
  }

  Permutation inverse() const {
    std::vector<int> v(images_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    return Permutation(std::move(v));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    ++merges_;
    return true;
  }

  std::size_t components() const { return parent_.size() - merges_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t merges_ = 0;
};

}  // namespace detail

inline constexpr int kMaxOrbitDegree = 8;

/// Orbits of S_d under conjugation by the Young subgroup S_{d_1} x ... x S_{d_m}
/// (blocks of consecutive points; zero blocks allowed), by union-find over
/// all d! permutations closed under the adjacent transpositions of each block.
inline std::uint64_t orbit_count_brute(const std::vector<int>& composition) {
  for (int x : composition)
    if (x < 0) throw std::invalid_argument("orbit_count_brute: composition parts must be non-negative");
  const int d = std::accumulate(composition.begin(), composition.end(), 0);
  if (d > kMaxOrbitDegree)
    throw std::out_of_range("orbit_count_brute: d = " + std::to_string(d) + " exceeds the bound " +
                            std::to_string(kMaxOrbitDegree));
  std::vector<Permutation> generators;
  int start = 0;
  for (int block : composition) {
    for (int i = start; i + 1 < start + block; ++i) {
      std::vector<int> v(static_cast<std::size_t>(d));
      std::iota(v.begin(), v.end(), 0);
      std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i + 1)]);
      generators.emplace_back(std::move(v));
    }
    start += block;
  }
  std::uint64_t total = 1;
  for (int i = 2; i <= d; ++i) total *= static_cast<std::uint64_t>(i);
  detail::UnionFind uf(total);
  for (std::uint64_t r = 0; r < total; ++r) {
    const Permutation sigma = Permutation::unrank(r, d);
    for (const auto& g : generators) uf.unite(r, (g * sigma * g).rank());  // transpositions are involutions
  }
  return uf.components();
}

/// The LR-square sum over lambda and tuples mu with mu^(j) |- d_j.
inline BigInt orbit_count_lr(const std::vector<int>& composition) { return sum_lr_squared_profile(composition); }

/// prod_k 1/(1 - q t^k) in variables (q, t), truncated at total degree D;
/// the coefficient of q^l t^n is the number of partitions of n with exactly
/// l parts (for l + n <= D).
inline TruncatedSeries partitions_by_length_series(int max_degree) {
  const std::vector<std::string> names{"q", "t"};
  return product_over_k(
      [&](int k) { return inverse_one_minus(TruncatedSeries::monomial(2, max_degree, Exponent{1, k}, 1, names)); }, 2,
      max_degree, names);
}

/// prod_k (1 - t^k)/(1 - q t^k): class counts of GL_m(q) as coefficients of t^m.
inline TruncatedSeries glq_class_series(int q, int max_degree) {
  if (q < 2) throw std::invalid_argument("glq_class_series: q must be >= 2");
  return product_over_k(
      [&](int k) {
        const auto tk = TruncatedSeries::variable(1, max_degree, 0, k);
        return (TruncatedSeries::one(1, max_degree) - tk) * inverse_one_minus(tk * BigInt(q));
      },
      1, max_degree);
}

/// Square matrix over the prime field F_q, row-major.
class MatrixModQ {
 public:
  MatrixModQ(int m, int q, std::vector<int> entries) : m_(m), q_(q), entries_(std::move(entries)) {
    if (static_cast<int>(entries_.size()) != m * m) throw std::invalid_argument("matrix entry count mismatch");
    for (int& e : entries_) e = ((e % q) + q) % q;
  }

  /// The matrix whose entries are the base-q digits of `code`.
  static MatrixModQ decode(std::uint64_t code, int m, int q) {
    std::vector<int> e(static_cast<std::size_t>(m * m));
    for (auto& x : e) {
      x = static_cast<int>(code % static_cast<std::uint64_t>(q));
      code /= static_cast<std::uint64_t>(q);
    }
    return MatrixModQ(m, q, std::move(e));
  }

  int dim() const noexcept { return m_; }
  int modulus() const noexcept { return q_; }
  int at(int r, int c) const { return entries_[static_cast<std::size_t>(r * m_ + c)]; }
  const std::vector<int>& entries() const noexcept { return entries_; }

  friend MatrixModQ operator*(const MatrixModQ& a, const MatrixModQ& b) {
    std::vector<int> e(static_cast<std::size_t>(a.m_ * a.m_), 0);
    for (int r = 0; r < a.m_; ++r)
      for (int c = 0; c < a.m_; ++c) {
        int s = 0;
        for (int k = 0; k < a.m_; ++k) s += a.at(r, k) * b.at(k, c);
        e[static_cast<std::size_t>(r * a.m_ + c)] = s % a.q_;
      }
    return MatrixModQ(a.m_, a.q_, std::move(e));
  }

  friend bool operator==(const MatrixModQ&, const MatrixModQ&) = default;

 private:
  int m_;
  int q_;
  std::vector<int> entries_;
};

namespace detail {

inline int inverse_mod(int a, int q) {
  for (int x = 1; x < q; ++x)
    if ((a * x) % q == 1) return x;
  throw std::domain_error("no inverse modulo q");
}

// Row-reduces a rows x cols matrix over F_q in place; returns the pivot columns.
inline std::vector<int> row_reduce(std::vector<std::vector<int>>& a, int q) {
  std::vector<int> pivots;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && a[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(r)]);
    auto& pivot_row = a[static_cast<std::size_t>(r)];
    const int inv = inverse_mod(pivot_row[static_cast<std::size_t>(c)], q);
    for (auto& x : pivot_row) x = (x * inv) % q;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      auto& row = a[static_cast<std::size_t>(i)];
      const int f = row[static_cast<std::size_t>(c)];
      if (f == 0) continue;
      for (int k = 0; k < cols; ++k) row[static_cast<std::size_t>(k)] = ((row[static_cast<std::size_t>(k)] - f * pivot_row[static_cast<std::size_t>(k)]) % q + q) % q;
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline bool is_prime(int q) {
  if (q < 2) return false;
  for (int p = 2; p * p <= q; ++p)
    if (q % p == 0) return false;
  return true;
}

}  // namespace detail

inline bool is_invertible(const MatrixModQ& a) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(a.dim()));
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) rows[static_cast<std::size_t>(r)].push_back(a.at(r, c));
  return static_cast<int>(detail::row_reduce(rows, a.modulus()).size()) == a.dim();
}

/// Basis of the commutant {X : gX = Xg} as an F_q-subspace of m x m matrices.
inline std::vector<MatrixModQ> commutant_basis(const MatrixModQ& g) {
  const int m = g.dim(), q = g.modulus(), n = m * m;
  // Linear map X -> gX - Xg on the coordinates X_{kl}, index k*m + l.
  std::vector<std::vector<int>> sys(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto& row = sys[static_cast<std::size_t>(i * m + j)];
      for (int k = 0; k < m; ++k) {
        row[static_cast<std::size_t>(k * m + j)] += g.at(i, k);
        row[static_cast<std::size_t>(i * m + k)] -= g.at(k, j);
      }
      for (auto& x : row) x = ((x % q) + q) % q;
    }
  const auto pivots = detail::row_reduce(sys, q);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<MatrixModQ> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<int> x(static_cast<std::size_t>(n), 0);
    x[static_cast<std::size_t>(free)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      x[static_cast<std::size_t>(pivots[r])] = (q - sys[r][static_cast<std::size_t>(free)]) % q;
    basis.emplace_back(m, q, std::move(x));
  }
  return basis;
}

/// Conjugacy classes of GL_m(F_q) by Burnside: commuting ordered pairs in the
/// group divided by its order.  For each invertible g the centralizer is
/// enumerated as the invertible elements of the commutant subspace.
inline BigInt glq_class_count_brute(int m, int q, unsigned threads = 1) {
  if (m < 1 || m > 3) throw std::out_of_range("glq_class_count_brute: m must be in [1, 3]");
  if (!detail::is_prime(q)) throw std::invalid_argument("glq_class_count_brute: q = " + std::to_string(q) + " is not prime");
  if (q > 5) throw std::out_of_range("glq_class_count_brute: q must be <= 5");
  std::uint64_t matrices = 1;
  for (int i = 0; i < m * m; ++i) matrices *= static_cast<std::uint64_t>(q);
  if (matrices > 19683) throw std::out_of_range("glq_class_count_brute: q^(m^2) must be <= 3^9 = 19683");

  std::vector<MatrixModQ> group;
  for (std::uint64_t code = 0; code < matrices; ++code) {
    auto a = MatrixModQ::decode(code, m, q);
    if (is_invertible(a)) group.push_back(std::move(a));
  }
  std::vector<std::uint64_t> centralizer(group.size(), 0);
  parallel_for(group.size(), threads, [&](std::size_t gi) {
    const auto basis = commutant_basis(group[gi]);
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) combos *= static_cast<std::uint64_t>(q);
    std::uint64_t count = 0;
    std::vector<int> e(static_cast<std::size_t>(m * m));
    for (std::uint64_t code = 0; code < combos; ++code) {
      std::fill(e.begin(), e.end(), 0);
      std::uint64_t c = code;
      for (const auto& b : basis) {
        const int coef = static_cast<int>(c % static_cast<std::uint64_t>(q));
        c /= static_cast<std::uint64_t>(q);
        if (coef == 0) continue;
        for (std::size_t k = 0; k < e.size(); ++k) e[k] += coef * b.entries()[k];
      }
      if (is_invertible(MatrixModQ(m, q, e))) ++count;
    }
    centralizer[gi] = count;
  });
  BigInt pairs = 0;
  for (auto c : centralizer) pairs += c;
  const BigInt order = group.size();
  if (pairs % order != 0) throw std::logic_error("glq_class_count_brute: commuting pairs not divisible by |G|");
  return pairs / order;
}

/// glq_class_series(q) against prod(1-t^k) * eta_q(t), with
/// prod (1/(1-t^k))^{N_k(q)-1} as the alternate side.
inline IdentityReport eta_glq_identity(int q, int max_degree) {
  if (q < 2) throw std::invalid_argument("eta_glq_identity: q must be >= 2");
  const int D = max_degree;
  TruncatedSeries euler = product_over_k(
      [&](int k) { return TruncatedSeries::one(1, D) - TruncatedSeries::variable(1, D, 0, k); }, 1, D);
  TruncatedSeries reduced = product_over_k(
      [&](int k) {
        const auto geometric = inverse_one_minus(TruncatedSeries::variable(1, D, 0, k));
        return power(geometric, static_cast<unsigned long long>(necklace_count(k, q) - 1));
      },
      1, D);
  return compare_series(glq_class_series(q, D), euler * eta_series(q, D), std::move(reduced));
}

}  // namespace lrsq
