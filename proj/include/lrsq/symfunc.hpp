#pragma once

// Homogeneous symmetric functions with exact integer coordinates in the
// monomial basis m_delta.  Products are computed by merging monomial orbits,
// so no finite variable count ever truncates a result.

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "partition.hpp"

namespace lrsq {

class SymFunc {
 public:
  SymFunc() = default;
  explicit SymFunc(int degree) : degree_(degree) {
    if (degree < 0) throw std::invalid_argument("symmetric function degree must be non-negative");
  }

  int degree() const noexcept { return degree_; }
  const std::map<Partition, BigInt>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  BigInt coefficient(const Partition& delta) const {
    auto it = coeffs_.find(delta);
    return it == coeffs_.end() ? BigInt(0) : it->second;
  }

  void add(const Partition& delta, const BigInt& c) {
    if (delta.size() != degree_)
      throw std::invalid_argument("monomial m_(" + to_string(delta) + ") has the wrong degree for this symmetric function");
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(delta, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  SymFunc& operator+=(const SymFunc& o) {
    check_degree(o);
    for (const auto& [p, c] : o.coeffs_) add(p, c);
    return *this;
  }

  SymFunc& operator-=(const SymFunc& o) {
    check_degree(o);
    for (const auto& [p, c] : o.coeffs_) add(p, -c);
    return *this;
  }

  SymFunc& operator*=(const BigInt& k) {
    if (k == 0) coeffs_.clear();
    for (auto& [p, c] : coeffs_) c *= k;
    return *this;
  }

  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(SymFunc a, const BigInt& k) { return a *= k; }

  friend bool operator==(const SymFunc&, const SymFunc&) = default;

 private:
  void check_degree(const SymFunc& o) const {
    if (o.degree_ != degree_) throw std::invalid_argument("symmetric functions of different degree");
  }

  int degree_ = 0;
  std::map<Partition, BigInt> coeffs_;
};

inline SymFunc monomial(const Partition& delta) {
  SymFunc f(delta.size());
  f.add(delta, 1);
  return f;
}

namespace detail {

// Distinct rearrangements of `parts` padded with zeros to `len` positions.
template <class Fn>
void for_each_arrangement(const std::vector<int>& parts, std::size_t len, Fn&& fn) {
  if (parts.size() > len) return;
  std::vector<int> v = parts;
  v.resize(len, 0);
  std::sort(v.begin(), v.end());
  do {
    fn(v);
  } while (std::next_permutation(v.begin(), v.end()));
}

// Coefficient of m_gamma in m_alpha * m_beta: the number of pairs (a, b) of
// exponent vectors with a in the orbit of alpha, b in the orbit of beta and
// a + b = gamma (gamma read as a sequence, zero beyond its length).
inline BigInt monomial_product_coefficient(const Partition& alpha, const Partition& beta, const Partition& gamma) {
  const std::size_t len = gamma.length();
  BigInt count = 0;
  std::vector<int> rest(len);
  for_each_arrangement(alpha.parts(), len, [&](const std::vector<int>& a) {
    for (std::size_t i = 0; i < len; ++i) {
      rest[i] = gamma[i] - a[i];
      if (rest[i] < 0) return;
    }
    if (Partition::from_unsorted(rest) == beta) ++count;
  });
  return count;
}

struct MonomialProductCache {
  std::shared_mutex mutex;
  std::map<std::pair<Partition, Partition>, SymFunc> table;
};

inline MonomialProductCache& monomial_product_cache() {
  static MonomialProductCache cache;
  return cache;
}

inline SymFunc multiply_monomials(const Partition& alpha, const Partition& beta) {
  auto key = alpha <= beta ? std::make_pair(alpha, beta) : std::make_pair(beta, alpha);
  auto& cache = monomial_product_cache();
  {
    std::shared_lock lock(cache.mutex);
    if (auto it = cache.table.find(key); it != cache.table.end()) return it->second;
  }
  // Candidate shapes: fix alpha in the first positions, slide beta over all
  // positions that could possibly be occupied.
  const std::size_t width = alpha.length() + beta.length();
  const std::vector<int> a = alpha.padded(width);
  std::set<Partition> shapes;
  std::vector<int> sum(width);
  for_each_arrangement(beta.parts(), width, [&](const std::vector<int>& b) {
    for (std::size_t i = 0; i < width; ++i) sum[i] = a[i] + b[i];
    shapes.insert(Partition::from_unsorted(sum));
  });
  SymFunc result(alpha.size() + beta.size());
  for (const auto& gamma : shapes) result.add(gamma, monomial_product_coefficient(alpha, beta, gamma));
  std::unique_lock lock(cache.mutex);
  cache.table.try_emplace(std::move(key), result);
  return result;
}

}  // namespace detail

/// Product in the ring of symmetric functions.
inline SymFunc multiply(const SymFunc& f, const SymFunc& g) {
  SymFunc result(f.degree() + g.degree());
  for (const auto& [alpha, cf] : f.coeffs())
    for (const auto& [beta, cg] : g.coeffs()) result += detail::multiply_monomials(alpha, beta) * (cf * cg);
  return result;
}

/// p_nu = prod_j p_{nu_j}, with p_r = m_(r).
inline SymFunc power_sum(const Partition& nu) {
  SymFunc result = monomial(Partition{});
  for (int part : nu.parts()) result = multiply(result, monomial(Partition{part}));
  return result;
}

/// L_{gamma, delta}: monomial coordinates of p_gamma.
inline std::map<Partition, BigInt> power_sum_to_monomial(const Partition& gamma) { return power_sum(gamma).coeffs(); }

namespace detail {

// Semistandard fillings of `shape` with exactly content[i] entries equal to
// i+1, filled cell by cell in reading order.
class TableauCounter {
 public:
  TableauCounter(const Partition& shape, const std::vector<int>& content)
      : shape_(shape), remaining_(content), grid_(shape.length()) {
    for (std::size_t r = 0; r < shape.length(); ++r) grid_[r].assign(static_cast<std::size_t>(shape[r]), 0);
  }

  BigInt count() { return fill(0, 0); }

 private:
  BigInt fill(std::size_t row, std::size_t col) {
    if (row == shape_.length()) return 1;
    if (col == static_cast<std::size_t>(shape_[row])) return fill(row + 1, 0);
    int lo = 1;
    if (col > 0) lo = std::max(lo, grid_[row][col - 1]);
    if (row > 0) lo = std::max(lo, grid_[row - 1][col] + 1);
    BigInt total = 0;
    for (int v = lo; v <= static_cast<int>(remaining_.size()); ++v) {
      int& left = remaining_[static_cast<std::size_t>(v - 1)];
      if (left == 0) continue;
      --left;
      grid_[row][col] = v;
      total += fill(row, col + 1);
      ++left;
    }
    grid_[row][col] = 0;
    return total;
  }

  const Partition& shape_;
  std::vector<int> remaining_;
  std::vector<std::vector<int>> grid_;
};

struct SchurCache {
  std::shared_mutex mutex;
  std::map<Partition, SymFunc> table;
};

inline SchurCache& schur_cache() {
  static SchurCache cache;
  return cache;
}

}  // namespace detail

/// Number of semistandard tableaux of the given shape whose entry i+1
/// occurs content[i] times.
inline BigInt count_semistandard_tableaux(const Partition& shape, const std::vector<int>& content) {
  int total = 0;
  for (int c : content) {
    if (c < 0) throw std::invalid_argument("tableau content must be non-negative");
    total += c;
  }
  if (total != shape.size()) return 0;
  return detail::TableauCounter(shape, content).count();
}

/// s_lambda = sum_delta K_{lambda delta} m_delta, by tableau enumeration.
inline SymFunc schur(const Partition& lambda) {
  auto& cache = detail::schur_cache();
  {
    std::shared_lock lock(cache.mutex);
    if (auto it = cache.table.find(lambda); it != cache.table.end()) return it->second;
  }
  SymFunc f(lambda.size());
  for (const auto& delta : partitions_of(lambda.size())) f.add(delta, count_semistandard_tableaux(lambda, delta.parts()));
  std::unique_lock lock(cache.mutex);
  cache.table.try_emplace(lambda, f);
  return f;
}

/// Coordinates of f in the Schur basis.  Partitions are eliminated in
/// reverse-lexicographic order, a linear extension of dominance, against
/// the unitriangular Kostka matrix.
inline std::map<Partition, BigInt> schur_expand(const SymFunc& f) {
  std::map<Partition, BigInt> out;
  SymFunc residual = f;
  for (const auto& lambda : partitions_of(f.degree())) {
    const BigInt c = residual.coefficient(lambda);
    if (c == 0) continue;
    out.emplace(lambda, c);
    residual -= schur(lambda) * c;
  }
  if (!residual.is_zero()) throw std::domain_error("schur_expand: nonzero residual; input is not a valid symmetric function");
  return out;
}

/// Hall scalar product; Schur functions are orthonormal.  Functions of
/// different degree are orthogonal.
inline BigInt hall(const SymFunc& f, const SymFunc& g) {
  if (f.degree() != g.degree()) return 0;
  const auto a = schur_expand(f);
  const auto b = schur_expand(g);
  BigInt s = 0;
  for (const auto& [lambda, c] : a)
    if (auto it = b.find(lambda); it != b.end()) s += c * it->second;
  return s;
}

namespace detail {

inline BigInt count_functions_rec(const std::vector<int>& gamma, std::size_t j, std::vector<int>& remaining) {
  if (j == gamma.size()) {
    for (int r : remaining)
      if (r != 0) return 0;
    return 1;
  }
  BigInt total = 0;
  for (int& slot : remaining) {
    if (slot < gamma[j]) continue;
    slot -= gamma[j];
    total += count_functions_rec(gamma, j + 1, remaining);
    slot += gamma[j];
  }
  return total;
}

}  // namespace detail

/// Number of maps f from the part indices of gamma to positive integers with
/// f(gamma)_i = sum_{j: f(j)=i} gamma_j equal to delta_i for every i.  delta is
/// matched as a sequence extended by zeros, so images beyond l(delta) are
/// impossible and the search range is {1, ..., l(delta)}.
inline BigInt count_functions(const Partition& gamma, const Partition& delta) {
  if (gamma.size() != delta.size()) return 0;
  std::vector<int> remaining = delta.parts();
  return detail::count_functions_rec(gamma.parts(), 0, remaining);
}

/// Number of pairs (gamma, f) with f(gamma) = delta.
inline BigInt macdonald_corollary_count(const Partition& delta) {
  BigInt total = 0;
  for (const auto& gamma : partitions_of(delta.size())) total += count_functions(gamma, delta);
  return total;
}

}  // namespace lrsq
