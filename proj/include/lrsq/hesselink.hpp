#pragma once

// Type A_{n-1} root data for gl_n, Lusztig's q-analog of Kostant's partition
// function, and graded multiplicities of irreducibles in the harmonic
// polynomials via the alternating Weyl-group sum.

#include <algorithm>
#include <functional>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"

namespace lrsq {

/// An integral weight of gl_n in epsilon coordinates.
struct Weight {
  std::vector<int> coords;

  std::size_t rank() const noexcept { return coords.size(); }
  int sum() const { return std::accumulate(coords.begin(), coords.end(), 0); }
  bool is_dominant() const { return std::is_sorted(coords.begin(), coords.end(), std::greater<>()); }

  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;
};

inline std::string to_string(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.coords.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w.coords[i]);
  }
  return s;
}

/// A polynomial in t with integer coefficients; no zero values stored.
class GradedMultiplicity {
 public:
  const std::map<int, BigInt>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  BigInt coefficient(int d) const {
    auto it = coeffs_.find(d);
    return it == coeffs_.end() ? BigInt(0) : it->second;
  }

  void add(int d, const BigInt& c) {
    if (c == 0) return;
    auto& slot = coeffs_[d];
    slot += c;
    if (slot == 0) coeffs_.erase(d);
  }

  GradedMultiplicity& operator+=(const GradedMultiplicity& o) {
    for (const auto& [d, c] : o.coeffs_) add(d, c);
    return *this;
  }

  GradedMultiplicity& operator*=(const BigInt& k) {
    if (k == 0) coeffs_.clear();
    for (auto& [d, c] : coeffs_) c *= k;
    return *this;
  }

  /// Value at t = 1.
  BigInt at_one() const {
    BigInt s = 0;
    for (const auto& [d, c] : coeffs_) s += c;
    return s;
  }

  static GradedMultiplicity from(std::initializer_list<std::pair<int, int>> terms) {
    GradedMultiplicity g;
    for (auto [d, c] : terms) g.add(d, c);
    return g;
  }

  friend bool operator==(const GradedMultiplicity&, const GradedMultiplicity&) = default;

 private:
  std::map<int, BigInt> coeffs_;
};

inline constexpr int kMaxWeylRank = 10;

inline void check_rank(int n) {
  if (n < 1) throw std::invalid_argument("rank n must be at least 1");
  if (n > kMaxWeylRank)
    throw std::out_of_range("rank n = " + std::to_string(n) + " exceeds the supported bound " + std::to_string(kMaxWeylRank) +
                            " (the Weyl group has n! elements)");
}

/// eps_i - eps_j for i < j, ordered lexicographically in (i, j).
inline std::vector<Weight> positive_roots(int n) {
  check_rank(n);
  std::vector<Weight> roots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Weight w{std::vector<int>(static_cast<std::size_t>(n), 0)};
      w.coords[static_cast<std::size_t>(i)] = 1;
      w.coords[static_cast<std::size_t>(j)] = -1;
      roots.push_back(std::move(w));
    }
  return roots;
}

namespace detail {

// Counts multisets of positive roots with a given sum, by number of roots.
// Works on prefix sums P_p = xi_1 + ... + xi_p: the root eps_i - eps_j lowers
// P_p by one for i <= p < j, and every P_p must reach exactly zero.
class KostantCounter {
 public:
  KostantCounter(int n, int k_max) : n_(n), k_max_(k_max) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) roots_.emplace_back(i, j);
  }

  std::vector<BigInt> count(const std::vector<int>& prefix) { return solve(0, prefix); }

 private:
  std::vector<BigInt> solve(std::size_t root, const std::vector<int>& prefix) {
    if (root == roots_.size()) {
      std::vector<BigInt> r(static_cast<std::size_t>(k_max_) + 1, 0);
      if (std::all_of(prefix.begin(), prefix.end(), [](int p) { return p == 0; })) r[0] = 1;
      return r;
    }
    auto key = std::make_pair(root, prefix);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const auto [i, j] = roots_[root];
    std::vector<BigInt> result(static_cast<std::size_t>(k_max_) + 1, 0);
    std::vector<int> rest = prefix;
    for (int mult = 0; mult <= k_max_; ++mult) {
      if (mult > 0) {
        bool ok = true;
        for (int p = i; p < j; ++p)
          if (--rest[static_cast<std::size_t>(p)] < 0) ok = false;
        if (!ok) break;
      }
      const auto sub = solve(root + 1, rest);
      for (int k = 0; k + mult <= k_max_; ++k) result[static_cast<std::size_t>(k + mult)] += sub[static_cast<std::size_t>(k)];
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

  int n_;
  int k_max_;
  std::vector<std::pair<int, int>> roots_;
  std::map<std::pair<std::size_t, std::vector<int>>, std::vector<BigInt>> memo_;
};

}  // namespace detail

/// Lusztig's q-analog of Kostant's partition function: the coefficient of
/// t^k counts multisets of k positive roots summing to xi (k <= k_max).
/// Zero outside the positive root cone, including whenever sum(xi) != 0.
inline GradedMultiplicity kostant_partition_q(int n, const Weight& xi, int k_max) {
  check_rank(n);
  if (static_cast<int>(xi.rank()) != n) throw std::invalid_argument("weight length does not match rank n");
  GradedMultiplicity out;
  if (k_max < 0 || xi.sum() != 0) return out;
  std::vector<int> prefix(static_cast<std::size_t>(n > 1 ? n - 1 : 0));
  int running = 0;
  for (std::size_t p = 0; p < prefix.size(); ++p) {
    running += xi.coords[p];
    if (running < 0) return out;
    prefix[p] = running;
  }
  const auto counts = detail::KostantCounter(n, k_max).count(prefix);
  for (std::size_t k = 0; k < counts.size(); ++k) out.add(static_cast<int>(k), counts[k]);
  return out;
}

struct SignedWeight {
  int sign;
  Weight weight;
  friend bool operator==(const SignedWeight&, const SignedWeight&) = default;
};

/// The n! pairs ((-1)^{l(w)}, w(lambda + rho) - rho).  Uses the integer shift
/// (n-1, ..., 1, 0) for rho; it differs from the half-sum of positive roots
/// by a multiple of (1, ..., 1), which every permutation fixes.
inline std::vector<SignedWeight> weyl_orbit_terms(int n, const Weight& lambda) {
  check_rank(n);
  if (static_cast<int>(lambda.rank()) != n) throw std::invalid_argument("weight length does not match rank n");
  if (!lambda.is_dominant()) throw std::invalid_argument("weight (" + to_string(lambda) + ") is not dominant");
  const auto un = static_cast<std::size_t>(n);
  std::vector<int> shifted(un);
  for (std::size_t i = 0; i < un; ++i) shifted[i] = lambda.coords[i] + static_cast<int>(un - 1 - i);
  std::vector<std::size_t> perm(un);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<SignedWeight> out;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < un; ++a)
      for (std::size_t b = a + 1; b < un; ++b)
        if (perm[a] > perm[b]) ++inversions;
    Weight w{std::vector<int>(un)};
    for (std::size_t i = 0; i < un; ++i) w.coords[i] = shifted[perm[i]] - static_cast<int>(un - 1 - i);
    out.push_back({inversions % 2 == 0 ? 1 : -1, std::move(w)});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Same terms computed with the half-integer rho = (1/2) sum of positive roots,
/// carried in doubled coordinates.  Used to check the integer shift.
inline std::vector<SignedWeight> weyl_orbit_terms_half_rho(int n, const Weight& lambda) {
  check_rank(n);
  if (!lambda.is_dominant()) throw std::invalid_argument("weight (" + to_string(lambda) + ") is not dominant");
  const auto un = static_cast<std::size_t>(n);
  std::vector<int> rho2(un, 0);  // 2 * rho
  for (const auto& r : positive_roots(n))
    for (std::size_t i = 0; i < un; ++i) rho2[i] += r.coords[i];
  std::vector<int> shifted2(un);
  for (std::size_t i = 0; i < un; ++i) shifted2[i] = 2 * lambda.coords[i] + rho2[i];
  std::vector<std::size_t> perm(un);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<SignedWeight> out;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < un; ++a)
      for (std::size_t b = a + 1; b < un; ++b)
        if (perm[a] > perm[b]) ++inversions;
    Weight w{std::vector<int>(un)};
    for (std::size_t i = 0; i < un; ++i) w.coords[i] = (shifted2[perm[i]] - rho2[i]) / 2;
    out.push_back({inversions % 2 == 0 ? 1 : -1, std::move(w)});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// m_lambda(t) = sum_w (-1)^{l(w)} P_t(w(lambda + rho) - rho), degrees <= d_max.
/// Weights with nonzero coordinate sum have no root-lattice terms and give 0.
inline GradedMultiplicity hesselink_multiplicity(int n, const Weight& lambda, int d_max) {
  const auto terms = weyl_orbit_terms(n, lambda);
  GradedMultiplicity out;
  if (lambda.sum() != 0) return out;
  for (const auto& [sign, xi] : terms) {
    GradedMultiplicity p = kostant_partition_q(n, xi, d_max);
    p *= sign;
    out += p;
  }
  return out;
}

/// Weyl dimension formula prod_{i<j} (l_i - l_j + j - i) / (j - i).
inline BigInt weyl_dimension(int n, const Weight& lambda) {
  check_rank(n);
  if (static_cast<int>(lambda.rank()) != n) throw std::invalid_argument("weight length does not match rank n");
  if (!lambda.is_dominant()) throw std::invalid_argument("weight (" + to_string(lambda) + ") is not dominant");
  BigInt num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= lambda.coords[static_cast<std::size_t>(i)] - lambda.coords[static_cast<std::size_t>(j)] + j - i;
      den *= j - i;
    }
  return num / den;
}

/// H_t(G, K) = sum over lambda in the spherical set of m_lambda(t).
inline GradedMultiplicity spherical_hilbert(int n, const std::vector<Weight>& spherical, int d_max) {
  GradedMultiplicity out;
  for (const auto& lambda : spherical) out += hesselink_multiplicity(n, lambda, d_max);
  return out;
}

/// All dominant weights of rank n with coordinates in [lo, hi] and sum zero.
inline std::vector<Weight> dominant_weights_in_box(int n, int lo, int hi) {
  std::vector<Weight> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int upper) -> void {
    if (static_cast<int>(cur.size()) == n) {
      if (std::accumulate(cur.begin(), cur.end(), 0) == 0) out.push_back(Weight{cur});
      return;
    }
    for (int v = upper; v >= lo; --v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, hi);
  return out;
}

}  // namespace lrsq
