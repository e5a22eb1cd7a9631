#pragma once

// Littlewood-Richardson coefficients by the tableau rule, their iterated
// multi-factor version, Kostka numbers, and restricted sums of squares.

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "bigint.hpp"
#include "partition.hpp"

namespace lrsq {

namespace detail {

// Backtracking over fillings of lambda/mu in reverse reading order (rows
// top to bottom, each row right to left).  Rows weakly increase left to
// right, columns strictly increase downward, and every prefix of the
// reading word is a lattice word with total content nu.
class LRTableauCounter {
 public:
  LRTableauCounter(const Partition& lambda, const Partition& mu, const Partition& nu)
      : lambda_(lambda), mu_(mu), nu_(nu), used_(nu.length(), 0), grid_(lambda.length()) {
    for (std::size_t r = 0; r < lambda.length(); ++r) grid_[r].assign(static_cast<std::size_t>(lambda[r]), 0);
  }

  std::uint64_t count() { return fill(0, lambda_[0] - 1); }

 private:
  std::uint64_t fill(std::size_t row, int col) {
    if (row == lambda_.length()) return 1;
    if (col < mu_[row]) return row + 1 == lambda_.length() ? 1 : fill(row + 1, lambda_[row + 1] - 1);
    const auto c = static_cast<std::size_t>(col);
    int hi = static_cast<int>(nu_.length());
    if (col + 1 < lambda_[row]) hi = std::min(hi, grid_[row][c + 1]);
    int lo = 1;
    if (row > 0 && col >= mu_[row - 1]) lo = grid_[row - 1][c] + 1;
    // Lattice words never put a value larger than row + 1 in row `row`.
    hi = std::min(hi, static_cast<int>(row) + 1);
    std::uint64_t total = 0;
    for (int v = lo; v <= hi; ++v) {
      const auto vi = static_cast<std::size_t>(v - 1);
      if (used_[vi] == nu_[vi]) continue;
      if (v > 1 && used_[vi] + 1 > used_[vi - 1]) continue;
      ++used_[vi];
      grid_[row][c] = v;
      total += fill(row, col - 1);
      --used_[vi];
    }
    grid_[row][c] = 0;
    return total;
  }

  const Partition& lambda_;
  const Partition& mu_;
  const Partition& nu_;
  std::vector<int> used_;
  std::vector<std::vector<int>> grid_;
};

struct LRCache {
  std::shared_mutex mutex;
  std::map<std::tuple<Partition, Partition, Partition>, BigInt> table;
};

inline LRCache& lr_cache() {
  static LRCache cache;
  return cache;
}

}  // namespace detail

/// c^lambda_{mu nu}: the number of LR tableaux of shape lambda/mu and content nu.
/// Zero unless mu and nu fit inside lambda and |lambda| = |mu| + |nu|.
inline BigInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu)) return 0;
  if (nu.empty() || mu.empty()) return 1;  // lambda == mu or lambda == nu by the size check
  auto key = std::make_tuple(lambda, mu, nu);
  auto& cache = detail::lr_cache();
  {
    std::shared_lock lock(cache.mutex);
    if (auto it = cache.table.find(key); it != cache.table.end()) return it->second;
  }
  const BigInt value = detail::LRTableauCounter(lambda, mu, nu).count();
  // Values are deterministic, so a concurrent duplicate insert is harmless.
  std::unique_lock lock(cache.mutex);
  cache.table.try_emplace(std::move(key), value);
  return value;
}

/// Decomposition of the tensor product of F^{mu^(1)} x ... x F^{mu^(m)} into
/// irreducibles: maps lambda to c^lambda_mu.  Intermediate shapes longer than
/// max_length are pruned (they can only feed into lambda of at least that length).
inline std::map<Partition, BigInt> lr_expansion(const PartitionTuple& mus, std::optional<int> max_length = std::nullopt) {
  std::map<Partition, BigInt> dist{{Partition{}, BigInt(1)}};
  for (const auto& mu : mus.entries()) {
    if (mu.empty()) continue;
    if (max_length && static_cast<int>(mu.length()) > *max_length) return {};
    std::map<Partition, BigInt> next;
    for (const auto& [kappa, weight] : dist) {
      for (const auto& shape : partitions_of(kappa.size() + mu.size(), max_length)) {
        if (!shape.contains(kappa) || !shape.contains(mu)) continue;
        const BigInt c = lr_coefficient(shape, kappa, mu);
        if (c != 0) next[shape] += weight * c;
      }
    }
    dist = std::move(next);
  }
  return dist;
}

/// Generalized coefficient c^lambda_mu for any number of tensor factors.
inline BigInt lr_multi(const Partition& lambda, const PartitionTuple& mus) {
  if (lambda.size() != mus.total_size()) return 0;
  const auto dist = lr_expansion(mus, static_cast<int>(lambda.length()));
  auto it = dist.find(lambda);
  return it == dist.end() ? BigInt(0) : it->second;
}

namespace detail {

inline BigInt kostka_rec(const Partition& lambda, const std::vector<int>& content, std::size_t upto) {
  if (upto == 0) return lambda.empty() ? 1 : 0;
  const int strip = content[upto - 1];
  // Remove a horizontal strip of size `strip`: kappa_i in [lambda_{i+1}, lambda_i].
  BigInt total = 0;
  std::vector<int> kappa(lambda.length());
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == lambda.length()) {
      if (left == 0) total += kostka_rec(Partition(kappa), content, upto - 1);
      return;
    }
    const int hi = lambda[i];
    const int lo = lambda[i + 1];
    for (int k = hi; k >= lo && hi - k <= left; --k) {
      kappa[i] = k;
      self(self, i + 1, left - (hi - k));
    }
  };
  rec(rec, 0, strip);
  return total;
}

}  // namespace detail

/// K_{lambda nu}: semistandard tableaux of shape lambda and content nu,
/// counted as chains of horizontal strips.
inline BigInt kostka(const Partition& lambda, const Partition& nu) {
  if (lambda.size() != nu.size()) return 0;
  return detail::kostka_rec(lambda, nu.parts(), nu.length());
}

/// Length restrictions for restricted LR-square sums.
struct LengthBounds {
  std::optional<int> lambda_max;  ///< l(lambda) <= n
  std::vector<int> mu_max;        ///< l(mu^(j)) <= n_j; empty means unbounded
};

namespace detail {

inline void sum_squares_rec(const std::vector<int>& profile, const LengthBounds& bounds, std::size_t slot,
                            const std::map<Partition, BigInt>& dist, BigInt& total) {
  if (dist.empty()) return;
  if (slot == profile.size()) {
    for (const auto& [lambda, c] : dist) total += c * c;
    return;
  }
  std::optional<int> mu_len;
  if (!bounds.mu_max.empty()) mu_len = bounds.mu_max[slot];
  for (const auto& mu : partitions_of(profile[slot], mu_len)) {
    std::map<Partition, BigInt> next;
    if (mu.empty()) {
      next = dist;
    } else {
      for (const auto& [kappa, weight] : dist) {
        for (const auto& shape : partitions_of(kappa.size() + mu.size(), bounds.lambda_max)) {
          if (!shape.contains(kappa) || !shape.contains(mu)) continue;
          const BigInt c = lr_coefficient(shape, kappa, mu);
          if (c != 0) next[shape] += weight * c;
        }
      }
    }
    sum_squares_rec(profile, bounds, slot + 1, next, total);
  }
}

}  // namespace detail

/// sum over tuples mu with |mu^(j)| = profile[j] and over lambda of (c^lambda_mu)^2,
/// honoring the length bounds.
inline BigInt sum_lr_squared_profile(const std::vector<int>& profile, const LengthBounds& bounds = {}) {
  if (!bounds.mu_max.empty() && bounds.mu_max.size() != profile.size())
    throw std::invalid_argument("sum_lr_squared: need one mu length bound per tensor factor");
  for (int d : profile)
    if (d < 0) throw std::invalid_argument("sum_lr_squared: negative degree in profile");
  BigInt total = 0;
  detail::sum_squares_rec(profile, bounds, 0, {{Partition{}, BigInt(1)}}, total);
  return total;
}

/// Same sum over lambda |- d and m-tuples, either with the given degree
/// profile or summed over every weak m-composition of d.
inline BigInt sum_lr_squared(int d, int m, const std::optional<std::vector<int>>& profile = std::nullopt,
                             const LengthBounds& bounds = {}) {
  if (d < 0 || m < 1) throw std::invalid_argument("sum_lr_squared: need d >= 0 and m >= 1");
  if (profile) {
    if (static_cast<int>(profile->size()) != m) throw std::invalid_argument("sum_lr_squared: profile length must equal m");
    int s = 0;
    for (int x : *profile) s += x;
    if (s != d) throw std::invalid_argument("sum_lr_squared: profile must sum to d");
    return sum_lr_squared_profile(*profile, bounds);
  }
  BigInt total = 0;
  for (const auto& p : weak_compositions(d, m)) total += sum_lr_squared_profile(p, bounds);
  return total;
}

}  // namespace lrsq
