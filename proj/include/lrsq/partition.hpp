#pragma once

// Integer partitions, tuples of partitions, type vectors, and the
// centralizer orders z_lambda of the symmetric group.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bigint.hpp"

namespace lrsq {

/// A weakly decreasing sequence of positive integers.  Zero parts are
/// accepted on construction and stripped, so (2,1,0,0) == (2,1).
class Partition {
 public:
  Partition() = default;

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  /// Builds a partition from parts in any order.
  static Partition from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }

  int size() const noexcept {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }

  /// Part i, or 0 beyond the stored length.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  /// The parts padded with zeros to length n (n must be >= length()).
  std::vector<int> padded(std::size_t n) const {
    if (n < parts_.size()) throw std::invalid_argument("cannot pad partition to a shorter length");
    std::vector<int> v = parts_;
    v.resize(n, 0);
    return v;
  }

  /// Young-diagram containment.
  bool contains(const Partition& inner) const noexcept {
    if (inner.length() > length()) return false;
    for (std::size_t i = 0; i < inner.length(); ++i)
      if (inner.parts_[i] > parts_[i]) return false;
    return true;
  }

  Partition conjugate() const {
    std::vector<int> c;
    if (!parts_.empty()) {
      c.assign(static_cast<std::size_t>(parts_.front()), 0);
      for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(c));
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Dominance order: a dominates b when every partial sum of a is at least
/// the matching partial sum of b.  Only meaningful for equal sizes.
inline bool dominates(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return false;
  int sa = 0, sb = 0;
  std::size_t n = std::max(a.length(), b.length());
  for (std::size_t i = 0; i < n; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa < sb) return false;
  }
  return true;
}

/// An ordered finite sequence of partitions; empty entries are allowed.
class PartitionTuple {
 public:
  PartitionTuple() = default;
  PartitionTuple(std::initializer_list<Partition> entries) : entries_(entries) {}
  explicit PartitionTuple(std::vector<Partition> entries) : entries_(std::move(entries)) {}

  const std::vector<Partition>& entries() const noexcept { return entries_; }
  std::size_t count() const noexcept { return entries_.size(); }
  const Partition& operator[](std::size_t i) const { return entries_.at(i); }

  int total_size() const noexcept {
    int s = 0;
    for (const auto& p : entries_) s += p.size();
    return s;
  }

  friend bool operator==(const PartitionTuple&, const PartitionTuple&) = default;

 private:
  std::vector<Partition> entries_;
};

/// multiplicities[i-1] is the number of parts equal to i.
struct TypeVector {
  std::vector<int> multiplicities;

  int at(int i) const {
    if (i < 1 || static_cast<std::size_t>(i) > multiplicities.size()) return 0;
    return multiplicities[static_cast<std::size_t>(i - 1)];
  }

  friend bool operator==(const TypeVector&, const TypeVector&) = default;
};

inline TypeVector type_vector(const Partition& p) {
  TypeVector tv;
  if (!p.empty()) tv.multiplicities.assign(static_cast<std::size_t>(p[0]), 0);
  for (int part : p.parts()) ++tv.multiplicities[static_cast<std::size_t>(part - 1)];
  return tv;
}

inline Partition from_type_vector(const TypeVector& tv) {
  std::vector<int> parts;
  for (std::size_t i = tv.multiplicities.size(); i-- > 0;) {
    if (tv.multiplicities[i] < 0) throw std::invalid_argument("negative multiplicity in type vector");
    parts.insert(parts.end(), static_cast<std::size_t>(tv.multiplicities[i]), static_cast<int>(i + 1));
  }
  return Partition(std::move(parts));
}

/// z_lambda = prod_i v_i! * i^{v_i}: the centralizer order of a permutation
/// of cycle type lambda.
inline BigInt z_lambda(const Partition& p) {
  const TypeVector tv = type_vector(p);
  BigInt z = 1;
  for (std::size_t i = 0; i < tv.multiplicities.size(); ++i) {
    const auto v = static_cast<unsigned>(tv.multiplicities[i]);
    z *= factorial(v) * ipow(BigInt(i + 1), v);
  }
  return z;
}

/// |lambda|! / z_lambda.
inline BigInt conjugacy_class_size(const Partition& p) {
  return factorial(static_cast<unsigned>(p.size())) / z_lambda(p);
}

/// Sorted multiset union of all entries.
inline Partition concat(const PartitionTuple& tuple) {
  std::vector<int> parts;
  for (const auto& e : tuple.entries()) parts.insert(parts.end(), e.parts().begin(), e.parts().end());
  return Partition::from_unsorted(std::move(parts));
}

namespace detail {

inline void partitions_rec(int remaining, int max_part, std::size_t max_len, std::vector<int>& cur,
                           std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (cur.size() == max_len) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, max_len, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Every partition of n with at most max_length parts, each at most
/// max_part, in reverse-lexicographic order: (4), (3,1), (2,2), (2,1,1), ...
inline std::vector<Partition> partitions_of(int n, std::optional<int> max_length = std::nullopt,
                                            std::optional<int> max_part = std::nullopt) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be non-negative");
  if ((max_length && *max_length < 0) || (max_part && *max_part < 0))
    throw std::invalid_argument("partitions_of: bounds must be non-negative");
  std::vector<Partition> out;
  std::vector<int> cur;
  const std::size_t len = max_length ? static_cast<std::size_t>(*max_length) : static_cast<std::size_t>(n);
  detail::partitions_rec(n, max_part ? *max_part : n, len, cur, out);
  return out;
}

namespace detail {

inline void weak_compositions_rec(int remaining, std::size_t parts, std::vector<int>& cur,
                                  std::vector<std::vector<int>>& out) {
  if (cur.size() + 1 == parts) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int first = remaining; first >= 0; --first) {
    cur.push_back(first);
    weak_compositions_rec(remaining - first, parts, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// All length-m sequences of non-negative integers summing to d.
inline std::vector<std::vector<int>> weak_compositions(int d, int m) {
  if (d < 0 || m < 0) throw std::invalid_argument("weak_compositions: negative argument");
  std::vector<std::vector<int>> out;
  if (m == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur;
  detail::weak_compositions_rec(d, static_cast<std::size_t>(m), cur, out);
  return out;
}

/// All sequences of positive integers summing to d (2^{d-1} of them for d >= 1).
inline std::vector<std::vector<int>> compositions(int d) {
  std::vector<std::vector<int>> out;
  if (d == 0) {
    out.emplace_back();
    return out;
  }
  for (int first = 1; first <= d; ++first)
    for (auto rest : compositions(d - first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

// ---- text format: "3,2,1"; empty partition is "" or "0"; tuples joined by ';'

inline Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return Partition{};
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw std::invalid_argument("malformed partition '" + std::string(text) + "': bad part '" + std::string(tok) + "'");
    if (value < 0) throw std::invalid_argument("malformed partition '" + std::string(text) + "': negative part");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
    throw std::invalid_argument("malformed partition '" + std::string(text) + "': parts must be weakly decreasing");
  return Partition(std::move(parts));
}

inline PartitionTuple parse_partition_tuple(std::string_view text) {
  std::vector<Partition> entries;
  std::size_t pos = 0;
  while (true) {
    const std::size_t semi = text.find(';', pos);
    entries.push_back(parse_partition(text.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos)));
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  return PartitionTuple(std::move(entries));
}

inline std::string to_string(const Partition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s;
}

inline std::string to_string(const PartitionTuple& t) {
  std::string s;
  for (std::size_t i = 0; i < t.count(); ++i) {
    if (i) s += ';';
    s += to_string(t[i]);
  }
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << '(' << to_string(p) << ')'; }

}  // namespace lrsq
