#pragma once

// Formal power series in a fixed number of variables with exact integer
// coefficients, truncated by total degree.

#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"

namespace lrsq {

using Exponent = std::vector<int>;

inline int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Sum of c_e x^e over exponent vectors e with total degree <= max_degree.
/// Zero coefficients are never stored; every operation is exact modulo
/// terms of total degree > max_degree.
class TruncatedSeries {
 public:
  TruncatedSeries(int num_vars, int max_degree, std::vector<std::string> names = {})
      : num_vars_(num_vars), max_degree_(max_degree), names_(std::move(names)) {
    if (num_vars < 1) throw std::invalid_argument("series needs at least one variable");
    if (max_degree < 0) throw std::invalid_argument("series truncation degree must be non-negative");
    if (names_.empty()) names_ = default_names(num_vars);
    if (static_cast<int>(names_.size()) != num_vars) throw std::invalid_argument("series variable-name count mismatch");
  }

  static std::vector<std::string> default_names(int num_vars) {
    if (num_vars == 1) return {"t"};
    std::vector<std::string> n;
    for (int i = 1; i <= num_vars; ++i) n.push_back("t" + std::to_string(i));
    return n;
  }

  static TruncatedSeries constant(int num_vars, int max_degree, const BigInt& c, std::vector<std::string> names = {}) {
    TruncatedSeries s(num_vars, max_degree, std::move(names));
    s.add_term(Exponent(static_cast<std::size_t>(num_vars), 0), c);
    return s;
  }

  static TruncatedSeries one(int num_vars, int max_degree, std::vector<std::string> names = {}) {
    return constant(num_vars, max_degree, 1, std::move(names));
  }

  /// c * x^exp (dropped when exp lies beyond the truncation).
  static TruncatedSeries monomial(int num_vars, int max_degree, const Exponent& exp, const BigInt& c = 1,
                                  std::vector<std::string> names = {}) {
    TruncatedSeries s(num_vars, max_degree, std::move(names));
    s.add_term(exp, c);
    return s;
  }

  /// The single variable x_i (0-based), raised to power `power`.
  static TruncatedSeries variable(int num_vars, int max_degree, int i, int power = 1, std::vector<std::string> names = {}) {
    Exponent e(static_cast<std::size_t>(num_vars), 0);
    e.at(static_cast<std::size_t>(i)) = power;
    return monomial(num_vars, max_degree, e, 1, std::move(names));
  }

  int num_vars() const noexcept { return num_vars_; }
  int max_degree() const noexcept { return max_degree_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::map<Exponent, BigInt>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds c * x^exp; terms beyond the truncation degree are discarded.
  void add_term(const Exponent& exp, const BigInt& c) {
    check_exponent(exp);
    if (c == 0 || total_degree(exp) > max_degree_) return;
    auto [it, inserted] = terms_.try_emplace(exp, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Exact coefficient; asking for a degree beyond the truncation is an error
  /// because the value is unknown, not zero.
  BigInt coefficient(const Exponent& exp) const {
    check_exponent(exp);
    if (total_degree(exp) > max_degree_)
      throw std::out_of_range("coefficient requested at degree " + std::to_string(total_degree(exp)) +
                              " beyond truncation degree " + std::to_string(max_degree_));
    auto it = terms_.find(exp);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  /// Univariate convenience: coefficient of t^d.
  BigInt coefficient(int d) const {
    if (num_vars_ != 1) throw std::invalid_argument("scalar-degree coefficient needs a univariate series");
    return coefficient(Exponent{d});
  }

  /// Coefficients of t^0..t^max_degree for a univariate series.
  std::vector<BigInt> univariate_coefficients() const {
    std::vector<BigInt> out;
    for (int d = 0; d <= max_degree_; ++d) out.push_back(coefficient(d));
    return out;
  }

  /// Lowest total degree among stored terms of (*this - constant term).
  std::optional<int> min_nonconstant_degree() const {
    std::optional<int> best;
    for (const auto& [e, c] : terms_) {
      const int deg = total_degree(e);
      if (deg > 0 && (!best || deg < *best)) best = deg;
    }
    return best;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    check_same_shape(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    check_same_shape(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  TruncatedSeries& operator*=(const BigInt& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= k;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const BigInt& k) { return a *= k; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }

  /// Exact product truncated to the common degree.
  static TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_same_shape(b);
    TruncatedSeries r(a.num_vars_, a.max_degree_, a.names_);
    Exponent sum(static_cast<std::size_t>(a.num_vars_));
    for (const auto& [ea, ca] : a.terms_) {
      const int da = total_degree(ea);
      for (const auto& [eb, cb] : b.terms_) {
        if (da + total_degree(eb) > a.max_degree_) continue;
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + eb[i];
        r.add_term(sum, ca * cb);
      }
    }
    return r;
  }

  /// Same shape (variable count and truncation degree) and identical terms.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.num_vars_ == b.num_vars_ && a.max_degree_ == b.max_degree_ && a.terms_ == b.terms_;
  }

  void check_same_shape(const TruncatedSeries& o) const {
    if (num_vars_ != o.num_vars_ || max_degree_ != o.max_degree_)
      throw std::invalid_argument("series shape mismatch: (" + std::to_string(num_vars_) + " vars, degree " +
                                  std::to_string(max_degree_) + ") vs (" + std::to_string(o.num_vars_) +
                                  " vars, degree " + std::to_string(o.max_degree_) + ")");
  }

 private:
  void check_exponent(const Exponent& exp) const {
    if (static_cast<int>(exp.size()) != num_vars_) throw std::invalid_argument("exponent length does not match variable count");
    for (int x : exp)
      if (x < 0) throw std::invalid_argument("negative exponent in power series");
  }

  int num_vars_;
  int max_degree_;
  std::vector<std::string> names_;
  std::map<Exponent, BigInt> terms_;
};

/// f^e by repeated squaring.
inline TruncatedSeries power(const TruncatedSeries& f, unsigned long long e) {
  TruncatedSeries r = TruncatedSeries::one(f.num_vars(), f.max_degree(), f.names());
  TruncatedSeries b = f;
  while (e) {
    if (e & 1ull) r = r * b;
    e >>= 1ull;
    if (e) b = b * b;
  }
  return r;
}

/// 1/(1-f) = sum_{u>=0} f^u for f without constant term.
inline TruncatedSeries inverse_one_minus(const TruncatedSeries& f) {
  if (f.coefficient(Exponent(static_cast<std::size_t>(f.num_vars()), 0)) != 0)
    throw std::domain_error("inverse_one_minus: argument has a nonzero constant term");
  TruncatedSeries result = TruncatedSeries::one(f.num_vars(), f.max_degree(), f.names());
  TruncatedSeries term = result;
  // f^u starts at degree >= u, so u <= max_degree suffices.
  for (int u = 1; u <= f.max_degree(); ++u) {
    term = term * f;
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

/// prod_{k=1}^{max_degree} factor(k).  Each factor must be 1 + (terms of total
/// degree >= k), which makes the infinite product converge coefficient-wise
/// and the finite product exact to max_degree.
inline TruncatedSeries product_over_k(const std::function<TruncatedSeries(int)>& factor, int num_vars, int max_degree,
                                      std::vector<std::string> names = {}) {
  TruncatedSeries result = TruncatedSeries::one(num_vars, max_degree, std::move(names));
  const Exponent zero(static_cast<std::size_t>(num_vars), 0);
  for (int k = 1; k <= max_degree; ++k) {
    TruncatedSeries f = factor(k);
    result.check_same_shape(f);
    if (f.coefficient(zero) != 1)
      throw std::domain_error("product_over_k: factor " + std::to_string(k) + " does not have constant term 1");
    if (auto low = f.min_nonconstant_degree(); low && *low < k)
      throw std::domain_error("product_over_k: factor " + std::to_string(k) + " differs from 1 at degree " +
                              std::to_string(*low) + " < " + std::to_string(k));
    result = result * f;
  }
  return result;
}

/// Replaces variable i of f by the monomial images[i] in a new set of
/// target variables, truncating at target_degree.
inline TruncatedSeries substitute(const TruncatedSeries& f, const std::vector<Exponent>& images, int target_vars,
                                  int target_degree, std::vector<std::string> target_names = {}) {
  if (static_cast<int>(images.size()) != f.num_vars())
    throw std::invalid_argument("substitute: need one image per source variable");
  int min_image_degree = -1;
  for (const auto& img : images) {
    if (static_cast<int>(img.size()) != target_vars) throw std::invalid_argument("substitute: image has wrong length");
    const int deg = total_degree(img);
    if (deg <= 0) throw std::domain_error("substitute: image monomial must have positive total degree");
    if (min_image_degree < 0 || deg < min_image_degree) min_image_degree = deg;
  }
  // Terms that f has already dropped land at degree >= (D_f + 1) * min_image_degree.
  if (target_degree >= (f.max_degree() + 1) * min_image_degree)
    throw std::domain_error("substitute: target degree " + std::to_string(target_degree) +
                            " exceeds what the source truncation determines");
  TruncatedSeries r(target_vars, target_degree, std::move(target_names));
  Exponent out(static_cast<std::size_t>(target_vars));
  for (const auto& [e, c] : f.terms()) {
    std::fill(out.begin(), out.end(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = 0; j < out.size(); ++j) out[j] += e[i] * images[i][j];
    r.add_term(out, c);
  }
  return r;
}

/// The lexicographically first exponent at which a and b differ.
inline std::optional<Exponent> first_discrepancy(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_same_shape(b);
  auto ia = a.terms().begin(), ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first)) return ia->first;
    if (ia == a.terms().end() || ib->first < ia->first) return ib->first;
    if (ia->second != ib->second) return ia->first;
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

/// Outcome of comparing independently computed sides of an identity.  Some
/// identities have a third expression; `alternate` then holds it and must
/// agree with lhs as well.
struct IdentityReport {
  TruncatedSeries lhs;
  TruncatedSeries rhs;
  bool equal = false;
  std::optional<Exponent> first_discrepancy;
  std::optional<TruncatedSeries> alternate;
};

inline IdentityReport compare_series(TruncatedSeries lhs, TruncatedSeries rhs,
                                     std::optional<TruncatedSeries> alternate = std::nullopt) {
  auto diff = first_discrepancy(lhs, rhs);
  if (!diff && alternate) diff = first_discrepancy(lhs, *alternate);
  return IdentityReport{std::move(lhs), std::move(rhs), !diff.has_value(), std::move(diff), std::move(alternate)};
}

}  // namespace lrsq
