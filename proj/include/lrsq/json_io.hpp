#pragma once

// JSON encodings.  Integers are always decimal strings; nlohmann's default
// std::map object type keeps keys sorted, so dumps are deterministic.

#include <nlohmann/json.hpp>

#include "bigint.hpp"
#include "hesselink.hpp"
#include "series.hpp"

namespace lrsq {

using Json = nlohmann::json;

inline Json to_json(const BigInt& v) { return to_decimal(v); }

inline Json to_json(const TruncatedSeries& s) {
  Json terms = Json::array();
  for (const auto& [exp, c] : s.terms()) terms.push_back({{"exp", exp}, {"coeff", to_decimal(c)}});
  return {{"vars", s.names()}, {"max_degree", s.max_degree()}, {"terms", std::move(terms)}};
}

inline Json to_json(const IdentityReport& r) {
  Json j{{"equal", r.equal},
         {"first_discrepancy", r.first_discrepancy ? Json(*r.first_discrepancy) : Json(nullptr)},
         {"lhs", to_json(r.lhs)},
         {"rhs", to_json(r.rhs)}};
  if (r.alternate) j["alternate"] = to_json(*r.alternate);
  return j;
}

inline Json to_json(const GradedMultiplicity& g) {
  Json terms = Json::array();
  for (const auto& [d, c] : g.coeffs()) terms.push_back({{"exp", {d}}, {"coeff", to_decimal(c)}});
  return {{"vars", {"t"}}, {"terms", std::move(terms)}};
}

/// Inverse of to_json for series.
inline TruncatedSeries series_from_json(const Json& j) {
  const auto names = j.at("vars").get<std::vector<std::string>>();
  TruncatedSeries s(static_cast<int>(names.size()), j.at("max_degree").get<int>(), names);
  for (const auto& t : j.at("terms")) s.add_term(t.at("exp").get<Exponent>(), from_decimal(t.at("coeff").get<std::string>()));
  return s;
}

}  // namespace lrsq
