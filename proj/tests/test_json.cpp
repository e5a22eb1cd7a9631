#include <gtest/gtest.h>

#include "lrsq/hilbert.hpp"
#include "lrsq/json_io.hpp"

using namespace lrsq;

TEST(Json, SeriesSchema) {
  const auto s = stable_block_series(2, 2);
  const auto j = to_json(s);
  EXPECT_EQ(j.dump(), R"({"max_degree":2,"terms":[{"coeff":"1","exp":[0]},{"coeff":"2","exp":[1]},{"coeff":"6","exp":[2]}],"vars":["t"]})");
}

TEST(Json, HugeCoefficientsStayExact) {
  TruncatedSeries s(1, 1);
  const BigInt huge = from_decimal("123456789012345678901234567890");
  s.add_term({1}, huge);
  const auto back = series_from_json(Json::parse(to_json(s).dump()));
  EXPECT_EQ(back, s);
  EXPECT_EQ(back.coefficient(1), huge);
}

TEST(Json, RoundTripMultivariate) {
  const auto s = main_formula_lhs(2, 4);
  EXPECT_EQ(series_from_json(to_json(s)), s);
  EXPECT_EQ(series_from_json(to_json(s)).names(), (std::vector<std::string>{"t1", "t2"}));
}

TEST(Json, Report) {
  const auto r = verify_main_formula(1, 3);
  const auto j = to_json(r);
  EXPECT_TRUE(j.at("equal").get<bool>());
  EXPECT_TRUE(j.at("first_discrepancy").is_null());
  EXPECT_FALSE(j.contains("alternate"));
  const auto bad = compare_series(stable_block_series(2, 3), stable_block_series(3, 3));
  EXPECT_EQ(to_json(bad).at("first_discrepancy"), Json::array({1}));
}
