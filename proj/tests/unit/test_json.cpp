#include <gtest/gtest.h>

#include <json.hpp>

#include "phipade/errors.hpp"
#include "phipade/json_io.hpp"
#include "reference.hpp"

using namespace phipade;

TEST(Json, SeriesRoundTrip) {
  const PowerSeries s = subtract_leading(quartic_rspt_series(5));
  const PowerSeries back = series_from_json(series_to_json(s));
  ASSERT_EQ(back.size(), s.size());
  for (std::size_t k = 0; k < s.size(); ++k) EXPECT_EQ(back[k].exact(), s[k].exact());
  EXPECT_EQ(back.transform.subtract.exact(), Rational(1, 2));
  EXPECT_EQ(back.transform.divide_power, 1);
  EXPECT_EQ(back.label, s.label);
}

TEST(Json, SeriesInputForms) {
  const PowerSeries plain = series_from_json("[1, \"-3/4\", 0.25]");
  ASSERT_EQ(plain.size(), 3u);
  EXPECT_EQ(plain[1].exact(), Rational(-3, 4));
  EXPECT_FALSE(plain[2].is_exact());
  const PowerSeries obj = series_from_json(
      R"({"coeffs": ["1/2", "3/4"], "transform": {"divide_power": 2, "power": 2}, "label": "x"})");
  EXPECT_EQ(obj.transform.power, 2);
  EXPECT_EQ(obj.label, "x");
}

TEST(Json, MalformedDocuments) {
  EXPECT_THROW(series_from_json("{"), ParseError);
  EXPECT_THROW(series_from_json(R"({"coeffs": ["a"]})"), ParseError);
  EXPECT_THROW(series_from_json(R"({"coeffs": [true]})"), ParseError);
  EXPECT_THROW(series_from_json("[]"), ParseError);
}

TEST(Json, ApproximantRoundTripEvaluatesTheSame) {
  const Context ctx(40);
  ScopedPrecision p(ctx);
  PhiSpec spec;
  spec.a = BigValue::ratio(2, 3);
  const auto exact = build(subtract_leading(quartic_rspt_series(3)), spec, 1, ctx);
  const auto exact_back = approximant_from_json(approximant_to_json(exact), ctx);
  ASSERT_TRUE(exact_back.pf.exact_poles);
  EXPECT_EQ(*exact_back.pf.exact_poles, *exact.pf.exact_poles);
  EXPECT_EQ(*exact_back.pf.exact_residues, *exact.pf.exact_residues);

  const auto ap = build(subtract_leading(quartic_rspt_series(5)), spec, 2, ctx);
  const std::string text = approximant_to_json(ap, 45);
  const auto back = approximant_from_json(text, ctx);
  EXPECT_EQ(back.n, 2);
  ASSERT_EQ(back.pf.poles.size(), 2u);
  for (std::size_t j = 0; j < 2; ++j)
    EXPECT_LT(relative_difference(back.pf.poles[j], ap.pf.poles[j]), ref::tol_digits(35));
  const Real g("3");
  EXPECT_LT(abs(evaluate_real(back, g, ctx) - evaluate_real(ap, g, ctx)), ref::tol_digits(30));

  const auto doc = nlohmann::json::parse(text);
  EXPECT_TRUE(doc.contains("poles"));
  EXPECT_TRUE(doc.contains("residues"));
  EXPECT_EQ(doc["spec"]["a"], "2/3");
}
