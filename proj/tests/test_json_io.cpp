#include "agslice/json_io.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace agslice;
using json_io::json;

TEST(JsonIo, RationalStrings) {
  EXPECT_EQ(json_io::to_json(Rational(-6, 4)), "-3/2");
  EXPECT_EQ(json_io::to_json(Rational(5)), "5/1");
  EXPECT_EQ(json_io::rational_from_json(json("-3/2")), Rational(-3, 2));
  EXPECT_EQ(json_io::rational_from_json(json(7)), Rational(7));
  EXPECT_THROW(json_io::rational_from_json(json(1.5)), std::invalid_argument);
}

TEST(JsonIo, TPolyLayout) {
  const TPoly p = TPoly::monomial(Rational(2), 1) + TPoly::monomial(Rational(-1, 3), -1);
  const json j = json_io::to_json(p);
  EXPECT_EQ(j["shift"], 1);
  EXPECT_EQ(j["coeffs"], json::parse(R"({"0":"2/1","2":"-1/3"})"));
  EXPECT_TRUE(json_io::tpoly_from_json(j) == p);
  EXPECT_THROW(json_io::tpoly_from_json(json::parse(R"({"shift":0,"coeffs":{"-1":"1"}})")), std::invalid_argument);
  EXPECT_THROW(json_io::tpoly_from_json(json::parse(R"({"coeffs":{}})")), std::invalid_argument);
}

TEST(JsonIo, MatrixRoundTrips) {
  std::mt19937_64 rng(4);
  for (int it = 0; it < 20; ++it) {
    QMatrix x(3, 3);
    TMatrix m(2, 2);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) x(i, j) = testutil::draw_rational(rng, 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        m(i, j) = TPoly::monomial(testutil::draw_rational(rng, 3), testutil::draw(rng, 2)) +
                  TPoly::monomial(testutil::draw_rational(rng, 3), testutil::draw(rng, 2));
    EXPECT_TRUE(exactly_equal(json_io::qmatrix_from_json(json_io::to_json(x)), x));
    EXPECT_TRUE(exactly_equal(json_io::tmatrix_from_json(json_io::to_json(m)), m));
    EXPECT_EQ(json_io::dump(json_io::to_json(x)), json_io::dump(json_io::to_json(json_io::qmatrix_from_json(json_io::to_json(x)))));
  }
  EXPECT_THROW(json_io::qmatrix_from_json(json::parse("[[1,2],[3]]")), std::invalid_argument);
  EXPECT_THROW(json_io::qmatrix_from_json(json::parse("[]")), std::invalid_argument);
}

TEST(JsonIo, PolynomialKeys) {
  SymbolicPoly f = SymbolicPoly::variable(Entry{1, 2}) * SymbolicPoly::variable(Entry{2, 1}, 2);
  const json j = json_io::to_json(f);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["monomial"], json::parse(R"({"x_1_2":1,"x_2_1":2})"));
  EXPECT_EQ(j[0]["coeff"], "1/1");
  const json p = json_io::to_json(coord(2, 1, 3).scaled(Rational(1, 2)));
  EXPECT_EQ(p[0]["monomial"], json::parse(R"({"d_2_1_3":1})"));
  EXPECT_EQ(p[0]["coeff"], "1/2");
}
