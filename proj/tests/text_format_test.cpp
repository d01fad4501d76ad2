#include <gtest/gtest.h>

#include <sstream>

#include "test_support.hpp"

namespace bentkit {
namespace {

TEST(Hex, DigitZeroHoldsTheLastPoints) {
  EXPECT_EQ(to_hex(test::x1x2()), "8");
  EXPECT_EQ(to_hex(test::x1x2_x3x4()), "7888");
  EXPECT_EQ(to_hex(BooleanFunction::constant(1, true)), "3");
  EXPECT_EQ(to_hex(BooleanFunction::from_rule(3, [](Point x) { return x == 0; })), "01");
}

TEST(Hex, RoundTripsAcrossSizes) {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 12; ++n) {
    const auto f = test::random_table(n, rng);
    EXPECT_EQ(parse_hex(n, to_hex(f)), f) << n;
    EXPECT_EQ(parse_truth_table(to_truth_table_text(f)), f) << n;
  }
}

TEST(Hex, WhitespaceBetweenDigitsIsIgnored) {
  EXPECT_EQ(parse_truth_table("n=4\n78 88\n"), test::x1x2_x3x4());
  EXPECT_EQ(parse_truth_table("  n=4  \n7\n8\n8\n8"), test::x1x2_x3x4());
}

TEST(Hex, TruncatedInputNamesExpectedDigitCount) {
  try {
    parse_truth_table("n=4\n788\n");
    FAIL() << "no error";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("expected 4 hex digits"), std::string::npos) << e.what();
  }
}

TEST(Hex, ExtraBitsForTinyTablesRejected) {
  EXPECT_THROW(parse_hex(2, "1f"), FormatError);
  EXPECT_THROW(parse_hex(1, "4"), FormatError);
  EXPECT_NO_THROW(parse_hex(1, "2"));
}

TEST(Hex, BadCharacterReportsPosition) {
  try {
    parse_truth_table("n=4\n78g8\n");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(Hex, HeaderErrors) {
  EXPECT_THROW(parse_truth_table("4\n7888"), ParseError);
  EXPECT_THROW(parse_truth_table("n=\n7888"), ParseError);
  EXPECT_THROW(parse_truth_table("n=0\n0"), FormatError);
  EXPECT_THROW(parse_truth_table("n=31\n0"), FormatError);
  EXPECT_THROW(parse_truth_table("n=4 x\n7888"), ParseError);
}

TEST(Hex, ReadsFromStream) {
  std::istringstream in("n=2\n8\n");
  EXPECT_EQ(read_truth_table(in), test::x1x2());
}

TEST(AnfText, FormatsAndParses) {
  EXPECT_EQ(to_anf_text(truth_table_to_anf(test::x1x2_x3x4())), "x1*x2 + x3*x4");
  EXPECT_EQ(to_anf_text(AnfPolynomial::zero(3)), "0");
  EXPECT_EQ(to_anf_text(parse_anf("1 + x2 + x1*x3")), "x1*x3 + x2 + 1");
  EXPECT_EQ(parse_anf("x1*x2").variables(), 2);
  EXPECT_EQ(parse_anf("x1", 5).variables(), 5);
  EXPECT_EQ(parse_anf("0").variables(), 1);
}

TEST(AnfText, RepeatedTermsCancel) {
  EXPECT_EQ(to_anf_text(parse_anf("x1*x2 + x2*x1 + x3")), "x3");
  EXPECT_EQ(to_anf_text(parse_anf("1 + 1", 2)), "0");
}

TEST(AnfText, RoundTripsRandomPolynomials) {
  std::mt19937_64 rng(9);
  for (int n = 1; n <= 8; ++n) {
    const auto f = test::random_table(n, rng);
    const auto p = truth_table_to_anf(f);
    EXPECT_EQ(parse_anf(to_anf_text(p), n), p) << n;
  }
}

TEST(AnfText, Errors) {
  EXPECT_THROW(parse_anf(""), ParseError);
  EXPECT_THROW(parse_anf("x1 +"), ParseError);
  EXPECT_THROW(parse_anf("x0"), ParseError);
  EXPECT_THROW(parse_anf("x31"), ParseError);
  EXPECT_THROW(parse_anf("2"), ParseError);
  EXPECT_THROW(parse_anf("x1 - x2"), ParseError);
  EXPECT_THROW(parse_anf("x3", 2), ParseError);
  try {
    parse_anf("x1 +\n  y2");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
}

}  // namespace
}  // namespace bentkit
