#include <gtest/gtest.h>

#include "test_support.hpp"

namespace bentkit {
namespace {

using test::bits_of;

TEST(Walsh, X1X2Spectrum) {
  const auto s = walsh_spectrum(test::x1x2());
  EXPECT_EQ(s.values, (std::vector<std::int32_t>{2, 2, 2, -2}));
}

TEST(Walsh, ZeroFunctionIsDeltaAtZero) {
  const auto s = walsh_spectrum(BooleanFunction::zero(3));
  EXPECT_EQ(s[0], 8);
  for (Point a = 1; a < 8; ++a) EXPECT_EQ(s[a], 0);
}

TEST(Walsh, LinearFunctionPeaksAtItsVector) {
  for (int n : {3, 7}) {
    const Point a = 5;
    const auto s = walsh_spectrum(affine_function({n, a, false}));
    for (Point b = 0; b < point_count(n); ++b) EXPECT_EQ(s[b], b == a ? std::int32_t(point_count(n)) : 0);
  }
}

TEST(Walsh, MatchesDefinitionExhaustivelyUpToFourVariables) {
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t size = std::uint64_t{1} << n;
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << size); ++t) {
      const auto f = BooleanFunction::from_words(n, {t});
      const auto bits = bits_of(f);
      const auto s = walsh_spectrum(f);
      for (Point a = 0; a < size; ++a) ASSERT_EQ(s[a], test::definitional_walsh(bits, a));
    }
  }
}

TEST(Walsh, MatchesDefinitionOnRandomLargerFunctions) {
  std::mt19937_64 rng(21);
  for (int n : {6, 8, 10}) {
    for (int i = 0; i < 5; ++i) {
      const auto f = test::random_table(n, rng);
      const auto bits = bits_of(f);
      const auto s = walsh_spectrum(f);
      for (Point a = 0; a < f.size(); ++a) ASSERT_EQ(s[a], test::definitional_walsh(bits, a));
    }
  }
}

TEST(Nonlinearity, Examples) {
  EXPECT_EQ(nonlinearity(test::x1x2()), 1);
  EXPECT_EQ(nonlinearity(test::x1x2_x3x4()), 6);
  EXPECT_EQ(bent_nonlinearity(4), 6);
  EXPECT_EQ(bent_nonlinearity(10), 496);
  for (Point a = 0; a < 32; ++a)
    for (bool c : {false, true}) EXPECT_EQ(nonlinearity(affine_function({5, a, c})), 0);
}

TEST(Nonlinearity, MatchesDistanceUpToFourVariables) {
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t size = std::uint64_t{1} << n;
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << size); ++t) {
      const auto f = BooleanFunction::from_words(n, {t});
      ASSERT_EQ(nonlinearity(f), test::distance_nonlinearity(bits_of(f))) << to_hex(f);
    }
  }
}

TEST(Bent, Examples) {
  EXPECT_TRUE(is_bent(test::x1x2()));
  EXPECT_FALSE(is_bent(BooleanFunction::zero(2)));
  EXPECT_TRUE(is_bent(test::x1x2_x3x4()));
  EXPECT_FALSE(is_bent(BooleanFunction::zero(3)));
}

TEST(Bent, RequireBentNamesSpectralPosition) {
  try {
    require_bent(BooleanFunction::zero(4), "test");
    FAIL() << "no error";
  } catch (const PreconditionError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("W(0) = 16"), std::string::npos) << what;
    EXPECT_NE(what.find("+-4"), std::string::npos) << what;
  }
  EXPECT_NO_THROW(require_bent(test::x1x2(), "test"));
}

TEST(Bent, FirstNonFlatPosition) {
  EXPECT_FALSE(first_non_flat_position(walsh_spectrum(test::x1x2())).has_value());
  const auto f = test::x1x2_x3x4() ^ BooleanFunction::from_rule(4, [](Point x) { return x == 5; });
  EXPECT_TRUE(first_non_flat_position(walsh_spectrum(f)).has_value());
}

}  // namespace
}  // namespace bentkit
