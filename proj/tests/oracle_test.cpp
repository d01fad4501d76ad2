#include <gtest/gtest.h>

#include "test_support.hpp"

namespace bentkit {
namespace {

using test::bits_of;

TEST(NaiveWalsh, Examples) {
  EXPECT_EQ(oracle::naive_walsh(test::x1x2(), 3), -2);
  EXPECT_EQ(oracle::naive_walsh(BooleanFunction::zero(5), 0), 32);
  EXPECT_THROW(oracle::naive_walsh(BooleanFunction::zero(17), 0), ResourceError);
}

TEST(NaiveWalsh, AgreesWithFwhtUpToFourVariables) {
  for (int n = 1; n <= 4; ++n)
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << (1u << n)); ++t) {
      const auto f = BooleanFunction::from_words(n, {t});
      const auto s = walsh_spectrum(f);
      for (Point a = 0; a < f.size(); ++a) ASSERT_EQ(oracle::naive_walsh(f, a), s[a]);
    }
}

TEST(NaiveNonlinearity, Examples) {
  EXPECT_EQ(oracle::naive_nonlinearity(test::x1x2()), 1);
  EXPECT_EQ(oracle::naive_nonlinearity(affine_function({4, 9, true})), 0);
  EXPECT_THROW(oracle::naive_nonlinearity(BooleanFunction::zero(13)), ResourceError);
}

TEST(NaiveNonlinearity, AgreesWithSpectralOnAllFourVariableFunctions) {
  for (std::uint64_t t = 0; t < 65536; ++t) {
    const auto f = BooleanFunction::from_words(4, {t});
    ASSERT_EQ(oracle::naive_nonlinearity(f), nonlinearity(f));
  }
}

TEST(Enumerate, TwoVariables) {
  const auto s = oracle::enumerate_bent(2);
  EXPECT_EQ(s.total_functions, 16u);
  EXPECT_EQ(s.bent_count, 8u);
  for (const auto& f : s.bent_functions) EXPECT_EQ(hamming_weight(f) % 2, 1u);
  EXPECT_TRUE(s.counterexamples.empty());
}

TEST(Enumerate, FourVariables) {
  const auto s = oracle::enumerate_bent(4, 2);
  EXPECT_EQ(s.total_functions, 65536u);
  EXPECT_EQ(s.bent_count, 896u);
  EXPECT_TRUE(s.counterexamples.empty());
  EXPECT_EQ(s.fast_path_mismatches, 0u);
  EXPECT_EQ(s.bent_weights, (std::map<std::uint64_t, std::uint64_t>{{6, 448}, {10, 448}}));
  EXPECT_EQ(s.bent_nonlinearities, (std::map<std::int64_t, std::uint64_t>{{6, 896}}));
  EXPECT_EQ(s.even_balanced_count + s.odd_balanced_count - s.both_balanced_count, 896u);
  // Independent scan from the test oracle.
  const auto reference = test::all_bent(4);
  ASSERT_EQ(reference.size(), s.bent_functions.size());
  for (std::size_t i = 0; i < reference.size(); ++i) EXPECT_EQ(reference[i], s.bent_functions[i]);
}

TEST(Enumerate, ThreadCountDoesNotChangeResult) {
  const auto a = oracle::enumerate_bent(4, 1), b = oracle::enumerate_bent(4, 3);
  EXPECT_EQ(a.bent_functions, b.bent_functions);
  EXPECT_EQ(a.even_balanced_count, b.even_balanced_count);
}

TEST(Enumerate, UnsupportedN) {
  EXPECT_THROW(oracle::enumerate_bent(6), DomainError);
  EXPECT_THROW(oracle::enumerate_bent(3), DomainError);
}

TEST(LiteralTranscription, FirstFormMatchesExtend) {
  EXPECT_EQ(oracle::literal_algorithm1(test::x1x2()), extend(test::x1x2()));
  for (int m : {2, 4})
    for (const auto& g : test::all_bent(m)) {
      ASSERT_EQ(oracle::literal_algorithm1(g), extend(g)) << to_hex(g);
      EXPECT_TRUE(oracle::cross_check_algorithm1(g).empty());
    }
  EXPECT_EQ(oracle::literal_algorithm1(test::x1x2(), 8), build_chain(test::x1x2(), 8).final_function);
}

TEST(LiteralTranscription, SecondFormMatchesExtendWithOffset) {
  for (const auto& g : test::all_bent(2))
    for (Point b = 0; b < 16; ++b) {
      const auto off = LinearOffset::unpack(2, b);
      ASSERT_EQ(oracle::literal_algorithm2(g, off), extend_with_offset(g, off)) << to_hex(g) << " b=" << b;
    }
  for (Point b = 0; b < 64; ++b) {
    const auto off = LinearOffset::unpack(4, b);
    ASSERT_EQ(oracle::literal_algorithm2(test::x1x2_x3x4(), off), extend_with_offset(test::x1x2_x3x4(), off));
  }
  EXPECT_EQ(oracle::literal_algorithm2(test::x1x2(), LinearOffset::unpack(2, 0)),
            oracle::literal_algorithm1(test::x1x2()));
}

TEST(LiteralTranscription, DiscrepancyReportNamesBlock) {
  EXPECT_EQ(oracle::algorithm2_block({2, true, 0, false}), "a0=1,a=0");
  EXPECT_TRUE(oracle::cross_check_algorithm2(test::x1x2(), LinearOffset::unpack(2, 0b1001)).empty());
}

TEST(LiteralTranscription, Preconditions) {
  EXPECT_THROW(oracle::literal_algorithm1(BooleanFunction::zero(2)), PreconditionError);
  EXPECT_THROW(oracle::literal_algorithm1(test::x1x2(), 5), DomainError);
  EXPECT_THROW(oracle::literal_algorithm2(test::x1x2(), LinearOffset::unpack(4, 0)), DomainError);
}

}  // namespace
}  // namespace bentkit
