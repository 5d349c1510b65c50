#include "binsum/binomial_sum.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace binsum;

namespace {

Rational q(long num, long den) { return Rational(BigInt(num), BigInt(den)); }

// The r = 1..6 expansions as printed, leading coefficient first.
const std::vector<std::vector<long>> kPrintedExpansions{
    {1},
    {-2, 2},
    {3, -6, 3},
    {-4, 12, -12, 4},
    {5, -20, 30, -20, 5},
    {-6, 30, -60, 60, -30, 6},
};

}  // namespace

TEST(Direct, Examples) {
  for (std::uint64_t r : {1, 2, 7, 1000}) EXPECT_EQ(s_direct(0, r).value, Rational(1));
  EXPECT_EQ(s_direct(1, 1).value, q(3, 2));
  EXPECT_EQ(s_direct(2, 2).value, q(17, 6));
  EXPECT_EQ(s_direct(2, 3).value, q(31, 10));
  EXPECT_EQ(s_direct(2, 3).method, SumMethod::Direct);
}

TEST(Direct, ZeroRIsDomainError) { EXPECT_THROW(s_direct(3, 0), std::domain_error); }

TEST(Lemma, Examples) {
  EXPECT_EQ(s_lemma(3, 1).value, q(15, 4));
  EXPECT_EQ(s_lemma(2, 2).value, q(17, 6));
  EXPECT_EQ(s_lemma(1, 2).value, q(5, 3));
  EXPECT_EQ(s_lemma(1, 2).method, SumMethod::Lemma);
  EXPECT_THROW(s_lemma(0, 2), std::domain_error);
  EXPECT_THROW(s_lemma(2, 0), std::domain_error);
}

TEST(SmallNForm, Examples) {
  EXPECT_EQ(s_small_n_form(1, 4).value, q(9, 5));
  EXPECT_EQ(s_small_n_form(2, 3).value, q(31, 10));
  EXPECT_EQ(s_small_n_form(2, 2).value, q(17, 6));
  EXPECT_EQ(s_small_n_form(2, 2).method, SumMethod::SmallNForm);
}

TEST(Complement, Examples) {
  EXPECT_EQ(t_complement(2, 1), q(5, 3));
  EXPECT_EQ(t_complement(1, 1), q(1, 2));
  EXPECT_EQ(t_complement(2, 2), q(7, 6));
}

TEST(Complement, MatchesDefiningSeries) {
  for (std::uint64_t n = 1; n <= 12; ++n)
    for (std::uint64_t r = 1; r <= 12; ++r) {
      const auto row = binomial_row(n);
      Rational t;
      for (std::uint64_t k = 0; k <= n; ++k) t += Rational(to_big(k) * row[k], to_big(k + r));
      EXPECT_EQ(t_complement(n, r), t) << n << "," << r;
    }
}

TEST(CoefficientTable, Examples) {
  const auto as_longs = [](std::uint64_t r) {
    std::vector<long> out;
    for (const auto& c : coefficient_table(r).coeffs) out.push_back(c.get_si());
    return out;
  };
  EXPECT_EQ(as_longs(1), std::vector<long>{1});
  EXPECT_EQ(as_longs(4), (std::vector<long>{-4, 12, -12, 4}));
  EXPECT_EQ(as_longs(6), (std::vector<long>{-6, 30, -60, 60, -30, 6}));
  for (std::uint64_t r = 1; r <= 6; ++r) EXPECT_EQ(as_longs(r), kPrintedExpansions[r - 1]);
}

TEST(CoefficientTable, SumsToZeroExceptROne) {
  EXPECT_EQ(coefficient_table(1).coeffs.front(), 1);
  for (std::uint64_t r = 2; r <= 100; ++r) {
    const auto t = coefficient_table(r);
    BigInt sum = 0;
    for (const auto& c : t.coeffs) sum += c;
    EXPECT_EQ(sum, 0) << r;
    const auto tri = oracle::pascal(r - 1);
    for (std::uint64_t j = 0; j < r; ++j) EXPECT_EQ(abs(t.coeffs[j]), to_big(r) * tri[r - 1][j]);
  }
}

TEST(DenominatorBound, Examples) {
  EXPECT_EQ(denominator_bound(2, 2), 12);
  EXPECT_EQ(denominator_bound(1, 1), 2);
  EXPECT_EQ(denominator_bound(2, 3), 60);
}

TEST(Identities, AllMethodsAgreeOnGrid) {
  for (std::uint64_t n = 1; n <= 60; ++n) {
    for (std::uint64_t r = 1; r <= 60; ++r) {
      const Rational direct = s_direct(n, r).value;
      ASSERT_EQ(direct, s_lemma(n, r).value) << n << "," << r;
      ASSERT_EQ(direct, s_small_n_form(n, r).value) << n << "," << r;
      ASSERT_EQ(direct + t_complement(n, r), Rational(pow2(n))) << n << "," << r;
      ASSERT_EQ(denominator_bound(n, r) % direct.den(), 0) << n << "," << r;
      ASSERT_GT(direct.sign(), 0);
    }
  }
}

TEST(Identities, BruteForceOracleAgrees) {
  for (std::uint64_t n = 0; n <= 25; ++n)
    for (std::uint64_t r = 1; r <= 25; ++r) {
      const auto ref = oracle::brute_force_s(n, r);
      const Rational direct = s_direct(n, r).value;
      ASSERT_EQ(direct.num(), ref.num) << n << "," << r;
      ASSERT_EQ(direct.den(), ref.den) << n << "," << r;
    }
}

TEST(Identities, NEqualsOneLiesStrictlyBetweenOneAndTwo) {
  for (std::uint64_t r = 1; r <= 10'000; ++r) {
    const Rational v = s_direct(1, r).value;
    ASSERT_GT(v, Rational(1));
    ASSERT_LT(v, Rational(2));
  }
}

TEST(Auto, PicksDirectForSmallNAndLemmaOtherwise) {
  EXPECT_EQ(s_auto(3, 5).method, SumMethod::Direct);
  EXPECT_EQ(s_auto(5, 5).method, SumMethod::Direct);
  EXPECT_EQ(s_auto(6, 5).method, SumMethod::Lemma);
  EXPECT_EQ(s_auto(0, 5).value, Rational(1));
}

TEST(Lemma, LargeArgumentsStayExact) {
  // n + r near 2000: 2^(n+r+1) has ~2000 bits.
  EXPECT_EQ(s_lemma(1900, 40).value, s_direct(1900, 40).value);
}
