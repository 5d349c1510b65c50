#include "binsum/prime_windows.hpp"
#include "binsum/sieve.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace binsum;

TEST(SylvesterWitness, Examples) {
  EXPECT_EQ(sylvester_witness(4, 3), (WindowWitness{4, 3, 1, 5}));
  EXPECT_EQ(sylvester_witness(2, 2), (WindowWitness{2, 2, 1, 3}));
  EXPECT_EQ(sylvester_witness(8, 2), (WindowWitness{8, 2, 1, 3}));
}

TEST(SylvesterWitness, Preconditions) {
  EXPECT_THROW(sylvester_witness(3, 4), std::domain_error);
  EXPECT_THROW(sylvester_witness(5, 1), std::domain_error);
}

TEST(SylvesterWitness, PrimeDividesExactlyOneWindowElement) {
  for (std::uint64_t n = 2; n <= 2000; ++n)
    for (std::uint64_t r = 2; r <= std::min<std::uint64_t>(n, 50); ++r) {
      const auto w = sylvester_witness(n, r);
      ASSERT_GT(w.prime, r);
      ASSERT_EQ((n + w.index) % w.prime, 0U);
      int hits = 0;
      for (std::uint64_t j = 1; j <= r; ++j) hits += (n + j) % w.prime == 0;
      ASSERT_EQ(hits, 1) << n << "," << r;
    }
}

TEST(BertrandPrime, Examples) {
  EXPECT_EQ(bertrand_prime(1), 3U);
  EXPECT_EQ(bertrand_prime(5), 7U);
  EXPECT_EQ(bertrand_prime(10), 13U);
  EXPECT_THROW(bertrand_prime(0), std::domain_error);
}

TEST(BertrandPrime, StaysInsideInterval) {
  for (std::uint64_t n = 1; n <= 20000; ++n) {
    const auto p = bertrand_prime(n);
    ASSERT_GT(p, n + 1);
    ASSERT_LE(p, 2 * n + 1);
    ASSERT_TRUE(oracle::trial_division_prime(p));
    for (std::uint64_t m = n + 2; m < p; ++m) ASSERT_FALSE(is_prime(m));
  }
}

TEST(BertrandRange, NoViolationUpToAMillion) {
  const auto report = verify_bertrand_range(1'000'000);
  EXPECT_EQ(report.checked, 1'000'000U);
  EXPECT_TRUE(report.violations.empty());
}

TEST(SylvesterRange, Examples) {
  auto rep = verify_sylvester_range(100, 10);
  EXPECT_TRUE(rep.violations.empty());
  std::uint64_t expected = 0;
  for (std::uint64_t n = 2; n <= 100; ++n)
    for (std::uint64_t r = 2; r <= std::min<std::uint64_t>(n, 10); ++r) ++expected;
  EXPECT_EQ(expected, 855U);
  EXPECT_EQ(rep.checked, 855U);

  rep = verify_sylvester_range(10, 10);
  EXPECT_TRUE(rep.violations.empty());
  EXPECT_EQ(rep.checked, 45U);

  rep = verify_sylvester_range(2, 2);
  EXPECT_TRUE(rep.violations.empty());
  EXPECT_EQ(rep.checked, 1U);
  EXPECT_EQ(rep.max_prime, 3U);
  EXPECT_THROW(verify_sylvester_range(1, 5), std::domain_error);
}

TEST(SylvesterRange, MaxPrimeMatchesPerWindowWitnesses) {
  std::uint64_t max_prime = 0;
  for (std::uint64_t n = 2; n <= 700; ++n)
    for (std::uint64_t r = 2; r <= std::min<std::uint64_t>(n, 30); ++r)
      max_prime = std::max(max_prime, sylvester_witness(n, r).prime);
  // Small blocks force many segment boundaries.
  const auto rep = verify_sylvester_range(700, 30, 3, 37);
  EXPECT_EQ(rep.max_prime, max_prime);
  EXPECT_TRUE(rep.violations.empty());
}

TEST(SylvesterRange, ThreadCountDoesNotChangeReport) {
  const auto a = verify_sylvester_range(20000, 100, 1, 4096);
  const auto b = verify_sylvester_range(20000, 100, 4, 1000);
  EXPECT_EQ(a.checked, b.checked);
  EXPECT_EQ(a.max_prime, b.max_prime);
  EXPECT_TRUE(a.violations.empty());
  EXPECT_TRUE(b.violations.empty());
}

TEST(FactorSegment, AgreesWithFactor) {
  const std::uint64_t lo = 999'000, hi = 1'001'000;
  const FactorSegment seg(lo, hi, base_primes_for(hi));
  for (std::uint64_t m = lo; m <= hi; ++m) {
    const auto f = factor(m);
    const auto ps = seg.distinct_primes(m);
    ASSERT_EQ(ps.size(), f.size()) << m;
    for (std::size_t i = 0; i < ps.size(); ++i) ASSERT_EQ(ps[i], f[i].prime);
  }
  EXPECT_THROW(seg.distinct_primes(lo - 1), std::out_of_range);
}

TEST(FactorSegment, SmallValues) {
  EXPECT_THROW(FactorSegment(0, 30, base_primes_for(30)), std::domain_error);
  const FactorSegment seg(1, 30, base_primes_for(30));
  EXPECT_TRUE(seg.distinct_primes(1).empty());
  EXPECT_EQ(seg.smallest_prime_factor(29), 29U);
  EXPECT_EQ(seg.largest_prime_factor(28), 7U);
  EXPECT_EQ(seg.smallest_prime_factor(25), 5U);
}
