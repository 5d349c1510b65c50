#pragma once

// S(n,r) = sum_{k=0}^{n} r/(k+r) * C(n,k), computed three independent ways:
//   direct      sequential exact summation of the defining series
//   lemma       sum_{j=0}^{r-1} c_j (2^{n+j+1} - 1)/(n+j+1),
//               c_j = (-1)^{r-1-j} r C(r-1,j), over one common denominator
//   small-n     1 + sum_{j=1}^{n} r/(r+j) C(n,j), over one common denominator

#include "binsum/bigint.hpp"
#include "binsum/number_theory.hpp"
#include "binsum/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace binsum {

enum class SumMethod { Direct, Lemma, SmallNForm };

inline std::string_view method_name(SumMethod m) {
  switch (m) {
    case SumMethod::Direct: return "DIRECT";
    case SumMethod::Lemma: return "LEMMA";
    case SumMethod::SmallNForm: return "SMALL_N_FORM";
  }
  return "?";
}

struct SumValue {
  std::uint64_t n;
  std::uint64_t r;
  Rational value;
  SumMethod method;
};

struct CoefficientTable {
  std::uint64_t r;
  std::vector<BigInt> coeffs;  // c_0 .. c_{r-1}
};

/// C(n,0..n), built with C(n,k+1) = C(n,k)(n-k)/(k+1), exact at every step.
inline std::vector<BigInt> binomial_row(std::uint64_t n) {
  std::vector<BigInt> row;
  row.reserve(n + 1);
  row.emplace_back(1);
  for (std::uint64_t k = 0; k < n; ++k) {
    BigInt next = row.back() * to_big(n - k);
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(k + 1));
    row.push_back(std::move(next));
  }
  return row;
}

inline CoefficientTable coefficient_table(std::uint64_t r) {
  if (r == 0) throw std::domain_error("coefficient_table: r must be >= 1");
  CoefficientTable table{r, binomial_row(r - 1)};
  const BigInt br = to_big(r);
  for (std::uint64_t j = 0; j < r; ++j) {
    table.coeffs[j] *= br;
    if ((r - 1 - j) % 2 == 1) table.coeffs[j] = -table.coeffs[j];
  }
  return table;
}

/// lcm(n+1, ..., n+r); every Lemma term's denominator divides it.
inline BigInt denominator_bound(std::uint64_t n, std::uint64_t r) {
  if (r == 0) throw std::domain_error("denominator_bound: r must be >= 1");
  return lcm_range(n + 1, n + r);
}

inline SumValue s_direct(std::uint64_t n, std::uint64_t r) {
  if (r == 0) throw std::domain_error("s_direct: r must be >= 1");
  const BigInt br = to_big(r);
  Rational sum;
  BigInt binom = 1;
  for (std::uint64_t k = 0; k <= n; ++k) {
    sum += Rational(br * binom, to_big(k + r));
    binom *= to_big(n - k);
    mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(k + 1));
  }
  return {n, r, std::move(sum), SumMethod::Direct};
}

inline SumValue s_lemma(std::uint64_t n, std::uint64_t r) {
  if (n == 0 || r == 0) throw std::domain_error("s_lemma: requires n >= 1 and r >= 1");
  const auto table = coefficient_table(r);
  const BigInt common = denominator_bound(n, r);
  BigInt numerator = 0;
  BigInt cofactor;
  for (std::uint64_t j = 0; j < r; ++j) {
    const std::uint64_t m = n + j + 1;
    mpz_divexact_ui(cofactor.get_mpz_t(), common.get_mpz_t(), static_cast<unsigned long>(m));
    numerator += table.coeffs[j] * (pow2(m) - 1) * cofactor;
  }
  return {n, r, Rational(std::move(numerator), common), SumMethod::Lemma};
}

inline SumValue s_small_n_form(std::uint64_t n, std::uint64_t r) {
  if (n == 0 || r == 0) throw std::domain_error("s_small_n_form: requires n >= 1 and r >= 1");
  const BigInt common = lcm_range(r + 1, r + n);
  const auto row = binomial_row(n);
  const BigInt br = to_big(r);
  BigInt numerator = common;  // the k = 0 term r/r = 1
  BigInt cofactor;
  for (std::uint64_t j = 1; j <= n; ++j) {
    mpz_divexact_ui(cofactor.get_mpz_t(), common.get_mpz_t(), static_cast<unsigned long>(r + j));
    numerator += br * row[j] * cofactor;
  }
  return {n, r, Rational(std::move(numerator), common), SumMethod::SmallNForm};
}

/// DIRECT when n <= r, LEMMA otherwise.
inline SumValue s_auto(std::uint64_t n, std::uint64_t r) {
  return n <= r ? s_direct(n, r) : s_lemma(n, r);
}

/// sum_{k=0}^{n} k/(k+r) C(n,k) = 2^n - S(n,r).
inline Rational t_complement(std::uint64_t n, std::uint64_t r) {
  if (n == 0 || r == 0) throw std::domain_error("t_complement: requires n >= 1 and r >= 1");
  return Rational(pow2(n)) - s_auto(n, r).value;
}

}  // namespace binsum
