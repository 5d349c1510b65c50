#pragma once

// Non-integrality certificates for S(n,r). A certificate names a prime p and
// a bound B <= -1 with v_p(S(n,r)) <= B; it is checked by recomputing S(n,r)
// two ways and reading off the valuation, never by trusting the route.

#include "binsum/binomial_sum.hpp"
#include "binsum/bigint.hpp"
#include "binsum/number_theory.hpp"
#include "binsum/prime_windows.hpp"
#include "binsum/rational.hpp"

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace binsum {

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Route {
  R1_GCD,
  R_ODD_INDEX,
  R3_TWO_ADIC,
  R5_TWO_ADIC_MOD4,
  R5_TWO_ADIC_MOD8,
  SMALL_N_SYLVESTER,
  SMALL_N_BERTRAND,
  N1_DENOM,
  FALLBACK_FACTORED,
};

inline constexpr std::array<std::pair<Route, std::string_view>, 9> kRouteNames{{
    {Route::R1_GCD, "R1_GCD"},
    {Route::R_ODD_INDEX, "R_ODD_INDEX"},
    {Route::R3_TWO_ADIC, "R3_TWO_ADIC"},
    {Route::R5_TWO_ADIC_MOD4, "R5_TWO_ADIC_MOD4"},
    {Route::R5_TWO_ADIC_MOD8, "R5_TWO_ADIC_MOD8"},
    {Route::SMALL_N_SYLVESTER, "SMALL_N_SYLVESTER"},
    {Route::SMALL_N_BERTRAND, "SMALL_N_BERTRAND"},
    {Route::N1_DENOM, "N1_DENOM"},
    {Route::FALLBACK_FACTORED, "FALLBACK_FACTORED"},
}};

inline std::string_view route_name(Route r) {
  for (const auto& [route, name] : kRouteNames)
    if (route == r) return name;
  return "?";
}

inline std::optional<Route> parse_route(std::string_view s) {
  for (const auto& [route, name] : kRouteNames)
    if (name == s) return route;
  return std::nullopt;
}

struct Certificate {
  std::uint64_t n = 0;
  std::uint64_t r = 0;
  BigInt witness_prime;
  long claimed_bound = 0;  // claim: v_p(S(n,r)) <= claimed_bound <= -1
  Route route = Route::FALLBACK_FACTORED;
  std::optional<std::uint64_t> witness_index;  // n+i, or r+j on small-n routes
  bool verified = false;
};

/// S(n,r) came out an integer: the conjecture is false at (n, r).
struct Counterexample {
  std::uint64_t n;
  std::uint64_t r;
  Rational value;
};

using CertifyResult = std::variant<Certificate, Counterexample>;

enum class VerifyStatus {
  Valid,
  WitnessNotPrime,
  BoundNotNegative,
  MethodMismatch,  // direct and lemma sums disagree: arithmetic is broken
  ValuationClaimFails,
  BadArguments,
};

inline std::string_view verify_message(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Valid: return "valid";
    case VerifyStatus::WitnessNotPrime: return "witness not prime";
    case VerifyStatus::BoundNotNegative: return "claimed bound is not negative";
    case VerifyStatus::MethodMismatch: return "direct and lemma sums disagree";
    case VerifyStatus::ValuationClaimFails: return "valuation claim fails";
    case VerifyStatus::BadArguments: return "n and r must be positive";
  }
  return "?";
}

/// Recomputes S(n,r) by direct summation and by the closed form, requires
/// agreement, then checks v_p(S) <= claimed_bound.
inline VerifyStatus verify_certificate_status(const Certificate& c) {
  if (c.n == 0 || c.r == 0) return VerifyStatus::BadArguments;
  if (!is_prime(c.witness_prime)) return VerifyStatus::WitnessNotPrime;
  if (c.claimed_bound > -1) return VerifyStatus::BoundNotNegative;
  const Rational direct = s_direct(c.n, c.r).value;
  if (direct != s_lemma(c.n, c.r).value) return VerifyStatus::MethodMismatch;
  return vp(direct, c.witness_prime) <= Valuation(c.claimed_bound)
             ? VerifyStatus::Valid
             : VerifyStatus::ValuationClaimFails;
}

inline bool verify_certificate(const Certificate& c) {
  return verify_certificate_status(c) == VerifyStatus::Valid;
}

namespace detail {

// Odd part of the classic fact: m = n+i never divides 2^m - 1, so
// d = m / gcd(m, 2^m - 1) > 1 and every prime of d sits in the denominator
// of (2^m - 1)/m.
inline std::uint64_t mersenne_cofactor(std::uint64_t m) {
  const std::uint64_t d = m / std::gcd(m, mersenne_residue(m));
  if (d == 1)
    throw InvariantViolation("m divides 2^m - 1 for m=" + std::to_string(m) +
                             "; modular arithmetic is broken");
  return d;
}

inline Certificate make(std::uint64_t n, std::uint64_t r, std::uint64_t p, long bound, Route route,
                        std::optional<std::uint64_t> index = std::nullopt) {
  return Certificate{n, r, to_big(p), bound, route, index, false};
}

}  // namespace detail

/// n = 1: S(1,r) = 1 + r/(r+1) with r, r+1 coprime.
inline Certificate certify_n1(std::uint64_t r) {
  if (r == 0) throw PreconditionError("certify_n1: requires r >= 1");
  const std::uint64_t p = smallest_prime_factor(r + 1);
  return detail::make(1, r, p, -static_cast<long>(multiplicity(r + 1, p)), Route::N1_DENOM, 1);
}

/// r = 1: S(n,1) = (2^{n+1} - 1)/(n+1), so the bound is exact.
inline Certificate certify_r1(std::uint64_t n) {
  if (n < 2) throw PreconditionError("certify_r1: requires n >= 2");
  const std::uint64_t m = n + 1;
  const std::uint64_t p = smallest_prime_factor(detail::mersenne_cofactor(m));
  const unsigned in_m = multiplicity(m, p);
  // v_p(2^m - 1) < v_p(m) because p divides the cofactor.
  unsigned in_mersenne = 0;
  for (std::uint64_t pk = p; in_mersenne < in_m && mod_pow(2, m, pk) == 1; pk *= p) ++in_mersenne;
  return detail::make(n, 1, p, -static_cast<long>(in_m - in_mersenne), Route::R1_GCD);
}

/// Small primes an odd-index term n+i must avoid so that its denominator
/// prime exceeds r.
inline std::vector<std::uint64_t> odd_index_excluded_primes(std::uint64_t r) {
  switch (r) {
    case 2: return {2};
    case 3:
    case 4: return {2, 3};
    case 5:
    case 6: return {2, 3, 5};
    default: throw PreconditionError("odd-index route defined only for r in {2,...,6}");
  }
}

/// r in {2..6}: pick the smallest i with n+i coprime to the excluded primes;
/// the denominator prime p of c_i (2^{n+i}-1)/(n+i) exceeds r, so it divides
/// no other n+j and no c_j.
inline Certificate certify_odd_index(std::uint64_t n, std::uint64_t r) {
  const auto excluded = odd_index_excluded_primes(r);
  if (n < 2) throw PreconditionError("certify_odd_index: requires n >= 2");
  if ((r == 3 || r == 5) && (n + 1) % 2 == 0)
    throw PreconditionError("certify_odd_index: r in {3,5} requires n+1 odd");
  for (std::uint64_t i = 1; i <= r; ++i) {
    const std::uint64_t m = n + i;
    bool coprime = true;
    for (auto q : excluded) coprime = coprime && m % q != 0;
    if (!coprime) continue;
    const std::uint64_t p = smallest_prime_factor(detail::mersenne_cofactor(m));
    return detail::make(n, r, p, -1, Route::R_ODD_INDEX, i);
  }
  throw PreconditionError("certify_odd_index: no index coprime to the excluded primes");
}

/// r in {3,5} with n+1 even: the 2-adic valuation of one closed-form term is
/// strictly below all others.
inline Certificate certify_two_adic(std::uint64_t n, std::uint64_t r) {
  if (r != 3 && r != 5) throw PreconditionError("certify_two_adic: requires r in {3,5}");
  if (n < 1) throw PreconditionError("certify_two_adic: requires n >= 1");
  if ((n + 1) % 2 != 0) throw PreconditionError("certify_two_adic: requires n+1 even");
  if (r == 3) return detail::make(n, r, 2, -2, Route::R3_TWO_ADIC);
  if ((n + 1) % 4 == 2) return detail::make(n, r, 2, -1, Route::R5_TWO_ADIC_MOD4);
  return detail::make(n, r, 2, -3, Route::R5_TWO_ADIC_MOD8);
}

/// n <= r-1, working from the defining series: a prime p > n dividing some
/// r+j divides no C(n,j) and not r.
inline Certificate certify_small_n(std::uint64_t n, std::uint64_t r) {
  if (n < 1 || n + 1 > r) throw PreconditionError("certify_small_n: requires 1 <= n <= r-1");
  if (n == 1) return certify_n1(r);
  if (r == n + 1) {
    const std::uint64_t p = bertrand_prime(n);
    return detail::make(n, r, p, -1, Route::SMALL_N_BERTRAND, p - r);
  }
  for (std::uint64_t j = 1; j <= n; ++j) {
    for (const auto& [p, e] : factor(r + j))
      if (p > n) return detail::make(n, r, p, -static_cast<long>(e), Route::SMALL_N_SYLVESTER, j);
  }
  throw TheoremViolation("no prime > n in r+1..r+n for n=" + std::to_string(n) +
                         " r=" + std::to_string(r));
}

/// Exact computation and factorization of the reduced denominator.
inline CertifyResult certify_fallback(std::uint64_t n, std::uint64_t r) {
  if (n == 0 || r == 0) throw PreconditionError("certify_fallback: requires n, r >= 1");
  Rational value = s_auto(n, r).value;
  if (value.is_integer()) return Counterexample{n, r, std::move(value)};
  const auto factors = factor(value.den());
  const auto& [p, e] = factors.front();
  return Certificate{n, r, p, -static_cast<long>(e), Route::FALLBACK_FACTORED, std::nullopt,
                     false};
}

/// Route dispatch; every certificate returned has been self-verified.
inline CertifyResult certify(std::uint64_t n, std::uint64_t r) {
  if (n == 0 || r == 0) throw PreconditionError("certify: requires n, r >= 1");
  CertifyResult result;
  if (n == 1)
    result = certify_n1(r);
  else if (n + 1 <= r)
    result = certify_small_n(n, r);
  else if (r == 1)
    result = certify_r1(n);
  else if (r == 2 || r == 4 || r == 6)
    result = certify_odd_index(n, r);
  else if (r == 3 || r == 5)
    result = (n + 1) % 2 == 1 ? certify_odd_index(n, r) : certify_two_adic(n, r);
  else
    result = certify_fallback(n, r);
  if (auto* cert = std::get_if<Certificate>(&result)) cert->verified = verify_certificate(*cert);
  return result;
}

/// Cross-check of a constructive certificate: the factored denominator of
/// S(n,r) must contain its witness prime.
inline bool audit_fallback(const Certificate& c) {
  if (c.n == 0 || c.r == 0) return false;
  const Rational value = s_auto(c.n, c.r).value;
  if (value.is_integer()) return false;
  return mpz_divisible_p(value.den().get_mpz_t(), c.witness_prime.get_mpz_t()) != 0;
}

/// How many elements of the route's window the witness prime divides.
inline std::uint64_t window_multiples(const Certificate& c) {
  std::uint64_t start = c.n;
  std::uint64_t len = c.r;
  if (c.route == Route::SMALL_N_SYLVESTER || c.route == Route::SMALL_N_BERTRAND ||
      c.route == Route::N1_DENOM) {
    start = c.r;
    len = c.n;
  }
  std::uint64_t hits = 0;
  for (std::uint64_t i = 1; i <= len; ++i)
    if (mpz_divisible_p(to_big(start + i).get_mpz_t(), c.witness_prime.get_mpz_t()) != 0) ++hits;
  return hits;
}

}  // namespace binsum
