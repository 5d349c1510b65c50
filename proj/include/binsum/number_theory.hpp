#pragma once

#include "binsum/bigint.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace binsum {

template <class Int>
struct PrimePower {
  Int prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

/// base^exp mod m by square-and-multiply.
inline std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m < 2) throw std::domain_error("mod_pow: modulus must be >= 2");
  std::uint64_t result = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

inline BigInt mod_pow(const BigInt& base, const BigInt& exp, const BigInt& m) {
  if (m < 2) throw std::domain_error("mod_pow: modulus must be >= 2");
  if (sgn(exp) < 0) throw std::domain_error("mod_pow: negative exponent");
  BigInt out;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
  return out;
}

/// (2^m - 1) mod m, without materializing 2^m.
inline std::uint64_t mersenne_residue(std::uint64_t m) {
  if (m == 1) return 0;
  return (mod_pow(2, m, m) + m - 1) % m;
}

/// True iff n | 2^n - 1. Only n = 1 qualifies, but this is computed, not assumed.
inline bool divides_2n_minus_1(std::uint64_t n) {
  if (n == 0) throw std::domain_error("divides_2n_minus_1: n must be >= 1");
  return mersenne_residue(n) == 0;
}

/// Exponent of p in m (m > 0, p >= 2).
inline unsigned multiplicity(std::uint64_t m, std::uint64_t p) {
  unsigned e = 0;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  return e;
}

namespace detail {

inline bool strong_probable_prime(std::uint64_t m, std::uint64_t base) {
  std::uint64_t d = m - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  std::uint64_t x = mod_pow(base, d, m);
  if (x == 1 || x == m - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = mul_mod(x, x, m);
    if (x == m - 1) return true;
  }
  return false;
}

}  // namespace detail

/// Deterministic for every 64-bit input: the first twelve prime bases are a
/// proven witness set below 3.3e24.
inline bool is_prime(std::uint64_t m) {
  constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (m < 2) return false;
  for (auto p : bases) {
    if (m == p) return true;
    if (m % p == 0) return false;
  }
  if (m < 41 * 41) return true;
  return std::all_of(bases.begin(), bases.end(),
                     [m](std::uint64_t b) { return detail::strong_probable_prime(m, b); });
}

/// Exact below 2^64; above that a 40-round probable-prime test (see is_prime_exact).
inline bool is_prime(const BigInt& m) {
  if (sgn(m) <= 0) return false;
  if (fits_u64(m)) return is_prime(to_u64(m));
  return mpz_probab_prime_p(m.get_mpz_t(), 40) > 0;
}

/// Whether is_prime(m) is a proof rather than a probable-prime verdict.
inline bool is_prime_exact(const BigInt& m) { return sgn(m) <= 0 || fits_u64(m); }

/// Primes <= limit, plain sieve of Eratosthenes.
inline std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

inline constexpr std::uint32_t kTrialDivisionLimit = 1'000'000;

inline const std::vector<std::uint32_t>& trial_primes() {
  static const std::vector<std::uint32_t> primes = primes_up_to(kTrialDivisionLimit);
  return primes;
}

namespace detail {

// Brent's variant of Pollard rho; m must be an odd composite.
inline std::uint64_t rho_split(std::uint64_t m) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [m, c](std::uint64_t x) { return (mul_mod(x, x, m) + c) % m; };
    std::uint64_t y = 2, x = 2, q = 1, g = 1, ys = 2;
    constexpr std::uint64_t block = 128;
    for (std::uint64_t len = 1; g == 1; len <<= 1U) {
      x = y;
      for (std::uint64_t i = 0; i < len; ++i) y = f(y);
      for (std::uint64_t k = 0; k < len && g == 1; k += block) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(block, len - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, m);
        }
        g = std::gcd(q, m);
      }
    }
    if (g == m) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, m);
      } while (g == 1);
    }
    if (g != m) return g;
  }
}

inline void rho_factor(std::uint64_t m, std::vector<std::uint64_t>& primes) {
  if (m == 1) return;
  if (is_prime(m)) {
    primes.push_back(m);
    return;
  }
  std::uint64_t d = rho_split(m);
  rho_factor(d, primes);
  rho_factor(m / d, primes);
}

inline BigInt rho_split(const BigInt& m) {
  for (unsigned long c = 1;; ++c) {
    auto f = [&m, c](const BigInt& x) {
      BigInt y = x * x + c;
      mpz_mod(y.get_mpz_t(), y.get_mpz_t(), m.get_mpz_t());
      return y;
    };
    BigInt x = 2, y = 2, g = 1;
    while (g == 1) {
      x = f(x);
      y = f(f(y));
      BigInt diff = abs(x - y);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), m.get_mpz_t());
    }
    if (g != m) return g;
  }
}

inline void rho_factor(const BigInt& m, std::vector<BigInt>& primes) {
  if (m == 1) return;
  if (fits_u64(m)) {
    std::vector<std::uint64_t> small;
    rho_factor(to_u64(m), small);
    for (auto p : small) primes.push_back(to_big(p));
    return;
  }
  if (is_prime(m)) {
    primes.push_back(m);
    return;
  }
  // Rho is hopeless on p^k with large p; peel exact powers first.
  const auto bits = static_cast<unsigned long>(mpz_sizeinbase(m.get_mpz_t(), 2));
  for (unsigned long k = bits; k >= 2; --k) {
    BigInt root;
    if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), k) != 0) {
      std::vector<BigInt> root_primes;
      rho_factor(root, root_primes);
      for (unsigned long i = 0; i < k; ++i)
        primes.insert(primes.end(), root_primes.begin(), root_primes.end());
      return;
    }
  }
  BigInt d = rho_split(m);
  rho_factor(d, primes);
  rho_factor(BigInt(m / d), primes);
}

template <class Int>
std::vector<PrimePower<Int>> collect(std::vector<Int> primes) {
  std::sort(primes.begin(), primes.end());
  std::vector<PrimePower<Int>> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().prime == p)
      ++out.back().exponent;
    else
      out.push_back({p, 1});
  }
  return out;
}

}  // namespace detail

/// Complete factorization, primes ascending. Trial division by primes up to
/// 10^6, then Pollard rho on whatever cofactor remains.
inline std::vector<PrimePower<std::uint64_t>> factor(std::uint64_t m) {
  if (m < 2) throw std::domain_error("factor: argument must be >= 2");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p : trial_primes()) {
    if (p * p > m) break;
    while (m % p == 0) {
      primes.push_back(p);
      m /= p;
    }
  }
  if (m > 1) {
    if (m < std::uint64_t{kTrialDivisionLimit} * kTrialDivisionLimit)
      primes.push_back(m);
    else
      detail::rho_factor(m, primes);
  }
  return detail::collect(std::move(primes));
}

inline std::vector<PrimePower<BigInt>> factor(const BigInt& m) {
  if (m < 2) throw std::domain_error("factor: argument must be >= 2");
  if (fits_u64(m)) {
    std::vector<PrimePower<BigInt>> out;
    for (const auto& [p, e] : factor(to_u64(m))) out.push_back({to_big(p), e});
    return out;
  }
  BigInt rest = m;
  std::vector<BigInt> primes;
  for (std::uint32_t p : trial_primes()) {
    if (rest == 1) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      BigInt bp = p;
      unsigned long e = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), bp.get_mpz_t());
      for (unsigned long i = 0; i < e; ++i) primes.emplace_back(bp);
    }
  }
  detail::rho_factor(rest, primes);
  return detail::collect(std::move(primes));
}

inline std::uint64_t smallest_prime_factor(std::uint64_t m) {
  if (m < 2) throw std::domain_error("smallest_prime_factor: argument must be >= 2");
  return factor(m).front().prime;
}

/// lcm(lo, lo+1, ..., hi).
inline BigInt lcm_range(std::uint64_t lo, std::uint64_t hi) {
  BigInt out = 1;
  for (std::uint64_t k = lo; k <= hi; ++k) {
    BigInt bk = to_big(k);
    mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), bk.get_mpz_t());
  }
  return out;
}

}  // namespace binsum
