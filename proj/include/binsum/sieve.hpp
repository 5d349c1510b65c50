#pragma once

#include "binsum/number_theory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace binsum {

/// Distinct prime factors of every integer in one segment [lo, hi], lo >= 1, found by
/// sieving with the base primes <= sqrt(hi). Read-only once constructed.
class FactorSegment {
 public:
  static constexpr std::size_t kMaxDistinct = 15;  // 2*3*...*47 > 2^64

  FactorSegment(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint32_t> base_primes)
      : lo_(lo), hi_(hi) {
    if (lo == 0) throw std::domain_error("FactorSegment: range must start at 1 or above");
    if (hi < lo) throw std::domain_error("FactorSegment: empty range");
    const std::size_t len = hi - lo + 1;
    primes_.assign(len * kMaxDistinct, 0);
    counts_.assign(len, 0);
    std::vector<std::uint64_t> rest(len);
    for (std::size_t i = 0; i < len; ++i) rest[i] = lo + i;

    for (std::uint64_t p : base_primes) {
      if (p * p > hi) break;
      std::uint64_t first = (lo + p - 1) / p * p;
      for (std::uint64_t m = first; m <= hi; m += p) {
        const std::size_t i = m - lo;
        primes_[i * kMaxDistinct + counts_[i]++] = p;
        do rest[i] /= p;
        while (rest[i] % p == 0);
      }
    }
    // Whatever survives is a single prime above sqrt(hi), hence the largest.
    for (std::size_t i = 0; i < len; ++i)
      if (rest[i] > 1) primes_[i * kMaxDistinct + counts_[i]++] = rest[i];
  }

  std::uint64_t lo() const { return lo_; }
  std::uint64_t hi() const { return hi_; }

  /// Ascending distinct primes dividing m; empty for m < 2.
  std::span<const std::uint64_t> distinct_primes(std::uint64_t m) const {
    if (m < lo_ || m > hi_) throw std::out_of_range("FactorSegment: query outside segment");
    const std::size_t i = m - lo_;
    return {primes_.data() + i * kMaxDistinct, counts_[i]};
  }

  std::uint64_t smallest_prime_factor(std::uint64_t m) const {
    auto ps = distinct_primes(m);
    return ps.empty() ? 0 : ps.front();
  }
  std::uint64_t largest_prime_factor(std::uint64_t m) const {
    auto ps = distinct_primes(m);
    return ps.empty() ? 0 : ps.back();
  }

 private:
  std::uint64_t lo_;
  std::uint64_t hi_;
  std::vector<std::uint64_t> primes_;
  std::vector<std::uint8_t> counts_;
};

/// Base primes sufficient to sieve any segment ending at or below limit.
inline std::vector<std::uint32_t> base_primes_for(std::uint64_t limit) {
  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit)));
  while ((root + 1) * (root + 1) <= limit) ++root;
  while (root * root > limit) --root;
  if (root > 0xFFFFFFFFULL) throw std::range_error("base_primes_for: limit too large");
  return primes_up_to(static_cast<std::uint32_t>(root));
}

}  // namespace binsum
