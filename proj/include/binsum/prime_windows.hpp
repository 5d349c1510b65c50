#pragma once

// Bounded-range checks of Sylvester's theorem (among n+1..n+r with n >= r
// some element has a prime factor > r) and of Bertrand's postulate in the
// form "a prime lies in (n+1, 2n+1]".

#include "binsum/number_theory.hpp"
#include "binsum/sieve.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace binsum {

/// Raised when an exhaustive scan contradicts a proven theorem. Never
/// expected; if it fires, the arithmetic layer is broken.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct WindowWitness {
  std::uint64_t n;
  std::uint64_t r;
  std::uint64_t index;  // i in [1, r]
  std::uint64_t prime;  // p > r, p | n+i

  friend bool operator==(const WindowWitness&, const WindowWitness&) = default;
};

/// Smallest i, then smallest prime p > r, with p | n+i.
inline WindowWitness sylvester_witness(std::uint64_t n, std::uint64_t r) {
  if (r < 2 || n < r) throw std::domain_error("sylvester_witness: requires n >= r >= 2");
  for (std::uint64_t i = 1; i <= r; ++i) {
    for (const auto& [p, e] : factor(n + i))
      if (p > r) return {n, r, i, p};
  }
  throw TheoremViolation("Sylvester window without a prime > r: n=" + std::to_string(n) +
                         " r=" + std::to_string(r));
}

/// Smallest prime in (n+1, 2n+1].
inline std::uint64_t bertrand_prime(std::uint64_t n) {
  if (n < 1) throw std::domain_error("bertrand_prime: requires n >= 1");
  for (std::uint64_t m = n + 2; m <= 2 * n + 1; ++m)
    if (is_prime(m)) return m;
  throw TheoremViolation("no prime in (n+1, 2n+1] for n=" + std::to_string(n));
}

struct SylvesterReport {
  std::uint64_t checked = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> violations;  // (n, r)
  std::uint64_t max_prime = 0;  // largest witness prime over all windows
};

namespace detail {

inline void sylvester_block(std::uint64_t n_lo, std::uint64_t n_hi, std::uint64_t r_max,
                            std::span<const std::uint32_t> base, SylvesterReport& out) {
  const FactorSegment seg(n_lo + 1, n_hi + std::min(n_hi, r_max), base);
  for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
    const std::uint64_t r_top = std::min(n, r_max);
    for (std::uint64_t r = 2; r <= r_top; ++r) {
      ++out.checked;
      std::uint64_t witness = 0;
      for (std::uint64_t i = 1; i <= r && witness == 0; ++i) {
        if (seg.largest_prime_factor(n + i) <= r) continue;
        for (auto p : seg.distinct_primes(n + i))
          if (p > r) {
            witness = p;
            break;
          }
      }
      if (witness == 0)
        out.violations.emplace_back(n, r);
      else
        out.max_prime = std::max(out.max_prime, witness);
    }
  }
}

}  // namespace detail

/// Checks every window 2 <= r <= min(n, r_max), 2 <= n <= n_max using a
/// segmented factor sieve; n-blocks are split across `jobs` threads.
inline SylvesterReport verify_sylvester_range(std::uint64_t n_max, std::uint64_t r_max,
                                              unsigned jobs = 1,
                                              std::uint64_t block = 1U << 15U) {
  if (n_max < 2) throw std::domain_error("verify_sylvester_range: requires n_max >= 2");
  if (block == 0) throw std::domain_error("verify_sylvester_range: block must be positive");
  const auto base = base_primes_for(n_max + std::min(n_max, r_max));

  std::vector<std::pair<std::uint64_t, std::uint64_t>> blocks;
  for (std::uint64_t lo = 2; lo <= n_max; lo += block)
    blocks.emplace_back(lo, std::min(n_max, lo + block - 1));

  std::vector<SylvesterReport> partial(blocks.size());
  jobs = std::max(1U, jobs);
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t b = w; b < blocks.size(); b += jobs)
          detail::sylvester_block(blocks[b].first, blocks[b].second, r_max, base, partial[b]);
      });
    }
  }

  SylvesterReport report;
  for (auto& p : partial) {
    report.checked += p.checked;
    report.max_prime = std::max(report.max_prime, p.max_prime);
    report.violations.insert(report.violations.end(), p.violations.begin(), p.violations.end());
  }
  return report;
}

struct BertrandReport {
  std::uint64_t checked = 0;
  std::vector<std::uint64_t> violations;
};

/// For every 1 <= n <= n_max, checks that the next prime after n+1 is <= 2n+1.
inline BertrandReport verify_bertrand_range(std::uint64_t n_max) {
  if (n_max > 0x7FFFFFFEULL) throw std::range_error("verify_bertrand_range: n_max too large");
  const auto primes = primes_up_to(static_cast<std::uint32_t>(2 * n_max + 1));
  BertrandReport report;
  std::size_t k = 0;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    while (k < primes.size() && primes[k] <= n + 1) ++k;
    ++report.checked;
    if (k == primes.size() || primes[k] > 2 * n + 1) report.violations.push_back(n);
  }
  return report;
}

}  // namespace binsum
