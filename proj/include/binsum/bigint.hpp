#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace binsum {

/// Arbitrary-precision signed integer.
using BigInt = mpz_class;

inline BigInt to_big(std::uint64_t v) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return out;
}

inline bool fits_u64(const BigInt& v) {
  return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const BigInt& v) {
  if (!fits_u64(v)) throw std::range_error("value does not fit in 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

inline BigInt pow2(std::uint64_t e) {
  BigInt out;
  mpz_setbit(out.get_mpz_t(), e);
  return out;
}

/// Parses an optionally signed decimal integer; rejects anything else.
inline BigInt parse_big(std::string_view s) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw std::invalid_argument("empty integer literal");
  for (char c : digits)
    if (c < '0' || c > '9') throw std::invalid_argument("invalid integer literal: " + std::string(s));
  std::string buf(s.front() == '+' ? s.substr(1) : s);
  return BigInt(buf, 10);
}

inline std::string to_string(const BigInt& v) { return v.get_str(10); }

}  // namespace binsum
