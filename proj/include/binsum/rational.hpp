#pragma once

#include "binsum/bigint.hpp"
#include "binsum/number_theory.hpp"

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace binsum {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. The value is an integer iff den() == 1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(BigInt v) : num_(std::move(v)), den_(1) {}

  /// Reduced form of num/den; den == 0 is a domain error.
  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (sgn(den_) == 0) throw std::domain_error("Rational: zero denominator");
    normalize();
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return sgn(num_) == 0; }
  int sign() const { return sgn(num_); }

  Rational operator-() const { return from_reduced(-num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Rational(a.num_ + b.num_, a.den_);
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  // Both sides are reduced, so equality is componentwise.
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "num/den", denominator always printed.
  std::string str() const { return to_string(num_) + "/" + to_string(den_); }

  /// Accepts "num/den" or a bare integer.
  static Rational parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_big(s));
    return Rational(parse_big(s.substr(0, slash)), parse_big(s.substr(slash + 1)));
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

 private:
  static Rational from_reduced(BigInt num, BigInt den) {
    Rational q;
    q.num_ = std::move(num);
    q.den_ = std::move(den);
    return q;
  }

  void normalize() {
    if (sgn(den_) < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (sgn(num_) == 0) {
      den_ = 1;
    } else if (g != 1) {
      mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
  }

  BigInt num_;
  BigInt den_;
};

inline Rational reduce(const BigInt& num, const BigInt& den) { return Rational(num, den); }

/// p-adic order. The valuation of zero is +infinity, which compares greater
/// than every finite value and absorbs addition.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  constexpr Valuation(long v) : finite_(true), value_(v) {}  // NOLINT(google-explicit-constructor)

  bool is_infinite() const { return !finite_; }
  long value() const {
    if (!finite_) throw std::logic_error("Valuation: value() of +infinity");
    return value_;
  }

  friend Valuation operator+(Valuation a, Valuation b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return Valuation(a.value_ + b.value_);
  }
  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) return b.finite_ <=> a.finite_;
    return a.value_ <=> b.value_;
  }

  std::string str() const { return finite_ ? std::to_string(value_) : "+inf"; }
  friend std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.str(); }

 private:
  Valuation() : finite_(false), value_(0) {}
  bool finite_;
  long value_;
};

/// Exponent of p in |m| for a nonzero integer m; prime-ness is the caller's concern.
inline long multiplicity(const BigInt& m, const BigInt& p) {
  if (sgn(m) == 0) throw std::domain_error("multiplicity of zero");
  BigInt rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t()));
}

/// v_p(q) = v_p(num) - v_p(den); negative iff p divides the reduced denominator.
inline Valuation vp(const Rational& q, const BigInt& p) {
  if (!is_prime(p)) throw std::domain_error("vp: " + to_string(p) + " is not prime");
  if (q.is_zero()) return Valuation::infinity();
  return Valuation(multiplicity(q.num(), p) - multiplicity(q.den(), p));
}

inline Valuation vp(const Rational& q, std::uint64_t p) { return vp(q, to_big(p)); }

}  // namespace binsum
