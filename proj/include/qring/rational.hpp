#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "qring/errors.hpp"

namespace qring {

using i64 = std::int64_t;

/// All ring arithmetic is exact 64-bit. Overflow raises `errc::overflow`
/// instead of wrapping; windows used by the checkers keep values far below
/// the boundary, so an overflow always means a caller escaped its scale.
inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) fail(errc::overflow, "integer addition overflow");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) fail(errc::overflow, "integer subtraction overflow");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) fail(errc::overflow, "integer multiplication overflow");
  return r;
}

inline i64 checked_neg(i64 a) { return checked_sub(0, a); }

/// Reduced fraction of 64-bit integers; denominator is always positive.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(i64 n) : num_(n), den_(1) {} // NOLINT: implicit by design
  Rational(i64 n, i64 d) : num_(n), den_(d) { normalize(); }

  i64 num() const { return num_; }
  i64 den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  Rational operator-() const { return Rational(checked_neg(num_), den_, already_reduced{}); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                    checked_mul(a.den_, b.den_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) fail(errc::precondition, "rational division by zero");
    return Rational(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

private:
  struct already_reduced {};
  Rational(i64 n, i64 d, already_reduced) : num_(n), den_(d) {}

  void normalize() {
    if (den_ == 0) fail(errc::precondition, "rational with zero denominator");
    if (den_ < 0) {
      num_ = checked_neg(num_);
      den_ = checked_neg(den_);
    }
    i64 g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  i64 num_;
  i64 den_;
};

} // namespace qring
