/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "idense/errors.hpp"

namespace idense {

// Exact arbitrary-precision rational, always kept in canonical form
// (positive denominator, gcd(|num|, den) = 1).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors int literals
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rational(const mpz_class& z) : v_(z) {}

  // Accepts "p/q", "p", optional sign, arbitrary precision.
  static Rational parse(const std::string& s);

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  mpz_class floor() const;
  mpz_class ceil() const;

  // Always emits the "p/q" form, including q = 1, to match the wire format.
  std::string str() const;
  // Decimal expansion with the given number of fractional digits (truncated
  // toward zero), used for the human-readable CSV columns.
  std::string decimal(int digits) const;
  double to_double() const { return v_.get_d(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

Rational pow(const Rational& base, long exp);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

// Rational extended with the two symbolic infinities. Used for interval
// endpoints and for measures of unbounded sets; no arithmetic beyond what
// those need.
class ExtendedRational {
 public:
  ExtendedRational() : tag_(0), v_() {}
  ExtendedRational(const Rational& r) : tag_(0), v_(r) {}  // NOLINT
  ExtendedRational(long n) : tag_(0), v_(n) {}             // NOLINT

  static ExtendedRational infinity() { return ExtendedRational(+1); }
  static ExtendedRational neg_infinity() { return ExtendedRational(-1); }
  static ExtendedRational parse(const std::string& s);

  bool is_finite() const { return tag_ == 0; }
  bool is_pos_inf() const { return tag_ > 0; }
  bool is_neg_inf() const { return tag_ < 0; }
  const Rational& finite() const;

  ExtendedRational operator-() const;
  friend ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b);
  friend ExtendedRational operator-(const ExtendedRational& a, const ExtendedRational& b);

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
  friend bool operator!=(const ExtendedRational& a, const ExtendedRational& b) { return !(a == b); }
  friend bool operator<(const ExtendedRational& a, const ExtendedRational& b);
  friend bool operator<=(const ExtendedRational& a, const ExtendedRational& b);
  friend bool operator>(const ExtendedRational& a, const ExtendedRational& b) { return b < a; }
  friend bool operator>=(const ExtendedRational& a, const ExtendedRational& b) { return b <= a; }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const ExtendedRational& r);

 private:
  explicit ExtendedRational(int tag) : tag_(tag), v_() {}
  int tag_;  // -1, 0, +1
  Rational v_;
};

}  // namespace idense
