/* SPDX-License-Identifier: Apache-2.0 */
#include "idense/rational.hpp"

#include <ostream>
#include <sstream>

namespace idense {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  std::string t = s;
  // strip surrounding whitespace
  const auto b = t.find_first_not_of(" \t");
  const auto e = t.find_last_not_of(" \t");
  if (b == std::string::npos) throw ValidationError("empty rational literal");
  t = t.substr(b, e - b + 1);
  const auto slash = t.find('/');
  try {
    if (slash == std::string::npos) {
      mpq_class q(mpz_class(t));
      return Rational(q);
    }
    mpz_class num(t.substr(0, slash));
    mpz_class den(t.substr(slash + 1));
    if (den == 0) throw ValidationError("rational with zero denominator: " + s);
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
  } catch (const std::invalid_argument&) {
    throw ValidationError("malformed rational literal: " + s);
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ValidationError("rational division by zero");
  v_ /= o.v_;
  return *this;
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

mpz_class Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
  mpz_class num = v_.get_num();
  const mpz_class den = v_.get_den();
  const bool neg = num < 0;
  if (neg) num = -num;
  mpz_class ip = num / den;
  mpz_class rem = num % den;
  std::ostringstream out;
  if (neg && (ip != 0 || rem != 0)) out << "-";
  out << ip.get_str();
  if (digits > 0) {
    out << ".";
    std::string frac;
    for (int i = 0; i < digits; ++i) {
      rem *= 10;
      mpz_class d = rem / den;
      rem %= den;
      frac += d.get_str();
    }
    out << frac;
  }
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (exp < 0) return Rational(1) / pow(base, -exp);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exp));
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exp));
  return Rational(mpq_class(num, den));
}

Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

const Rational& ExtendedRational::finite() const {
  if (tag_ != 0) throw InternalError("finite() on infinite value");
  return v_;
}

ExtendedRational ExtendedRational::parse(const std::string& s) {
  if (s == "inf" || s == "+inf") return infinity();
  if (s == "-inf") return neg_infinity();
  return ExtendedRational(Rational::parse(s));
}

ExtendedRational ExtendedRational::operator-() const {
  ExtendedRational r(*this);
  r.tag_ = -r.tag_;
  if (r.tag_ == 0) r.v_ = -r.v_;
  return r;
}

ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.tag_ == 0 && b.tag_ == 0) return ExtendedRational(a.v_ + b.v_);
  if (a.tag_ != 0 && b.tag_ != 0) {
    if (a.tag_ != b.tag_) throw InternalError("inf + (-inf) is undefined");
    return a;
  }
  return a.tag_ != 0 ? a : b;
}

ExtendedRational operator-(const ExtendedRational& a, const ExtendedRational& b) { return a + (-b); }

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.tag_ != b.tag_) return false;
  return a.tag_ != 0 || a.v_ == b.v_;
}

bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.tag_ < b.tag_) return true;
  if (a.tag_ > b.tag_) return false;
  return a.tag_ == 0 && a.v_ < b.v_;
}

bool operator<=(const ExtendedRational& a, const ExtendedRational& b) { return a < b || a == b; }

std::string ExtendedRational::str() const {
  if (tag_ > 0) return "inf";
  if (tag_ < 0) return "-inf";
  return v_.str();
}

std::ostream& operator<<(std::ostream& os, const ExtendedRational& r) { return os << r.str(); }

}  // namespace idense
