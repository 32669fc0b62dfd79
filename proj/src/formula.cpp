/* SPDX-License-Identifier: Apache-2.0 */
#include "idense/formula.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace idense {

namespace {
constexpr uint64_t kStableCap = 200000;  // guard for runaway sign analyses
}

// ---------------------------------------------------------------- Poly

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Rational& c) {
  Poly p;
  if (!c.is_zero()) p.c_.push_back(c);
  return p;
}

Poly Poly::var() {
  Poly p;
  p.c_ = {Rational(0), Rational(1)};
  return p;
}

const Rational& Poly::coeff(size_t i) const {
  static const Rational kZero(0);
  return i < c_.size() ? c_[i] : kZero;
}

Rational Poly::leading() const {
  if (c_.empty()) return Rational(0);
  return c_.back();
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Rational Poly::eval_n(uint64_t n) const { return eval(Rational(static_cast<long>(n))); }

double Poly::eval_double(double x) const {
  double acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].to_double();
  return acc;
}

Poly Poly::operator-() const {
  Poly p(*this);
  for (auto& c : p.c_) c = -c;
  return p;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly p;
  p.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < p.c_.size(); ++i) p.c_[i] = a.coeff(i) + b.coeff(i);
  p.trim();
  return p;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  Poly p;
  if (a.is_zero() || b.is_zero()) return p;
  p.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) p.c_[i + j] += a.c_[i] * b.c_[j];
  p.trim();
  return p;
}

Poly Poly::shifted(uint64_t delta) const {
  // p(n + delta) via repeated Horner in (n + delta)
  Poly shift = Poly::var() + Poly::constant(Rational(static_cast<long>(delta)));
  Poly acc;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * shift + Poly::constant(c_[i]);
  return acc;
}

uint64_t Poly::root_bound() const {
  if (c_.size() <= 1) return 1;
  Rational m(0);
  const Rational lead = c_.back().abs();
  for (size_t i = 0; i + 1 < c_.size(); ++i) m = max(m, c_[i].abs() / lead);
  const mpz_class b = (Rational(1) + m).ceil() + 1;
  if (!b.fits_ulong_p() || b.get_ui() > kStableCap)
    throw InternalError("polynomial root bound exceeds cap: " + str());
  return b.get_ui();
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  for (size_t i = c_.size(); i-- > 0;) {
    os << c_[i].str() << "*n^" << i;
    if (i) os << " + ";
  }
  return os.str();
}

// ---------------------------------------------------------------- RatFunc

Rational RatFunc::eval_n(uint64_t n) const {
  const Rational d = den.eval_n(n);
  if (d.is_zero()) throw InternalError("rational function denominator vanished");
  return num.eval_n(n) / d;
}

int RatFunc::eventual_sign() const {
  if (num.is_zero()) return 0;
  return num.leading().sign() * den.leading().sign();
}

ExtendedRational RatFunc::limit() const {
  if (num.is_zero()) return Rational(0);
  const int dn = num.degree(), dd = den.degree();
  if (dn < dd) return Rational(0);
  if (dn == dd) return num.leading() / den.leading();
  return eventual_sign() > 0 ? ExtendedRational::infinity() : ExtendedRational::neg_infinity();
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return {a.num * b.num, a.den * b.den}; }

// ---------------------------------------------------------------- Formula

Formula Formula::constant(const Rational& c) { return from_poly(Poly::constant(c)); }

Formula Formula::from_poly(const Poly& p) { return from_ratfunc({p, Poly::constant(1)}); }

Formula Formula::from_ratfunc(const RatFunc& rf) { return geometric(Rational(1), rf); }

Formula Formula::geometric(const Rational& ratio, const RatFunc& rf) {
  if (ratio.sign() <= 0) throw ValidationError("geometric ratio must be positive");
  Formula f;
  if (!rf.is_zero()) f.terms_.push_back({ratio, rf});
  return f;
}

void Formula::insert_term(GeoTerm t) {
  if (t.rf.is_zero()) return;
  for (auto& u : terms_) {
    if (u.ratio == t.ratio) {
      u.rf = u.rf + t.rf;
      if (u.rf.is_zero())
        terms_.erase(terms_.begin() + (&u - terms_.data()));
      return;
    }
  }
  terms_.push_back(std::move(t));
  std::sort(terms_.begin(), terms_.end(),
            [](const GeoTerm& a, const GeoTerm& b) { return b.ratio < a.ratio; });
}

Rational Formula::eval(uint64_t n) const {
  Rational acc(0);
  for (const auto& t : terms_) acc += pow(t.ratio, static_cast<long>(n)) * t.rf.eval_n(n);
  return acc;
}

double Formula::eval_double(uint64_t n) const {
  double acc = 0;
  const auto x = static_cast<double>(n);
  for (const auto& t : terms_) {
    const double geo = std::pow(t.ratio.to_double(), x);
    const double dd = t.rf.den.eval_double(x);
    acc += geo * t.rf.num.eval_double(x) / dd;
  }
  return acc;
}

ExtendedRational Formula::limit() const {
  if (terms_.empty()) return Rational(0);
  const GeoTerm& dom = terms_.front();
  if (dom.ratio > Rational(1))
    return dom.rf.eventual_sign() > 0 ? ExtendedRational::infinity()
                                      : ExtendedRational::neg_infinity();
  if (dom.ratio == Rational(1)) return dom.rf.limit();
  return Rational(0);
}

std::optional<Rational> Formula::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() != 1 || terms_[0].ratio != Rational(1)) return std::nullopt;
  const RatFunc& rf = terms_[0].rf;
  if (rf.num.degree() > 0 || rf.den.degree() > 0) return std::nullopt;
  return rf.num.leading() / rf.den.leading();
}

Formula Formula::operator-() const {
  Formula f;
  for (const auto& t : terms_) f.terms_.push_back({t.ratio, -t.rf});
  return f;
}

Formula operator+(const Formula& a, const Formula& b) {
  Formula f = a;
  for (const auto& t : b.terms_) f.insert_term(t);
  return f;
}

Formula operator-(const Formula& a, const Formula& b) { return a + (-b); }

Formula operator*(const Formula& a, const Formula& b) {
  Formula f;
  for (const auto& t : a.terms_)
    for (const auto& u : b.terms_) f.insert_term({t.ratio * u.ratio, t.rf * u.rf});
  return f;
}

Formula Formula::scaled(const Rational& c) const {
  if (c.is_zero()) return Formula();
  Formula f;
  for (const auto& t : terms_) f.terms_.push_back({t.ratio, t.rf * RatFunc::constant(c)});
  return f;
}

std::string Formula::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " + ";
    os << "(" << terms_[i].ratio.str() << ")^n * [" << terms_[i].rf.num.str() << "] / ["
       << terms_[i].rf.den.str() << "]";
  }
  return os.str();
}

// ---------------------------------------------------------------- sign analysis

int sign_at(const Formula& f, uint64_t n) { return f.eval(n).sign(); }

namespace {

// Stable-sign threshold for a single q^n * p/r block: beyond every root of
// p and r both have constant sign.
uint64_t single_block_bound(const RatFunc& rf) {
  return std::max(rf.num.root_bound(), rf.den.root_bound());
}

// Certified index from which |ratio^n * a(n)/b(n)| is strictly decreasing,
// given ratio < 1. Polynomial condition on the one-step quotient.
uint64_t decreasing_from(const Rational& ratio, const Poly& a, const Poly& b) {
  // |a(n+1)/b(n+1)| * ratio < |a(n)/b(n)|
  //   <=>  ratio_num*|a(n+1) b(n)| < ratio_den*|a(n) b(n+1)|  beyond sign stability
  const Poly lhs = a.shifted(1) * b;
  const Poly rhs = a * b.shifted(1);
  const Rational rn(ratio.numerator()), rd(ratio.denominator());
  // d(n) = rd*s2*rhs(n) - rn*s1*lhs(n) must be eventually positive
  const int s1 = lhs.leading().sign(), s2 = rhs.leading().sign();
  Poly d = rhs * Poly::constant(rd * Rational(s2)) - lhs * Poly::constant(rn * Rational(s1));
  const uint64_t base = std::max(lhs.root_bound(), rhs.root_bound());
  if (d.is_zero()) throw InternalError("degenerate decreasing-from analysis");
  if (d.leading().sign() < 0)
    throw InternalError("geometric block fails to decay");  // impossible for ratio < 1
  return std::max(base, d.root_bound());
}

}  // namespace

SignAnalysis analyze_sign(const Formula& f) {
  const auto& terms = f.terms();
  if (terms.empty()) return {0, 1};

  const GeoTerm& dom = terms.front();
  SignAnalysis out;
  out.eventual = dom.rf.eventual_sign();

  uint64_t bound = 1;
  for (const auto& t : terms) bound = std::max(bound, single_block_bound(t.rf));

  if (terms.size() > 1) {
    for (size_t i = 1; i < terms.size(); ++i) {
      const Poly a = terms[i].rf.num * dom.rf.den;
      const Poly b = terms[i].rf.den * dom.rf.num;
      bound = std::max(bound, decreasing_from(terms[i].ratio / dom.ratio, a, b));
    }
    // advance until the non-dominant mass drops below the dominant block
    auto tail_small = [&](uint64_t n) {
      Rational lead = (pow(dom.ratio, static_cast<long>(n)) * dom.rf.eval_n(n)).abs();
      Rational rest(0);
      for (size_t i = 1; i < terms.size(); ++i)
        rest += (pow(terms[i].ratio, static_cast<long>(n)) * terms[i].rf.eval_n(n)).abs();
      return rest < lead;
    };
    while (!tail_small(bound)) {
      if (++bound > kStableCap) throw InternalError("sign analysis exceeded cap: " + f.str());
    }
  }
  out.stable_from = bound;
  return out;
}

bool NatCofinite::holds(uint64_t n) const {
  const bool exc = std::binary_search(exceptions.begin(), exceptions.end(), n);
  return eventually != exc;
}

IndexSet to_index_set(const NatCofinite& s) {
  IndexSet exc = IndexSet::finite(s.exceptions);
  if (s.eventually) return IndexSet::complement_of(std::move(exc));
  return exc;
}

namespace {

NatCofinite solve_sign_in(const Formula& f, bool neg, bool zero, bool pos) {
  const SignAnalysis sa = analyze_sign(f);
  auto wanted = [&](int s) { return s < 0 ? neg : (s == 0 ? zero : pos); };
  NatCofinite out;
  out.eventually = wanted(sa.eventual);
  for (uint64_t n = 1; n < sa.stable_from; ++n)
    if (wanted(sign_at(f, n)) != out.eventually) out.exceptions.push_back(n);
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Expr

Expr::Expr(Formula num, Formula den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ValidationError("expression with zero denominator");
}

std::optional<Rational> Expr::as_constant() const {
  const auto n = num_.as_constant();
  const auto d = den_.as_constant();
  if (n && d) return *n / *d;
  // also constant when num = c * den
  if (num_.is_zero()) return Rational(0);
  return std::nullopt;
}

std::optional<std::pair<long, long>> Expr::as_affine_int() const {
  const auto d = den_.as_constant();
  if (!d) return std::nullopt;
  if (num_.is_zero()) return std::make_pair(0L, 0L);
  const auto& ts = num_.terms();
  if (ts.size() != 1 || ts[0].ratio != Rational(1) || ts[0].rf.den.degree() > 0)
    return std::nullopt;
  const Poly& p = ts[0].rf.num;
  if (p.degree() > 1) return std::nullopt;
  const Rational scale = *d * ts[0].rf.den.leading();
  const Rational u = p.coeff(1) / scale, v = p.coeff(0) / scale;
  if (!u.is_integer() || !v.is_integer()) return std::nullopt;
  if (!u.numerator().fits_slong_p() || !v.numerator().fits_slong_p()) return std::nullopt;
  return std::make_pair(u.numerator().get_si(), v.numerator().get_si());
}

void Expr::validate_denominator() const {
  const NatCofinite zeros = solve_sign_in(den_, false, true, false);
  if (zeros.eventually || !zeros.exceptions.empty())
    throw ValidationError("formula denominator vanishes at some index: " + str());
}

Rational Expr::eval(uint64_t n) const {
  const Rational d = den_.eval(n);
  if (d.is_zero()) throw ValidationError("formula denominator vanished at n=" + std::to_string(n));
  return num_.eval(n) / d;
}

double Expr::eval_double(uint64_t n) const {
  // factor the dominant geometric blocks out of both sides to avoid
  // double-precision underflow at large n
  const auto& nt = num_.terms();
  const auto& dt = den_.terms();
  if (nt.empty()) return 0.0;
  const Rational qn = nt.front().ratio, qd = dt.front().ratio;
  const auto x = static_cast<double>(n);
  auto reduced = [&](const std::vector<GeoTerm>& ts, const Rational& qmax) {
    double acc = 0;
    for (const auto& t : ts) {
      const double geo = std::pow((t.ratio / qmax).to_double(), x);
      acc += geo * t.rf.num.eval_double(x) / t.rf.den.eval_double(x);
    }
    return acc;
  };
  const double lead = std::pow((qn / qd).to_double(), x);
  return lead * reduced(nt, qn) / reduced(dt, qd);
}

ExtendedRational Expr::limit() const { return limit_of_ratio(*this, Expr::constant(Rational(1))); }

Expr Expr::operator-() const { return Expr(-num_, den_); }

Expr operator+(const Expr& a, const Expr& b) {
  return Expr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

Expr operator*(const Expr& a, const Expr& b) { return Expr(a.num_ * b.num_, a.den_ * b.den_); }

Expr operator/(const Expr& a, const Expr& b) {
  if (b.num_.is_zero()) throw ValidationError("division by the zero expression");
  return Expr(a.num_ * b.den_, a.den_ * b.num_);
}

Expr Expr::scaled(const Rational& c) const { return Expr(num_.scaled(c), den_); }

std::string Expr::str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

NatCofinite solve_cmp(const Expr& lhs, const Expr& rhs, Rel rel) {
  // sign(lhs - rhs) = sign((n1 d2 - n2 d1) d1 d2)
  const Formula f = (lhs.num() * rhs.den() - rhs.num() * lhs.den()) * lhs.den() * rhs.den();
  switch (rel) {
    case Rel::LT: return solve_sign_in(f, true, false, false);
    case Rel::LE: return solve_sign_in(f, true, true, false);
    case Rel::EQ: return solve_sign_in(f, false, true, false);
    case Rel::NE: return solve_sign_in(f, true, false, true);
    case Rel::GE: return solve_sign_in(f, false, true, true);
    case Rel::GT: return solve_sign_in(f, false, false, true);
  }
  throw InternalError("bad relation");
}

ExtendedRational limit_of_ratio(const Expr& lhs, const Expr& rhs) {
  // lhs/rhs = (lhs.num * rhs.den) / (lhs.den * rhs.num)
  const Formula num = lhs.num() * rhs.den();
  const Formula den = lhs.den() * rhs.num();
  if (num.is_zero()) return Rational(0);
  if (den.is_zero()) throw InternalError("limit of ratio with zero denominator");
  const GeoTerm& dn = num.terms().front();
  const GeoTerm& dd = den.terms().front();
  if (dn.ratio < dd.ratio) return Rational(0);
  if (dd.ratio < dn.ratio) {
    const int s = dn.rf.eventual_sign() * dd.rf.eventual_sign();
    return s > 0 ? ExtendedRational::infinity() : ExtendedRational::neg_infinity();
  }
  return RatFunc{dn.rf.num * dd.rf.den, dn.rf.den * dd.rf.num}.limit();
}

// ---------------------------------------------------------------- parser

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ValidationError("formula parse error at position " + std::to_string(pos) + ": " + what +
                          " in \"" + s + "\"");
  }

  Expr parse() {
    Expr e = parse_sum();
    skip_ws();
    if (pos != s.size()) fail("trailing input");
    return e;
  }

  Expr parse_sum() {
    Expr acc = parse_product();
    for (;;) {
      if (eat('+')) acc = acc + parse_product();
      else if (eat('-')) acc = acc - parse_product();
      else return acc;
    }
  }

  Expr parse_product() {
    Expr acc = parse_unary();
    for (;;) {
      if (eat('*')) acc = acc * parse_unary();
      else if (eat('/')) acc = acc / parse_unary();
      else return acc;
    }
  }

  Expr parse_unary() {
    if (eat('-')) return -parse_unary();
    eat('+');
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_atom();
    if (!eat('^')) return base;
    Expr ex = parse_unary();  // right-associative, allows -2 and (n+1)
    return apply_power(base, ex);
  }

  Expr apply_power(const Expr& base, const Expr& exponent) {
    const auto aff = exponent.as_affine_int();
    if (!aff) fail("exponent must be an integer or integer-affine in the index");
    const auto [u, v] = *aff;
    if (u == 0) return integer_power(base, v);
    const auto c = base.as_constant();
    if (!c) fail("variable exponents need a constant base");
    if (c->sign() <= 0) fail("variable exponents need a positive base");
    const Rational ratio = pow(*c, u);
    const Rational scale = pow(*c, v);
    return Expr(Formula::geometric(ratio, RatFunc::constant(scale)));
  }

  Expr integer_power(const Expr& base, long v) {
    if (v == 0) return Expr::constant(Rational(1));
    const bool inv = v < 0;
    Expr acc = Expr::constant(Rational(1));
    for (long i = 0; i < std::abs(v); ++i) acc = acc * base;
    return inv ? Expr::constant(Rational(1)) / acc : acc;
  }

  Expr parse_atom() {
    skip_ws();
    if (eat('(')) {
      Expr e = parse_sum();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    const char c = peek();
    if (c == 'n' || c == 'k') {
      ++pos;
      return Expr::var();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return Expr::constant(Rational::parse(s.substr(start, pos - start)));
    }
    fail("expected a number, the index variable, or '('");
  }
};

}  // namespace

Expr parse_expr(const std::string& text) {
  Parser p(text);
  return p.parse();
}

}  // namespace idense
