/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idense/index_set.hpp"
#include "idense/rational.hpp"

namespace idense {

// Dense polynomial in the sequence index n with rational coefficients.
class Poly {
 public:
  Poly() = default;
  static Poly constant(const Rational& c);
  static Poly var();

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Rational& coeff(size_t i) const;
  Rational leading() const;

  Rational eval(const Rational& x) const;
  Rational eval_n(uint64_t n) const;
  double eval_double(double x) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);

  // p(n + delta)
  Poly shifted(uint64_t delta) const;

  // Bound B such that every real root is < B (Cauchy bound), as an integer.
  uint64_t root_bound() const;

  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Ratio of polynomials. The denominator is nonzero as a polynomial; callers
// that evaluate over all n >= 1 must validate pointwise nonvanishing.
struct RatFunc {
  Poly num;
  Poly den = Poly::constant(1);

  static RatFunc constant(const Rational& c) { return {Poly::constant(c), Poly::constant(1)}; }
  bool is_zero() const { return num.is_zero(); }
  Rational eval_n(uint64_t n) const;
  int eventual_sign() const;
  ExtendedRational limit() const;
  RatFunc operator-() const { return {-num, den}; }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
};

// One geometric block ratio^n * rf(n), ratio > 0.
struct GeoTerm {
  Rational ratio;
  RatFunc rf;
};

// Finite sum of geometric blocks with distinct ratios, kept sorted by ratio
// descending. Ratio 1 carries the plain rational-function part.
class Formula {
 public:
  Formula() = default;
  static Formula zero() { return Formula(); }
  static Formula constant(const Rational& c);
  static Formula from_poly(const Poly& p);
  static Formula from_ratfunc(const RatFunc& rf);
  static Formula geometric(const Rational& ratio, const RatFunc& rf);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<GeoTerm>& terms() const { return terms_; }

  Rational eval(uint64_t n) const;
  double eval_double(uint64_t n) const;
  ExtendedRational limit() const;

  std::optional<Rational> as_constant() const;

  Formula operator-() const;
  friend Formula operator+(const Formula& a, const Formula& b);
  friend Formula operator-(const Formula& a, const Formula& b);
  friend Formula operator*(const Formula& a, const Formula& b);
  Formula scaled(const Rational& c) const;

  std::string str() const;

 private:
  void insert_term(GeoTerm t);
  std::vector<GeoTerm> terms_;
};

// sign(f(n)) is constantly `eventual` for every n >= stable_from.
struct SignAnalysis {
  int eventual = 0;
  uint64_t stable_from = 1;
};

SignAnalysis analyze_sign(const Formula& f);
int sign_at(const Formula& f, uint64_t n);

// A subset of the naturals that is finite or cofinite, as produced by the
// exact inequality solvers.
struct NatCofinite {
  bool eventually = false;          // truth value for all large n
  std::vector<uint64_t> exceptions; // the finitely many n that differ

  bool holds(uint64_t n) const;
  bool always() const { return eventually && exceptions.empty(); }
  bool never() const { return !eventually && exceptions.empty(); }
};

IndexSet to_index_set(const NatCofinite& s);

enum class Rel { LT, LE, EQ, NE, GE, GT };

// Quotient of two formulas with a denominator that never vanishes on
// n >= 1. The closed form for every sequence value and radius rule.
class Expr {
 public:
  Expr() : num_(Formula::zero()), den_(Formula::constant(1)) {}
  explicit Expr(Formula num) : num_(std::move(num)), den_(Formula::constant(1)) {}
  Expr(Formula num, Formula den);

  static Expr constant(const Rational& c) { return Expr(Formula::constant(c)); }
  static Expr var() { return Expr(Formula::from_poly(Poly::var())); }

  const Formula& num() const { return num_; }
  const Formula& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  std::optional<Rational> as_constant() const;
  // u*n + v with integer u, v when the expression is an integer-affine form.
  std::optional<std::pair<long, long>> as_affine_int() const;

  // Throws ValidationError if the denominator vanishes at some n >= 1.
  void validate_denominator() const;

  Rational eval(uint64_t n) const;
  double eval_double(uint64_t n) const;
  ExtendedRational limit() const;

  Expr operator-() const;
  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  Expr scaled(const Rational& c) const;

  std::string str() const;

 private:
  Formula num_, den_;
};

// Exact solution of {n >= 1 : lhs(n) rel rhs(n)}.
NatCofinite solve_cmp(const Expr& lhs, const Expr& rhs, Rel rel);

// Limit of the pointwise ratio lhs/rhs, by dominant-ratio comparison.
// rhs must be eventually nonzero.
ExtendedRational limit_of_ratio(const Expr& lhs, const Expr& rhs);

// Parses the closed sequence-formula grammar: integers, rationals, the index
// variable (n or k), + - * /, parentheses, and ^ with an integer or
// integer-affine exponent (constant bases only for affine exponents).
Expr parse_expr(const std::string& text);

}  // namespace idense
