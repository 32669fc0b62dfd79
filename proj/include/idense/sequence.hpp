/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "idense/formula.hpp"
#include "idense/ideal.hpp"
#include "idense/index_set.hpp"
#include "idense/rational.hpp"

namespace idense {

// Per-pattern value rule: a constant, or a closed-form expression with its
// (finite) classical limit along any infinite index set.
class SeqRule {
 public:
  enum class Kind { Constant, Formula };

  static SeqRule constant(const Rational& v);
  // Derives the limit symbolically; throws if it is not finite.
  static SeqRule formula(const Expr& e);
  // Validates the stated limit against the symbolic one.
  static SeqRule formula(const Expr& e, const Rational& stated_limit);

  Kind kind() const { return kind_; }
  const Rational& constant_value() const { return value_; }
  const Expr& expr() const { return expr_; }

  Rational eval(uint64_t n) const;
  double eval_double(uint64_t n) const;
  // The value the rule converges to along any infinite index set.
  Rational limit() const { return kind_ == Kind::Constant ? value_ : limit_; }

  SeqRule plus_const(const Rational& c) const;
  SeqRule negated() const;
  friend SeqRule rule_sum(const SeqRule& a, const SeqRule& b);

 private:
  Kind kind_ = Kind::Constant;
  Rational value_;
  Expr expr_;
  Rational limit_;
};

struct SeqPattern {
  IndexSet index_set;
  SeqRule rule;
};

// A bounded real sequence described by a finite partition of the naturals
// into index-set patterns, each with a convergent value rule.
class DescribedSequence {
 public:
  explicit DescribedSequence(std::vector<SeqPattern> patterns, bool validate_partition = true);

  const std::vector<SeqPattern>& patterns() const { return patterns_; }

  Rational eval(uint64_t n) const;
  double eval_double(uint64_t n) const;

  DescribedSequence plus_const(const Rational& c) const;
  DescribedSequence negated() const;

  friend DescribedSequence pointwise_sum(const DescribedSequence& x, const DescribedSequence& y);

 private:
  std::vector<SeqPattern> patterns_;
};

// Limits of the rules on the patterns outside the ideal; these are exactly
// the ideal cluster values of the sequence. Sorted, deduplicated, nonempty.
std::vector<Rational> pattern_limit_set(const DescribedSequence& x, Ideal ideal);

Rational i_limsup(const DescribedSequence& x, Ideal ideal);
Rational i_liminf(const DescribedSequence& x, Ideal ideal);
std::optional<Rational> i_limit(const DescribedSequence& x, Ideal ideal);

struct OracleParams {
  uint64_t horizon = 100000;
  Rational delta = Rational(1, 100);      // density proxy for the NatDensityZero ideal
  Rational grid_step = Rational(1, 1000);
};

// Brute-force finite-horizon estimate. Evaluates the first N terms, scans a
// rational threshold grid, and accepts a threshold when the exceedance count
// passes the ideal's proxy (Fin: count >= ln N; NatDensityZero: fraction >=
// delta). Returns the grid supremum of the accepted region.
Rational horizon_oracle_limsup(const DescribedSequence& x, Ideal ideal,
                               const OracleParams& params = {});
Rational horizon_oracle_liminf(const DescribedSequence& x, Ideal ideal,
                               const OracleParams& params = {});

}  // namespace idense
