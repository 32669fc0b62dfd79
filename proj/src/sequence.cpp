/* SPDX-License-Identifier: Apache-2.0 */
#include "idense/sequence.hpp"

#include <algorithm>
#include <cmath>

namespace idense {

SeqRule SeqRule::constant(const Rational& v) {
  SeqRule r;
  r.kind_ = Kind::Constant;
  r.value_ = v;
  return r;
}

SeqRule SeqRule::formula(const Expr& e) {
  e.validate_denominator();
  const ExtendedRational lim = e.limit();
  if (!lim.is_finite())
    throw ValidationError("sequence rule must have a finite limit: " + e.str());
  SeqRule r;
  r.kind_ = Kind::Formula;
  r.expr_ = e;
  r.limit_ = lim.finite();
  return r;
}

SeqRule SeqRule::formula(const Expr& e, const Rational& stated_limit) {
  SeqRule r = formula(e);
  if (r.limit_ != stated_limit)
    throw ValidationError("stated limit " + stated_limit.str() +
                          " does not match the symbolic limit " + r.limit_.str());
  return r;
}

Rational SeqRule::eval(uint64_t n) const {
  return kind_ == Kind::Constant ? value_ : expr_.eval(n);
}

double SeqRule::eval_double(uint64_t n) const {
  return kind_ == Kind::Constant ? value_.to_double() : expr_.eval_double(n);
}

SeqRule SeqRule::plus_const(const Rational& c) const {
  if (kind_ == Kind::Constant) return constant(value_ + c);
  return formula(expr_ + Expr::constant(c), limit_ + c);
}

SeqRule SeqRule::negated() const {
  if (kind_ == Kind::Constant) return constant(-value_);
  return formula(-expr_, -limit_);
}

SeqRule rule_sum(const SeqRule& a, const SeqRule& b) {
  if (a.kind() == SeqRule::Kind::Constant) return b.plus_const(a.constant_value());
  if (b.kind() == SeqRule::Kind::Constant) return a.plus_const(b.constant_value());
  return SeqRule::formula(a.expr() + b.expr(), a.limit() + b.limit());
}

namespace {

bool grammar_empty(const IndexSet& s) {
  const FinitenessResult fr = analyze_finiteness(s);
  return fr.finite && fr.members.empty();
}

void validate_sequence_partition(const std::vector<SeqPattern>& ps) {
  if (ps.empty()) throw InvalidPartition("a described sequence needs at least one pattern");
  // structural: pairwise disjoint, union covers the naturals
  for (size_t i = 0; i < ps.size(); ++i)
    for (size_t j = i + 1; j < ps.size(); ++j)
      if (!grammar_empty(set_intersect(ps[i].index_set, ps[j].index_set)))
        throw InvalidPartition("patterns " + std::to_string(i) + " and " + std::to_string(j) +
                               " overlap");
  std::vector<IndexSet> all;
  all.reserve(ps.size());
  for (const auto& p : ps) all.push_back(p.index_set);
  if (!grammar_empty(IndexSet::complement_of(IndexSet::union_of(std::move(all)))))
    throw InvalidPartition("patterns do not cover the naturals");
  // spot scan (cheap cross-check of the structural decision)
  for (uint64_t n = 1; n <= 10000; ++n) {
    int hits = 0;
    for (const auto& p : ps) hits += p.index_set.member(n) ? 1 : 0;
    if (hits != 1)
      throw InvalidPartition("index " + std::to_string(n) + " covered " + std::to_string(hits) +
                             " times");
  }
}

}  // namespace

DescribedSequence::DescribedSequence(std::vector<SeqPattern> patterns, bool validate_partition)
    : patterns_(std::move(patterns)) {
  if (validate_partition) validate_sequence_partition(patterns_);
  else if (patterns_.empty())
    throw InvalidPartition("a described sequence needs at least one pattern");
}

Rational DescribedSequence::eval(uint64_t n) const {
  for (const auto& p : patterns_)
    if (p.index_set.member(n)) return p.rule.eval(n);
  throw InternalError("sequence patterns do not cover index " + std::to_string(n));
}

double DescribedSequence::eval_double(uint64_t n) const {
  for (const auto& p : patterns_)
    if (p.index_set.member(n)) return p.rule.eval_double(n);
  throw InternalError("sequence patterns do not cover index " + std::to_string(n));
}

DescribedSequence DescribedSequence::plus_const(const Rational& c) const {
  std::vector<SeqPattern> ps;
  ps.reserve(patterns_.size());
  for (const auto& p : patterns_) ps.push_back({p.index_set, p.rule.plus_const(c)});
  return DescribedSequence(std::move(ps), false);
}

DescribedSequence DescribedSequence::negated() const {
  std::vector<SeqPattern> ps;
  ps.reserve(patterns_.size());
  for (const auto& p : patterns_) ps.push_back({p.index_set, p.rule.negated()});
  return DescribedSequence(std::move(ps), false);
}

DescribedSequence pointwise_sum(const DescribedSequence& x, const DescribedSequence& y) {
  std::vector<SeqPattern> ps;
  for (const auto& px : x.patterns_) {
    for (const auto& py : y.patterns_) {
      IndexSet both = set_intersect(px.index_set, py.index_set);
      if (grammar_empty(both)) continue;
      ps.push_back({std::move(both), rule_sum(px.rule, py.rule)});
    }
  }
  return DescribedSequence(std::move(ps), false);
}

std::vector<Rational> pattern_limit_set(const DescribedSequence& x, Ideal ideal) {
  std::vector<Rational> out;
  for (const auto& p : x.patterns())
    if (!in_ideal(ideal, p.index_set)) out.push_back(p.rule.limit());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty())
    throw InternalError("pattern limit set empty: partition cannot lie inside a nontrivial ideal");
  return out;
}

Rational i_limsup(const DescribedSequence& x, Ideal ideal) {
  return pattern_limit_set(x, ideal).back();
}

Rational i_liminf(const DescribedSequence& x, Ideal ideal) {
  return pattern_limit_set(x, ideal).front();
}

std::optional<Rational> i_limit(const DescribedSequence& x, Ideal ideal) {
  const auto ls = pattern_limit_set(x, ideal);
  if (ls.size() == 1) return ls.front();
  return std::nullopt;
}

namespace {

Rational oracle_limsup_impl(const DescribedSequence& x, Ideal ideal, const OracleParams& params) {
  const uint64_t n = params.horizon;
  if (n < 1000) throw PreconditionError("horizon oracle needs N >= 1000");
  std::vector<double> vals;
  vals.reserve(n);
  for (uint64_t k = 1; k <= n; ++k) vals.push_back(x.eval_double(k));
  std::sort(vals.begin(), vals.end());

  const double need = ideal == Ideal::Fin
                          ? std::log(static_cast<double>(n))
                          : params.delta.to_double() * static_cast<double>(n);

  const Rational step = params.grid_step;
  const double dmin = vals.front(), dmax = vals.back();
  const long i_lo = static_cast<long>(std::floor(dmin / step.to_double())) - 2;
  const long i_hi = static_cast<long>(std::ceil(dmax / step.to_double())) + 2;

  long best = i_lo - 1;
  for (long i = i_lo; i <= i_hi; ++i) {
    const Rational b = step * Rational(i);
    const double bd = b.to_double();
    const auto cnt = static_cast<double>(vals.end() - std::upper_bound(vals.begin(), vals.end(), bd));
    if (cnt >= need) best = i;
  }
  if (best < i_lo) throw InternalError("horizon oracle accepted no threshold");
  return step * Rational(best) + step;
}

}  // namespace

Rational horizon_oracle_limsup(const DescribedSequence& x, Ideal ideal,
                               const OracleParams& params) {
  return oracle_limsup_impl(x, ideal, params);
}

Rational horizon_oracle_liminf(const DescribedSequence& x, Ideal ideal,
                               const OracleParams& params) {
  return -oracle_limsup_impl(x.negated(), ideal, params);
}

}  // namespace idense
