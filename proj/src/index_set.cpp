/* SPDX-License-Identifier: Apache-2.0 */
#include "idense/index_set.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "idense/ideal.hpp"

namespace idense {

namespace {

constexpr uint64_t kPeriodCap = 1u << 22;  // lcm guard; far above any shipped grammar use

uint64_t lcm_capped(uint64_t a, uint64_t b) {
  const uint64_t g = std::gcd(a, b);
  const uint64_t l = (a / g) * b;
  if (l > kPeriodCap) throw InternalError("index-set period exceeds cap");
  return l;
}

bool pow_fits(uint64_t m, unsigned e, uint64_t limit) {
  unsigned __int128 acc = 1;
  for (unsigned i = 0; i < e; ++i) {
    acc *= m;
    if (acc > limit) return false;
  }
  return true;
}

uint64_t pow_u64(uint64_t m, unsigned e) {
  uint64_t acc = 1;
  for (unsigned i = 0; i < e; ++i) acc *= m;
  return acc;
}

uint64_t pow_mod(uint64_t b, unsigned e, uint64_t mod) {
  uint64_t acc = 1 % mod;
  b %= mod;
  for (unsigned i = 0; i < e; ++i) acc = (acc * b) % mod;
  return acc;
}

}  // namespace

uint64_t integer_root(uint64_t x, unsigned e) {
  if (e == 0) throw InternalError("integer_root with e = 0");
  if (e == 1 || x <= 1) return x;
  auto r = static_cast<uint64_t>(std::pow(static_cast<double>(x), 1.0 / e));
  while (r > 0 && !pow_fits(r, e, x)) --r;
  while (pow_fits(r + 1, e, x)) ++r;
  return r;
}

IndexSet IndexSet::all() {
  IndexSet s;
  s.kind_ = Kind::All;
  return s;
}

IndexSet IndexSet::empty() {
  IndexSet s;
  s.kind_ = Kind::Empty;
  return s;
}

IndexSet IndexSet::finite(std::vector<uint64_t> elems) {
  IndexSet s;
  s.kind_ = Kind::Finite;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  while (!elems.empty() && elems.front() == 0) elems.erase(elems.begin());
  s.elems_ = std::move(elems);
  return s;
}

IndexSet IndexSet::ap(uint64_t a, uint64_t d) {
  if (d < 1) throw ValidationError("arithmetic progression needs d >= 1");
  IndexSet s;
  s.kind_ = Kind::AP;
  s.a_ = a;
  s.d_ = d;
  return s;
}

IndexSet IndexSet::powers(unsigned e) {
  if (e < 2) throw ValidationError("powers atom needs e >= 2");
  IndexSet s;
  s.kind_ = Kind::Powers;
  s.e_ = e;
  return s;
}

IndexSet IndexSet::union_of(std::vector<IndexSet> args) {
  if (args.empty()) return empty();
  if (args.size() == 1) return std::move(args.front());
  IndexSet s;
  s.kind_ = Kind::Union;
  s.args_ = std::move(args);
  return s;
}

IndexSet IndexSet::intersection_of(std::vector<IndexSet> args) {
  if (args.empty()) return all();
  if (args.size() == 1) return std::move(args.front());
  IndexSet s;
  s.kind_ = Kind::Intersection;
  s.args_ = std::move(args);
  return s;
}

IndexSet IndexSet::complement_of(IndexSet arg) {
  IndexSet s;
  s.kind_ = Kind::Complement;
  s.args_.push_back(std::move(arg));
  return s;
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) { return IndexSet::union_of({a, b}); }
IndexSet set_intersect(const IndexSet& a, const IndexSet& b) {
  return IndexSet::intersection_of({a, b});
}
IndexSet set_diff(const IndexSet& a, const IndexSet& b) {
  return IndexSet::intersection_of({a, IndexSet::complement_of(b)});
}

bool IndexSet::member(uint64_t k) const {
  if (k == 0) return false;
  switch (kind_) {
    case Kind::All: return true;
    case Kind::Empty: return false;
    case Kind::Finite: return std::binary_search(elems_.begin(), elems_.end(), k);
    case Kind::AP: return k >= a_ && (k - a_) % d_ == 0;
    case Kind::Powers: {
      const uint64_t r = integer_root(k, e_);
      return pow_u64(r, e_) == k;
    }
    case Kind::Union:
      for (const auto& x : args_)
        if (x.member(k)) return true;
      return false;
    case Kind::Intersection:
      for (const auto& x : args_)
        if (!x.member(k)) return false;
      return true;
    case Kind::Complement: return !args_[0].member(k);
  }
  return false;
}

std::vector<uint64_t> IndexSet::members_up_to(uint64_t n) const {
  std::vector<uint64_t> out;
  for (uint64_t k = 1; k <= n; ++k)
    if (member(k)) out.push_back(k);
  return out;
}

std::string IndexSet::str() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::All: os << "N"; break;
    case Kind::Empty: os << "{}"; break;
    case Kind::Finite: {
      os << "{";
      for (size_t i = 0; i < elems_.size(); ++i) os << (i ? "," : "") << elems_[i];
      os << "}";
      break;
    }
    case Kind::AP: os << "ap(" << a_ << "," << d_ << ")"; break;
    case Kind::Powers: os << "powers(" << e_ << ")"; break;
    case Kind::Union:
    case Kind::Intersection: {
      os << (kind_ == Kind::Union ? "union(" : "inter(");
      for (size_t i = 0; i < args_.size(); ++i) os << (i ? "," : "") << args_[i].str();
      os << ")";
      break;
    }
    case Kind::Complement: os << "compl(" << args_[0].str() << ")"; break;
  }
  return os.str();
}

namespace {

// Replaces the null atoms (powers, finite lists) by Empty, leaving an
// eventually periodic expression with the same natural density.
IndexSet skeletonize(const IndexSet& s) {
  switch (s.kind()) {
    case IndexSet::Kind::Powers:
    case IndexSet::Kind::Finite:
      return IndexSet::empty();
    case IndexSet::Kind::Union:
    case IndexSet::Kind::Intersection: {
      std::vector<IndexSet> args;
      args.reserve(s.args().size());
      for (const auto& x : s.args()) args.push_back(skeletonize(x));
      return s.kind() == IndexSet::Kind::Union ? IndexSet::union_of(std::move(args))
                                               : IndexSet::intersection_of(std::move(args));
    }
    case IndexSet::Kind::Complement:
      return IndexSet::complement_of(skeletonize(s.args()[0]));
    default:
      return s;
  }
}

struct PeriodicData {
  uint64_t period = 1;
  uint64_t threshold = 1;  // membership is periodic beyond this index
};

void periodic_scan(const IndexSet& s, PeriodicData& pd) {
  switch (s.kind()) {
    case IndexSet::Kind::AP:
      pd.period = lcm_capped(pd.period, s.ap_d());
      pd.threshold = std::max(pd.threshold, s.ap_a());
      break;
    case IndexSet::Kind::Finite:
      if (!s.finite_elems().empty())
        pd.threshold = std::max(pd.threshold, s.finite_elems().back());
      break;
    default:
      for (const auto& x : s.args()) periodic_scan(x, pd);
      break;
  }
}

PeriodicData periodic_data(const IndexSet& s) {
  PeriodicData pd;
  periodic_scan(s, pd);
  return pd;
}

void collect_power_exponents(const IndexSet& s, std::set<unsigned>& out) {
  if (s.kind() == IndexSet::Kind::Powers) out.insert(s.powers_e());
  for (const auto& x : s.args()) collect_power_exponents(x, out);
}

// Expression over m whose membership equals member(s, m^e) for every m >= 1.
IndexSet substitute_pow(const IndexSet& s, unsigned e) {
  switch (s.kind()) {
    case IndexSet::Kind::All: return IndexSet::all();
    case IndexSet::Kind::Empty: return IndexSet::empty();
    case IndexSet::Kind::Finite: {
      std::vector<uint64_t> ms;
      for (uint64_t v : s.finite_elems()) {
        const uint64_t m = integer_root(v, e);
        if (pow_u64(m, e) == v) ms.push_back(m);
      }
      return IndexSet::finite(std::move(ms));
    }
    case IndexSet::Kind::AP: {
      const uint64_t a = s.ap_a(), d = s.ap_d();
      std::vector<IndexSet> residues;
      for (uint64_t r = 0; r < d; ++r)
        if (pow_mod(r, e, d) == a % d) residues.push_back(IndexSet::ap(r, d));
      if (residues.empty()) return IndexSet::empty();
      IndexSet congruent = IndexSet::union_of(std::move(residues));
      // strip the finitely many m with m^e < a
      std::vector<uint64_t> bad;
      for (uint64_t m = 1; a > 0 && pow_fits(m, e, a - 1); ++m)
        if (congruent.member(m)) bad.push_back(m);
      if (bad.empty()) return congruent;
      return set_diff(congruent, IndexSet::finite(std::move(bad)));
    }
    case IndexSet::Kind::Powers: {
      const unsigned f = s.powers_e();
      const unsigned g = std::gcd(f, e);
      const unsigned fp = f / g;
      return fp <= 1 ? IndexSet::all() : IndexSet::powers(fp);
    }
    case IndexSet::Kind::Union:
    case IndexSet::Kind::Intersection: {
      std::vector<IndexSet> args;
      for (const auto& x : s.args()) args.push_back(substitute_pow(x, e));
      return s.kind() == IndexSet::Kind::Union ? IndexSet::union_of(std::move(args))
                                               : IndexSet::intersection_of(std::move(args));
    }
    case IndexSet::Kind::Complement:
      return IndexSet::complement_of(substitute_pow(s.args()[0], e));
  }
  return IndexSet::empty();
}

}  // namespace

Rational natural_density(const IndexSet& k) {
  const IndexSet skel = skeletonize(k);
  const PeriodicData pd = periodic_data(skel);
  uint64_t count = 0;
  for (uint64_t i = pd.threshold + 1; i <= pd.threshold + pd.period; ++i)
    if (skel.member(i)) ++count;
  return Rational(static_cast<long>(count)) / Rational(static_cast<long>(pd.period));
}

FinitenessResult analyze_finiteness(const IndexSet& k) {
  if (natural_density(k) > Rational(0)) return {false, {}};

  const PeriodicData pd = periodic_data(k);
  std::set<uint64_t> members;
  const uint64_t direct_bound = pd.threshold + pd.period;
  for (uint64_t i = 1; i <= direct_bound; ++i)
    if (k.member(i)) members.insert(i);

  std::set<unsigned> exps;
  collect_power_exponents(k, exps);
  for (unsigned e : exps) {
    const IndexSet sub = substitute_pow(k, e);
    const FinitenessResult rec = analyze_finiteness(sub);
    if (!rec.finite) return {false, {}};
    for (uint64_t m : rec.members) members.insert(pow_u64(m, e));
  }
  return {true, std::vector<uint64_t>(members.begin(), members.end())};
}

bool is_finite(const IndexSet& k) { return analyze_finiteness(k).finite; }

std::optional<uint64_t> min_element(const IndexSet& k) {
  const FinitenessResult res = analyze_finiteness(k);
  if (res.finite) {
    if (res.members.empty()) return std::nullopt;
    return res.members.front();
  }

  // Infinite set: the minimum is either a small direct member or comes
  // through a power route.
  uint64_t cap = UINT64_MAX;
  std::set<unsigned> exps;
  collect_power_exponents(k, exps);
  for (unsigned e : exps) {
    const IndexSet sub = substitute_pow(k, e);
    const auto m = min_element(sub);
    if (m && pow_fits(*m, e, UINT64_MAX / 2)) cap = std::min(cap, pow_u64(*m, e));
  }
  const PeriodicData pd = periodic_data(k);
  const uint64_t fallback =
      pd.threshold + pd.period * (4 + 4 * pd.period * (exps.size() + 2) * (exps.size() + 2));
  const uint64_t scan_to = cap == UINT64_MAX ? fallback : cap;
  for (uint64_t i = 1; i <= scan_to; ++i)
    if (k.member(i)) return i;
  if (cap != UINT64_MAX) return cap;
  throw InternalError("min_element scan exhausted on infinite set: " + k.str());
}

bool grammar_empty(const IndexSet& k) {
  const FinitenessResult fr = analyze_finiteness(k);
  return fr.finite && fr.members.empty();
}

void validate_index_partition(const std::vector<IndexSet>& parts, uint64_t scan_to) {
  if (parts.empty()) throw InvalidPartition("a partition needs at least one index set");
  for (size_t i = 0; i < parts.size(); ++i)
    for (size_t j = i + 1; j < parts.size(); ++j)
      if (!grammar_empty(set_intersect(parts[i], parts[j])))
        throw InvalidPartition("index sets " + std::to_string(i) + " and " + std::to_string(j) +
                               " overlap");
  std::vector<IndexSet> all = parts;
  if (!grammar_empty(IndexSet::complement_of(IndexSet::union_of(std::move(all)))))
    throw InvalidPartition("index sets do not cover the naturals");
  for (uint64_t n = 1; n <= scan_to; ++n) {
    int hits = 0;
    for (const auto& p : parts) hits += p.member(n) ? 1 : 0;
    if (hits != 1)
      throw InvalidPartition("index " + std::to_string(n) + " covered " + std::to_string(hits) +
                             " times");
  }
}

bool in_ideal(Ideal i, const IndexSet& k) {
  if (i == Ideal::Fin) return is_finite(k);
  return natural_density(k).is_zero();
}

bool in_filter(Ideal i, const IndexSet& k) {
  return in_ideal(i, IndexSet::complement_of(k));
}

}  // namespace idense
