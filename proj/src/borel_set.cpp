/* SPDX-License-Identifier: Apache-2.0 */
#include "idense/borel_set.hpp"

#include <algorithm>
#include <sstream>

namespace idense {

Interval::Interval(ExtendedRational lo_, ExtendedRational hi_, bool lo_closed_, bool hi_closed_)
    : lo(std::move(lo_)), hi(std::move(hi_)), lo_closed(lo_closed_), hi_closed(hi_closed_) {
  if (hi < lo) throw ValidationError("interval with hi < lo");
  if (!lo.is_finite()) lo_closed = false;
  if (!hi.is_finite()) hi_closed = false;
  if (lo == hi) {
    if (!lo.is_finite()) throw ValidationError("degenerate interval at infinity");
    lo_closed = hi_closed = true;
  }
}

bool Interval::contains(const Rational& x) const {
  const ExtendedRational ex(x);
  if (ex < lo || hi < ex) return false;
  if (ex == lo && !lo_closed) return false;
  if (ex == hi && !hi_closed) return false;
  return true;
}

std::string Interval::str() const {
  std::ostringstream os;
  os << (lo_closed ? '[' : '(') << lo << ", " << hi << (hi_closed ? ']' : ')');
  return os.str();
}

std::string to_string(ComponentClass c) {
  switch (c) {
    case ComponentClass::Full: return "full";
    case ComponentClass::RationalsOnly: return "rationals_only";
    case ComponentClass::IrrationalsOnly: return "irrationals_only";
  }
  return "?";
}

// Trusted constructor for parts the sweep already canonicalized.
class BorelOps {
 public:
  static RationalBorelSet make(std::vector<Component> c, std::vector<Rational> p,
                               std::vector<Rational> m) {
    RationalBorelSet s;
    s.components_ = std::move(c);
    s.plus_points_ = std::move(p);
    s.minus_points_ = std::move(m);
    return s;
  }
};

namespace {

// bit 0: the piece holds its rationals, bit 1: its irrationals
constexpr uint8_t kMaskNone = 0;
constexpr uint8_t kMaskRat = 1;
constexpr uint8_t kMaskIrr = 2;
constexpr uint8_t kMaskFull = 3;

uint8_t class_mask(ComponentClass c) {
  switch (c) {
    case ComponentClass::Full: return kMaskFull;
    case ComponentClass::RationalsOnly: return kMaskRat;
    case ComponentClass::IrrationalsOnly: return kMaskIrr;
  }
  return kMaskNone;
}

ComponentClass mask_class(uint8_t m) {
  switch (m) {
    case kMaskRat: return ComponentClass::RationalsOnly;
    case kMaskIrr: return ComponentClass::IrrationalsOnly;
    default: return ComponentClass::Full;
  }
}

// Membership of a set over the elementary decomposition induced by `cuts`:
// masks for the cuts.size()+1 open pieces (first and last unbounded) and a
// membership flag for every cut point.
struct Profile {
  std::vector<Rational> cuts;
  std::vector<uint8_t> piece_mask;
  std::vector<bool> cut_in;
};

// A representative interior point of piece i, used to probe membership.
Rational piece_probe(const std::vector<Rational>& cuts, size_t i) {
  if (cuts.empty()) return Rational(0);
  if (i == 0) return cuts.front() - Rational(1);
  if (i == cuts.size()) return cuts.back() + Rational(1);
  return (cuts[i - 1] + cuts[i]) / Rational(2);
}

// Mask of `s` on the open piece around the probe point: which component of s
// covers it (pieces never straddle component endpoints of s by construction).
uint8_t mask_at(const RationalBorelSet& s, const Rational& probe) {
  for (const auto& c : s.components()) {
    const ExtendedRational p(probe);
    if (c.iv.lo < p && p < c.iv.hi) return class_mask(c.cls);
  }
  return kMaskNone;
}

Profile make_profile(const RationalBorelSet& s, std::vector<Rational> cuts) {
  Profile pr;
  pr.cuts = std::move(cuts);
  pr.piece_mask.resize(pr.cuts.size() + 1);
  pr.cut_in.resize(pr.cuts.size());
  for (size_t i = 0; i < pr.piece_mask.size(); ++i)
    pr.piece_mask[i] = mask_at(s, piece_probe(pr.cuts, i));
  for (size_t i = 0; i < pr.cuts.size(); ++i) pr.cut_in[i] = s.contains(pr.cuts[i]);
  return pr;
}

std::vector<Rational> merge_cuts(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Rebuilds the unique canonical component/point form from a profile.
RationalBorelSet from_profile(const Profile& pr) {
  std::vector<Component> comps;
  std::vector<Rational> plus, minus;

  const size_t n = pr.cuts.size();
  if (n == 0) {
    if (pr.piece_mask.empty() || pr.piece_mask[0] == kMaskNone) return RationalBorelSet::empty_set();
    return RationalBorelSet::interval(Interval::whole_line(), mask_class(pr.piece_mask[0]));
  }

  bool run_open = pr.piece_mask[0] != kMaskNone;
  ExtendedRational run_lo = ExtendedRational::neg_infinity();
  bool run_lo_closed = false;
  uint8_t run_mask = pr.piece_mask[0];

  for (size_t j = 0; j < n; ++j) {
    const uint8_t left = pr.piece_mask[j];
    const uint8_t right = pr.piece_mask[j + 1];
    const bool in = pr.cut_in[j];
    const Rational& x = pr.cuts[j];

    if (left == right && left != kMaskNone) {
      // same class continues across the cut; record the point discrepancy
      const bool expected = left != kMaskIrr;  // cut points are rational
      if (in != expected) {
        if (expected) minus.push_back(x); else plus.push_back(x);
      }
      continue;
    }

    bool consumed = false;
    if (left != kMaskNone) {
      bool hi_closed = in && left != kMaskIrr;
      if (hi_closed) consumed = true;
      comps.push_back({Interval(run_lo, x, run_lo_closed, hi_closed), mask_class(run_mask)});
      run_open = false;
    }
    if (right != kMaskNone) {
      bool lo_closed = in && !consumed && right != kMaskIrr;
      if (lo_closed) consumed = true;
      run_open = true;
      run_lo = x;
      run_lo_closed = lo_closed;
      run_mask = right;
    }
    if (in && !consumed) plus.push_back(x);
  }

  if (run_open)
    comps.push_back({Interval(run_lo, ExtendedRational::infinity(), run_lo_closed, false),
                     mask_class(run_mask)});

  return BorelOps::make(std::move(comps), std::move(plus), std::move(minus));
}

}  // namespace

RationalBorelSet RationalBorelSet::whole_line() {
  return interval(Interval::whole_line(), ComponentClass::Full);
}

RationalBorelSet RationalBorelSet::interval(const Interval& iv, ComponentClass cls) {
  RationalBorelSet s;
  if (iv.is_point()) {
    if (cls != ComponentClass::IrrationalsOnly) s.plus_points_.push_back(iv.lo.finite());
    return s;
  }
  Interval v = iv;
  if (cls == ComponentClass::IrrationalsOnly) v = Interval::open(iv.lo, iv.hi);
  s.components_.push_back({v, cls});
  return s;
}

RationalBorelSet RationalBorelSet::single_point(const Rational& x) {
  RationalBorelSet s;
  s.plus_points_.push_back(x);
  return s;
}

RationalBorelSet RationalBorelSet::assemble(const std::vector<Component>& parts,
                                            const std::vector<Rational>& plus,
                                            const std::vector<Rational>& minus) {
  RationalBorelSet acc;
  for (const auto& part : parts) acc = set_union(acc, interval(part.iv, part.cls));
  for (const auto& p : plus) acc = set_union(acc, single_point(p));
  for (const auto& m : minus) acc = set_diff(acc, single_point(m));
  return acc;
}

bool RationalBorelSet::is_bounded() const {
  for (const auto& c : components_)
    if (!c.iv.is_bounded()) return false;
  return true;
}

std::vector<Rational> RationalBorelSet::breakpoints() const {
  std::vector<Rational> cuts;
  for (const auto& c : components_) {
    if (c.iv.lo.is_finite()) cuts.push_back(c.iv.lo.finite());
    if (c.iv.hi.is_finite()) cuts.push_back(c.iv.hi.finite());
  }
  cuts.insert(cuts.end(), plus_points_.begin(), plus_points_.end());
  cuts.insert(cuts.end(), minus_points_.begin(), minus_points_.end());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

std::optional<Rational> RationalBorelSet::min_breakpoint() const {
  auto cuts = breakpoints();
  if (cuts.empty()) return std::nullopt;
  return cuts.front();
}

std::optional<Rational> RationalBorelSet::max_breakpoint() const {
  auto cuts = breakpoints();
  if (cuts.empty()) return std::nullopt;
  return cuts.back();
}

ExtendedRational RationalBorelSet::measure() const {
  ExtendedRational total = Rational(0);
  for (const auto& c : components_) {
    if (c.cls == ComponentClass::RationalsOnly) continue;
    if (!c.iv.is_bounded()) return ExtendedRational::infinity();
    total = total + c.iv.length();
  }
  return total;
}

bool RationalBorelSet::contains(const Rational& x) const {
  if (std::binary_search(plus_points_.begin(), plus_points_.end(), x)) return true;
  if (std::binary_search(minus_points_.begin(), minus_points_.end(), x)) return false;
  for (const auto& c : components_) {
    if (!c.iv.contains(x)) continue;
    return c.cls != ComponentClass::IrrationalsOnly;
  }
  return false;
}

RationalBorelSet set_union(const RationalBorelSet& a, const RationalBorelSet& b) {
  auto cuts = merge_cuts(a.breakpoints(), b.breakpoints());
  Profile pa = make_profile(a, cuts), pb = make_profile(b, cuts);
  for (size_t i = 0; i < pa.piece_mask.size(); ++i) pa.piece_mask[i] |= pb.piece_mask[i];
  for (size_t i = 0; i < pa.cut_in.size(); ++i) pa.cut_in[i] = pa.cut_in[i] || pb.cut_in[i];
  return from_profile(pa);
}

RationalBorelSet set_intersect(const RationalBorelSet& a, const RationalBorelSet& b) {
  auto cuts = merge_cuts(a.breakpoints(), b.breakpoints());
  Profile pa = make_profile(a, cuts), pb = make_profile(b, cuts);
  for (size_t i = 0; i < pa.piece_mask.size(); ++i) pa.piece_mask[i] &= pb.piece_mask[i];
  for (size_t i = 0; i < pa.cut_in.size(); ++i) pa.cut_in[i] = pa.cut_in[i] && pb.cut_in[i];
  return from_profile(pa);
}

RationalBorelSet set_complement(const RationalBorelSet& a) {
  Profile pa = make_profile(a, a.breakpoints());
  for (auto& m : pa.piece_mask) m = static_cast<uint8_t>(kMaskFull ^ m);
  for (size_t i = 0; i < pa.cut_in.size(); ++i) pa.cut_in[i] = !pa.cut_in[i];
  return from_profile(pa);
}

RationalBorelSet set_diff(const RationalBorelSet& a, const RationalBorelSet& b) {
  auto cuts = merge_cuts(a.breakpoints(), b.breakpoints());
  Profile pa = make_profile(a, cuts), pb = make_profile(b, cuts);
  for (size_t i = 0; i < pa.piece_mask.size(); ++i)
    pa.piece_mask[i] &= static_cast<uint8_t>(~pb.piece_mask[i]);
  for (size_t i = 0; i < pa.cut_in.size(); ++i) pa.cut_in[i] = pa.cut_in[i] && !pb.cut_in[i];
  return from_profile(pa);
}

RationalBorelSet set_symm_diff(const RationalBorelSet& a, const RationalBorelSet& b) {
  auto cuts = merge_cuts(a.breakpoints(), b.breakpoints());
  Profile pa = make_profile(a, cuts), pb = make_profile(b, cuts);
  for (size_t i = 0; i < pa.piece_mask.size(); ++i) pa.piece_mask[i] ^= pb.piece_mask[i];
  for (size_t i = 0; i < pa.cut_in.size(); ++i)
    pa.cut_in[i] = static_cast<bool>(pa.cut_in[i] ^ pb.cut_in[i]);
  return from_profile(pa);
}

bool set_subset(const RationalBorelSet& a, const RationalBorelSet& b) {
  return set_diff(a, b).is_empty();
}

namespace {

struct SupportInterval {
  ExtendedRational lo, hi;
};

// Maximal intervals carrying full measure: closures of Full/IrrationalsOnly
// components, merged whenever the closures touch.
std::vector<SupportInterval> support_intervals(const RationalBorelSet& s) {
  std::vector<SupportInterval> out;
  for (const auto& c : s.components()) {
    if (c.cls == ComponentClass::RationalsOnly) continue;
    if (!out.empty() && c.iv.lo <= out.back().hi) {
      if (out.back().hi < c.iv.hi) out.back().hi = c.iv.hi;
    } else {
      out.push_back({c.iv.lo, c.iv.hi});
    }
  }
  return out;
}

}  // namespace

RationalBorelSet RationalBorelSet::essential_interior() const {
  RationalBorelSet r;
  for (const auto& si : support_intervals(*this))
    r.components_.push_back({Interval::open(si.lo, si.hi), ComponentClass::Full});
  return r;
}

SideProfile side_profile(const RationalBorelSet& s, const Rational& p) {
  SideProfile sp;
  const ExtendedRational ep(p);
  sp.left_full = sp.right_full = false;
  sp.left_reach = sp.right_reach = ExtendedRational::infinity();
  ExtendedRational prev_hi = ExtendedRational::neg_infinity();
  ExtendedRational next_lo = ExtendedRational::infinity();
  for (const auto& si : support_intervals(s)) {
    if (si.lo < ep && ep <= si.hi) {
      sp.left_full = true;
      sp.left_reach = ep - si.lo;
    }
    if (si.lo <= ep && ep < si.hi) {
      sp.right_full = true;
      sp.right_reach = si.hi - ep;
    }
    if (si.hi <= ep && prev_hi < si.hi) prev_hi = si.hi;
    if (ep <= si.lo && si.lo < next_lo) next_lo = si.lo;
  }
  if (!sp.left_full) sp.left_reach = ep - prev_hi;
  if (!sp.right_full) sp.right_reach = next_lo - ep;
  return sp;
}

std::string RationalBorelSet::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& c : components_) {
    if (!first) os << " u ";
    first = false;
    os << c.iv.str();
    if (c.cls == ComponentClass::RationalsOnly) os << "@Q";
    if (c.cls == ComponentClass::IrrationalsOnly) os << "@Qc";
  }
  for (const auto& p : plus_points_) {
    if (!first) os << " u ";
    first = false;
    os << "{" << p << "}";
  }
  if (!minus_points_.empty()) {
    os << " \\ {";
    for (size_t i = 0; i < minus_points_.size(); ++i)
      os << (i ? "," : "") << minus_points_[i];
    os << "}";
  }
  if (first) os << "{}";
  return os.str();
}

}  // namespace idense
