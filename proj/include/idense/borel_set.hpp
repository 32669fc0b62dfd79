/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "idense/interval.hpp"
#include "idense/rational.hpp"

namespace idense {

// Classification of the points an interval component actually holds.
// Measure contribution: the full interval length for Full and
// IrrationalsOnly, zero for RationalsOnly.
enum class ComponentClass { Full, RationalsOnly, IrrationalsOnly };

std::string to_string(ComponentClass c);

struct Component {
  Interval iv;
  ComponentClass cls = ComponentClass::Full;

  friend bool operator==(const Component& a, const Component& b) {
    return a.iv == b.iv && a.cls == b.cls;
  }
};

// A finite union of rational-endpoint interval components, each tagged with
// a ComponentClass, plus finitely many added and removed rational points.
// Values are immutable and always canonical:
//   - components are non-degenerate, sorted, with pairwise disjoint point sets;
//   - components of equal class never share an endpoint (they are merged,
//     recording an interior gap as a minus point when needed);
//   - IrrationalsOnly components carry open flags (their rational endpoints
//     are never members);
//   - isolated member points live in plus_points, removed interior points in
//     minus_points, and endpoint membership of Full/RationalsOnly components
//     is carried by the closed flags.
class RationalBorelSet {
 public:
  RationalBorelSet() = default;

  static RationalBorelSet empty_set() { return RationalBorelSet(); }
  static RationalBorelSet whole_line();
  static RationalBorelSet interval(const Interval& iv, ComponentClass cls = ComponentClass::Full);
  static RationalBorelSet single_point(const Rational& x);
  // Canonicalizes arbitrary (possibly touching or overlapping) raw parts by
  // taking their union, then applying the point modifications.
  static RationalBorelSet assemble(const std::vector<Component>& parts,
                                   const std::vector<Rational>& plus,
                                   const std::vector<Rational>& minus);

  const std::vector<Component>& components() const { return components_; }
  const std::vector<Rational>& plus_points() const { return plus_points_; }
  const std::vector<Rational>& minus_points() const { return minus_points_; }

  bool is_empty() const { return components_.empty() && plus_points_.empty(); }
  bool is_bounded() const;
  // Smallest/largest finite breakpoint (component endpoints and point mods).
  std::optional<Rational> min_breakpoint() const;
  std::optional<Rational> max_breakpoint() const;
  std::vector<Rational> breakpoints() const;

  ExtendedRational measure() const;
  bool contains(const Rational& x) const;

  // Points having a neighborhood contained in the set up to measure zero.
  // Always an open Full-class set.
  RationalBorelSet essential_interior() const;

  friend RationalBorelSet set_union(const RationalBorelSet& a, const RationalBorelSet& b);
  friend RationalBorelSet set_intersect(const RationalBorelSet& a, const RationalBorelSet& b);
  friend RationalBorelSet set_complement(const RationalBorelSet& a);
  friend RationalBorelSet set_diff(const RationalBorelSet& a, const RationalBorelSet& b);
  friend RationalBorelSet set_symm_diff(const RationalBorelSet& a, const RationalBorelSet& b);

  friend bool operator==(const RationalBorelSet& a, const RationalBorelSet& b) {
    return a.components_ == b.components_ && a.plus_points_ == b.plus_points_ &&
           a.minus_points_ == b.minus_points_;
  }

  std::string str() const;

 private:
  friend class BorelOps;  // internal trusted constructor used by the sweep
  std::vector<Component> components_;
  std::vector<Rational> plus_points_;
  std::vector<Rational> minus_points_;
};

RationalBorelSet set_union(const RationalBorelSet& a, const RationalBorelSet& b);
RationalBorelSet set_intersect(const RationalBorelSet& a, const RationalBorelSet& b);
RationalBorelSet set_complement(const RationalBorelSet& a);
RationalBorelSet set_diff(const RationalBorelSet& a, const RationalBorelSet& b);
RationalBorelSet set_symm_diff(const RationalBorelSet& a, const RationalBorelSet& b);

// True iff the point set of `a` is contained in the point set of `b`.
bool set_subset(const RationalBorelSet& a, const RationalBorelSet& b);

// Local structure of a set on both sides of a point: whether the elementary
// interval abutting p from the left/right carries full measure, and how far
// it extends. Drives quotient limits and density classification.
struct SideProfile {
  bool left_full = false;
  bool right_full = false;
  // Distance from p to the nearest breakpoint strictly below/above p
  // (infinite when the abutting elementary interval is unbounded).
  ExtendedRational left_reach = ExtendedRational::infinity();
  ExtendedRational right_reach = ExtendedRational::infinity();
};

SideProfile side_profile(const RationalBorelSet& s, const Rational& p);

}  // namespace idense
