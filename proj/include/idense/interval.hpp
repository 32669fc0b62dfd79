/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <string>

#include "idense/rational.hpp"

namespace idense {

// An interval of the real line with rational (or symbolically infinite)
// endpoints and per-endpoint open/closed flags. Degenerate intervals
// (lo == hi) are always closed points. Infinite endpoints are always open.
struct Interval {
  ExtendedRational lo;
  ExtendedRational hi;
  bool lo_closed = false;
  bool hi_closed = false;

  Interval() = default;
  Interval(ExtendedRational lo_, ExtendedRational hi_, bool lo_closed_, bool hi_closed_);

  static Interval closed(const Rational& a, const Rational& b) { return Interval(a, b, true, true); }
  static Interval open(const ExtendedRational& a, const ExtendedRational& b) {
    return Interval(a, b, false, false);
  }
  static Interval point(const Rational& a) { return Interval(a, a, true, true); }
  static Interval whole_line() {
    return Interval(ExtendedRational::neg_infinity(), ExtendedRational::infinity(), false, false);
  }

  bool is_point() const { return lo.is_finite() && hi.is_finite() && lo == hi; }
  bool is_bounded() const { return lo.is_finite() && hi.is_finite(); }
  ExtendedRational length() const { return hi - lo; }
  bool contains(const Rational& x) const;

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi && a.lo_closed == b.lo_closed && a.hi_closed == b.hi_closed;
  }

  std::string str() const;
};

}  // namespace idense
