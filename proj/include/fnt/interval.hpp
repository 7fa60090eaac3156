/*
 * Closed rational intervals [lo, hi] -- the "types" assigned by typings.
 *
 * An interval is always non-empty (lo <= hi).  Operations that can empty
 * an interval (intersection) return std::optional; the caller turns a
 * nullopt into an Infeasible outcome with a witness.
 */
#pragma once

#include <optional>
#include <string>

#include "fnt/rational.hpp"

namespace fnt {

struct interval {
  rat lo, hi;

  interval() = default;
  interval(rat l, rat h) : lo(std::move(l)), hi(std::move(h)) {}

  static interval zero() { return interval(rat(0), rat(0)); }
  static interval point(const rat& v) { return interval(v, v); }

  bool valid() const { return lo <= hi; }
  bool is_zero() const { return lo.is_zero() && hi.is_zero(); }
  bool contains(const rat& v) const { return lo <= v && v <= hi; }

  friend interval operator+(const interval& a, const interval& b) {
    return interval(a.lo + b.lo, a.hi + b.hi);
  }
  friend interval operator-(const interval& a) { return interval(-a.hi, -a.lo); }
  friend bool operator==(const interval& a, const interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
  friend bool operator!=(const interval& a, const interval& b) { return !(a == b); }

  // Set containment: does a contain b?
  bool contains(const interval& b) const { return lo <= b.lo && b.hi <= hi; }

  std::string str() const { return "[" + lo.str() + "," + hi.str() + "]"; }
};

// Lattice meet; nullopt when the intersection is empty.
inline std::optional<interval> intersect(const interval& a, const interval& b) {
  rat lo = max(a.lo, b.lo);
  rat hi = min(a.hi, b.hi);
  if (hi < lo) return std::nullopt;
  return interval(lo, hi);
}

}  // namespace fnt
