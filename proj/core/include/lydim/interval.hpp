#ifndef LYDIM_INTERVAL_HPP
#define LYDIM_INTERVAL_HPP

#include <optional>
#include <string>

#include "lydim/rational.hpp"

namespace lydim {

/// Closed interval [lo, hi] with exact rational endpoints. lo <= hi always.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() : lo(0), hi(0) {}
  Interval(Rational lo, Rational hi);

  Rational length() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& other) const {
    return lo <= other.lo && other.hi <= hi;
  }

  bool operator==(const Interval& other) const = default;
};

std::optional<Interval> intersect(const Interval& a, const Interval& b);

/// inf{|x-y| : x in a, y in b}; 0 when they touch or overlap.
Rational distance(const Interval& a, const Interval& b);

/// Smallest interval containing both.
Interval hull(const Interval& a, const Interval& b);

std::string to_string(const Interval& iv);

}  // namespace lydim

#endif  // LYDIM_INTERVAL_HPP
