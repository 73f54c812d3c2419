#include "lydim/interval.hpp"

#include "lydim/errors.hpp"

namespace lydim {

Interval::Interval(Rational lo, Rational hi) : lo(std::move(lo)), hi(std::move(hi)) {
  if (this->lo > this->hi) {
    throw UsageError("interval endpoints out of order: [" + lydim::to_string(this->lo) +
                     ", " + lydim::to_string(this->hi) + "]");
  }
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  Rational lo = a.lo > b.lo ? a.lo : b.lo;
  Rational hi = a.hi < b.hi ? a.hi : b.hi;
  if (lo > hi) return std::nullopt;
  return Interval(lo, hi);
}

Rational distance(const Interval& a, const Interval& b) {
  if (a.hi < b.lo) return b.lo - a.hi;
  if (b.hi < a.lo) return a.lo - b.hi;
  return 0;
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(a.lo < b.lo ? a.lo : b.lo, a.hi > b.hi ? a.hi : b.hi);
}

std::string to_string(const Interval& iv) {
  return "[" + lydim::to_string(iv.lo) + ", " + lydim::to_string(iv.hi) + "]";
}

}  // namespace lydim
