#include "lydim/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "lydim/errors.hpp"

namespace lydim {

BoxCount box_count(const std::vector<Interval>& cover, const Rational& epsilon,
                   const Rational& anchor) {
  if (!(epsilon > 0)) throw DomainError("box size must be positive");
  BoxCount out;
  if (cover.empty()) return out;

  Interval extent = cover.front();
  for (const Interval& iv : cover) extent = hull(extent, iv);
  out.epsilon_exceeds_domain = epsilon > extent.length();

  std::set<BigInt> boxes;
  for (const Interval& iv : cover) {
    if (!(iv.length() > 0)) continue;  // zero-length pieces occupy no open overlap
    // box k = [anchor + k*eps, anchor + (k+1)*eps) counts iff the overlap has
    // positive length: k*eps < hi - anchor and lo - anchor < (k+1)*eps
    const BigInt k_lo = rational_floor((iv.lo - anchor) / epsilon);
    BigInt k_hi = rational_floor((iv.hi - anchor) / epsilon);
    if (Rational(k_hi) * epsilon == iv.hi - anchor) --k_hi;  // right endpoint only touches
    for (BigInt k = k_lo; k <= k_hi; ++k) boxes.insert(k);
  }
  out.count = static_cast<std::uint64_t>(boxes.size());
  return out;
}

DimensionEstimate estimate_dimension(const PiecewiseExpandingMap& f, std::size_t depth_lo,
                                     std::size_t depth_hi, std::size_t budget) {
  if (depth_lo < 1 || depth_hi < depth_lo) throw UsageError("bad depth range");
  if (depth_hi - depth_lo + 1 < 4) {
    throw UsageError("need at least 4 scales, got " +
                     std::to_string(depth_hi - depth_lo + 1));
  }
  const Rational min_slope = f.min_slope();
  DimensionEstimate est;
  for (std::size_t depth = depth_lo; depth <= depth_hi; ++depth) {
    std::vector<BasicSet> cover = limit_set_cover(f, depth, budget);
    std::vector<Interval> intervals;
    intervals.reserve(cover.size());
    for (const BasicSet& b : cover) intervals.push_back(b.interval);
    // one honest scale per depth: eps = diam(D) / (min lambda)^depth
    Rational eps = f.domain.length();
    for (std::size_t d = 0; d < depth; ++d) eps /= min_slope;
    BoxCount boxes = box_count(intervals, eps, f.domain.lo);
    est.scales.push_back({depth, to_double(eps), boxes.count});
  }

  // least squares of log N against log(1/eps)
  const std::size_t n = est.scales.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& sc : est.scales) {
    if (sc.boxes == 0) throw ConsistencyError("empty cover in dimension estimate");
    const double x = std::log(1.0 / sc.epsilon);
    const double y = std::log(static_cast<double>(sc.boxes));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  if (std::abs(denom) < 1e-12) {
    throw ConsistencyError("degenerate fit: all scales coincide");
  }
  est.slope = (n * sxy - sx * sy) / denom;
  est.intercept = (sy - est.slope * sx) / n;
  double ss = 0;
  for (const auto& sc : est.scales) {
    const double x = std::log(1.0 / sc.epsilon);
    const double y = std::log(static_cast<double>(sc.boxes));
    const double r = y - (est.slope * x + est.intercept);
    ss += r * r;
  }
  est.residual = std::sqrt(ss / n);
  return est;
}

MoranComparison compare_to_moran(const DimensionEstimate& est, const MoranRoot& root,
                                 double tol) {
  MoranComparison out;
  out.slope = est.slope;
  out.root = root.p;
  out.gap = est.slope - root.p;
  out.tol = tol;
  out.within = std::abs(out.gap) <= tol;
  out.ly_dimension = 2.0 * root.p;
  return out;
}

}  // namespace lydim
