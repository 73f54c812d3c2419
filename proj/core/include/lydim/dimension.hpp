#ifndef LYDIM_DIMENSION_HPP
#define LYDIM_DIMENSION_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lydim/coupled_map.hpp"
#include "lydim/ifs.hpp"
#include "lydim/interval.hpp"

namespace lydim {

/// Number of grid boxes [anchor + k*eps, anchor + (k+1)*eps) whose overlap
/// with some cover interval has positive length (a shared endpoint alone
/// does not count, so an eps-aligned interval occupies exactly one box).
/// Deterministic: the grid is anchored, by convention at the domain's left
/// endpoint. Exact rational arithmetic throughout.
struct BoxCount {
  std::uint64_t count = 0;
  bool epsilon_exceeds_domain = false;  // warning: one box swallows everything
};
BoxCount box_count(const std::vector<Interval>& cover, const Rational& epsilon,
                   const Rational& anchor);

/// Box-dimension estimate: least-squares slope of log N(eps) vs log(1/eps).
/// For the self-similar-with-gaps sets built here box and Hausdorff dimension
/// coincide, which is what makes the slope a meaningful check; the fit
/// residual is reported so callers can reject bad fits.
struct DimensionEstimate {
  double slope = 0;
  double intercept = 0;
  double residual = 0;  // rms of fit residuals
  struct Scale {
    std::size_t depth;
    double epsilon;
    std::uint64_t boxes;
  };
  std::vector<Scale> scales;
};

/// Builds the depth-n basic-set cover for each depth in [depth_lo, depth_hi]
/// and box-counts it at eps = diam(D) * (min lambda)^-depth. Needs at least
/// 4 scales; word counts are capped by `budget`.
DimensionEstimate estimate_dimension(const PiecewiseExpandingMap& f,
                                     std::size_t depth_lo, std::size_t depth_hi,
                                     std::size_t budget = 1u << 22);

/// |slope - p| <= tol verdict, echoing 2*p as the Li-Yorke-pair dimension
/// figure the roots feed into.
struct MoranComparison {
  double slope = 0;
  double root = 0;
  double gap = 0;  // slope - root, signed
  double tol = 0;
  bool within = false;
  double ly_dimension = 0;  // 2 * root
};
MoranComparison compare_to_moran(const DimensionEstimate& est, const MoranRoot& root,
                                 double tol);

}  // namespace lydim

#endif  // LYDIM_DIMENSION_HPP
