#ifndef LYDIM_COUPLED_MAP_HPP
#define LYDIM_COUPLED_MAP_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lydim/ifs.hpp"
#include "lydim/interval.hpp"
#include "lydim/rational.hpp"
#include "lydim/symbols.hpp"
#include "lydim/transition_matrix.hpp"

namespace lydim {

/// One affine expanding branch: f(x) = +-slope*x + offset on `domain`,
/// with slope > 1, so d(f(x), f(y)) = slope * d(x, y) exactly on the piece.
struct Branch {
  Interval domain;
  Rational slope;
  bool reflect = false;
  Rational offset = 0;

  Rational apply(const Rational& x) const {
    return (reflect ? Rational(-slope * x) : Rational(slope * x)) + offset;
  }
  Rational invert(const Rational& y) const {
    return (reflect ? Rational(offset - y) : Rational(y - offset)) / slope;
  }
  Interval image() const;
  Interval preimage(const Interval& iv) const;
};

/// Piecewise-affine map realizing a transition matrix: branch pieces V_i are
/// pairwise positively separated compact intervals and f(V_i) contains every
/// V_j selected by row i.
struct PiecewiseExpandingMap {
  Interval domain;
  TransitionMatrix matrix;
  std::vector<Branch> branches;

  std::size_t piece_count() const { return branches.size(); }
  Rational min_slope() const;
  /// 1-based index of the piece containing x (pieces are closed and
  /// disjoint, so the index is unique), or nullopt when x lies in a gap.
  std::optional<std::size_t> piece_of(const Rational& x) const;
};

/// Builds the branch of slope +-lambda_i over V_i whose image is the smallest
/// interval containing union{ V_j : (A)_ij = 1 }, centered over that hull
/// when the image is longer than needed.
///
/// Throws SynthesisError naming the row and minimum feasible lambda when
/// lambda_i*|V_i| cannot span the hull, and DomainError for layout problems
/// (overlapping or touching pieces, lambda <= 1, pieces outside the domain).
PiecewiseExpandingMap synthesize(const TransitionMatrix& a,
                                 const std::vector<Interval>& layout,
                                 const std::vector<Rational>& lambdas,
                                 const std::vector<bool>& reflect,
                                 const Interval& domain);

/// Per-row covering, pairwise gaps, expansion rates, plus the matrix-side
/// facts (branching row, irreducibility). Exact where inputs are exact;
/// never throws, failures live in the report.
struct MapVerification {
  struct RowCheck {
    std::size_t row = 0;           // 1-based
    bool covered = false;
    Interval required_hull{0, 0};  // hull of the V_j selected by this row
    Interval image{0, 0};
    Rational slack = 0;            // image length minus hull length
  };
  struct GapCheck {
    std::size_t i = 0, j = 0;  // 1-based pair
    Rational gap = 0;
  };
  bool strictly_coupled_expanding = false;  // all checks below pass
  bool covering_ok = false;
  bool strict_separation_ok = false;  // every pairwise gap > 0
  bool interiors_disjoint = false;    // the non-strict form of the condition
  bool expanding_ok = false;          // every slope > 1
  bool irreducible = false;
  std::optional<std::size_t> branching;
  Rational min_gap = 0;
  std::vector<RowCheck> rows;
  std::vector<GapCheck> gaps;
  std::vector<std::string> failures;
};
MapVerification verify(const PiecewiseExpandingMap& f);

/// Basic set of an admissible word: the points whose first |w| iterates
/// visit V_{w_0}, ..., V_{w_{n}} in order.
struct BasicSet {
  SymbolWord word;
  Interval interval;
};

/// Computes intersection_{j} f^-j(V_{w_j}) by back-iteration of branch
/// inverses. Throws DomainError for inadmissible words; a resulting empty
/// interval would mean the map is inconsistent and throws ConsistencyError.
BasicSet basic_set(const PiecewiseExpandingMap& f, const SymbolWord& w);

/// All basic sets of word length `depth`, in lexicographic word order.
/// They are pairwise disjoint and each is contained in its parent.
std::vector<BasicSet> limit_set_cover(const PiecewiseExpandingMap& f,
                                      std::size_t depth, std::size_t budget);

/// Itinerary (a_0 ... a_steps) with f^j(x) in V_{a_j}. Iteration is exact
/// rational, so membership decisions are sharp; a boundary point of a piece
/// codes as that piece. Throws EscapeError (with step and point) when an
/// iterate lands in a gap.
SymbolWord code_orbit(const PiecewiseExpandingMap& f, const Rational& x,
                      std::size_t steps);

/// Branch inverse S_i = (f|_{V_i})^-1 as a contraction of ratio 1/lambda_i.
Similarity branch_inverse_similarity(const PiecewiseExpandingMap& f,
                                     std::size_t piece);

/// The full-shift reading of the pieces as a contraction system:
/// S_i = (f|_{V_i})^-1 with seed the domain hull. Requires an all-ones
/// matrix (otherwise the attractor is not the plain IFS attractor).
SimilarityIFS inverse_branch_ifs(const PiecewiseExpandingMap& f);

/// The star-matrix decomposition: S_1 = (f|_{V_1})^-1 and, for i >= 2,
/// S_i = (f^2|_{V_i})^-1 = (f|_{V_i})^-1 after (f|_{V_1})^-1, with ratios
/// 1/lambda_1 and 1/(lambda_1*lambda_i). Requires a strict star matrix.
SimilarityIFS star_decomposition_ifs(const PiecewiseExpandingMap& f);

/// Expanding map induced by inverting a validated IFS: branch i is the
/// inverse of S_i on S_i(K). Lets orbit-level checks run on attractors.
PiecewiseExpandingMap expanding_map_from_ifs(const SimilarityIFS& ifs);

}  // namespace lydim

#endif  // LYDIM_COUPLED_MAP_HPP
