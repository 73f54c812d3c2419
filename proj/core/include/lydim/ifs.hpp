#ifndef LYDIM_IFS_HPP
#define LYDIM_IFS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "lydim/interval.hpp"
#include "lydim/rational.hpp"
#include "lydim/symbols.hpp"

namespace lydim {

/// Affine similarity on the line, S(x) = +-ratio*x + offset with
/// ratio in (0,1), so |S(x)-S(y)| = ratio*|x-y| exactly.
struct Similarity {
  Rational ratio;
  Rational offset;
  bool reflect = false;

  Rational operator()(const Rational& x) const {
    return (reflect ? Rational(-ratio * x) : Rational(ratio * x)) + offset;
  }
  Interval operator()(const Interval& iv) const;
};

/// Contraction system S_1..S_m (m >= 2) with a compact seed interval K.
/// The ambient space is 1-D; the field is here so a higher-dimensional
/// extension can keep the same interface.
struct SimilarityIFS {
  Interval seed;
  std::vector<Similarity> maps;
  int ambient_dimension = 1;

  std::vector<Rational> ratios() const;
};

struct IfsValidation {
  bool valid = false;
  Rational gap = 0;                   // min over i != j of dist(S_i(K), S_j(K))
  std::vector<Rational> ratios;
  std::vector<std::string> failures;  // one entry per violated condition
};

/// Checks m >= 2, ratios in (0,1), S_i(K) within K, pairwise disjoint images;
/// never throws, the report carries every failure.
IfsValidation validate_ifs(const SimilarityIFS& ifs);

/// Nested cylinder image S_{a_0}( S_{a_1}( ... S_{a_k}(K) ) ).
///
/// This order makes code_point(prefix) a decreasing family whose diameters
/// are (prod of ratios) * diam(K); successive prefixes of a stream shrink to
/// the coded point.
Interval code_point(const SimilarityIFS& ifs, const SymbolWord& w);

/// Root of sum_i c_i^p = 1.
struct MoranRoot {
  double p = 0;
  double residual = 0;
  double bracket_lo = 0;
  double bracket_hi = 0;
  int iterations = 0;
};

/// Bisection on the strictly decreasing p -> sum c_i^p over the bracket
/// [0, ln m / ln(1/max c_i)]; residual <= tol. Each c_i must be in (0,1).
MoranRoot moran_root(const std::vector<double>& ratios, double tol = 1e-12);

/// Root of (1/l_1)^p + sum_{i>=2} (1/(l_1 l_i))^p = 1, each l_i > 1 —
/// the dimension equation of the star-matrix construction. Reduces to
/// moran_root on ratios (1/l_1, 1/(l_1 l_2), ..., 1/(l_1 l_m)).
MoranRoot moran_root_star(const std::vector<double>& lambdas, double tol = 1e-12);

enum class WeightMode { Plain, Primed };

/// prod c_{w_j} (Plain) or prod c'_{w_j} (Primed) with c'_1 = c_1 and
/// c'_i = c_i / c_1 for i != 1. Exact rational value plus its log-space
/// double (products of thousands of ratios underflow doubles).
struct CylinderWeight {
  Rational exact;
  double log_value;
  double value;
};
CylinderWeight cylinder_weight(const SymbolWord& w,
                               const std::vector<Rational>& ratios,
                               WeightMode mode);

/// nu([w]) for the Bernoulli measure with probability vector (c_1^D,...,c_m^D).
/// Requires that vector to sum to 1 within 1e-9 (i.e. D is the Moran root),
/// else throws ConsistencyError. Log-space computation.
struct CylinderMass {
  double log_mass;
  double mass;
};
CylinderMass bernoulli_cylinder_mass(const SymbolWord& w,
                                     const std::vector<double>& ratios,
                                     double dimension);

}  // namespace lydim

#endif  // LYDIM_IFS_HPP
