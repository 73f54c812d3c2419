#ifndef LYDIM_TRANSITION_MATRIX_HPP
#define LYDIM_TRANSITION_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lydim/rational.hpp"
#include "lydim/symbols.hpp"

namespace lydim {

/// m x m 0/1 transition matrix, m >= 2.
///
/// Well-formedness requires every row and every column to contain a 1, so no
/// symbol is dead and the shift is surjective on the subshift it defines.
class TransitionMatrix {
 public:
  /// `entries` is row-major, size m*m, each entry 0 or 1.
  TransitionMatrix(std::size_t m, std::vector<std::uint8_t> entries);

  static TransitionMatrix full_shift(std::size_t m);
  /// Row 1 and column 1 all 1s, everything else 0. The canonical form takes
  /// (A)_11 = 1; pass unit_diagonal = false for the zero-diagonal variant.
  static TransitionMatrix star(std::size_t m, bool unit_diagonal = true);

  /// Text literal: rows separated by ';', entries by ',', e.g. "1,1;1,0".
  static TransitionMatrix parse(std::string_view literal);
  std::string to_literal() const;

  std::size_t size() const { return m_; }
  /// 1-based indices, matching the symbol convention.
  bool entry(std::size_t i, std::size_t j) const;
  std::size_t row_sum(std::size_t i) const;

  bool operator==(const TransitionMatrix& other) const = default;

 private:
  std::size_t m_;
  std::vector<std::uint8_t> bits_;
};

/// True iff every ordered pair of symbols is joined by a directed path.
/// Computed by reachability closure, never by numeric matrix powers.
bool is_irreducible(const TransitionMatrix& a);

/// Smallest row index (1-based) with row sum >= 2, or nullopt.
std::optional<std::size_t> branching_row(const TransitionMatrix& a);

/// Row i and column i all 1s; strict additionally requires every entry
/// outside row i and column i to be 0.
bool is_star(const TransitionMatrix& a, std::size_t i, bool strict);

/// Dominant eigenvalue of A as a nonnegative matrix, within tol.
///
/// Power iteration on A+I (primitive for irreducible A, so the iteration
/// cannot stall on a period) with a Rayleigh-quotient stabilization test;
/// throws ConvergenceError carrying the last iterate if the cap is hit.
double spectral_radius(const TransitionMatrix& a, double tol = 1e-10);

/// Exact count of admissible length-n words: m for n = 1, otherwise the sum
/// of all entries of A^(n-1), in exact integer arithmetic.
BigInt count_admissible_words(const TransitionMatrix& a, std::size_t n);

/// Lexicographically ordered, duplicate-free list of all admissible length-n
/// words. Throws BudgetError when the count exceeds `budget`.
std::vector<SymbolWord> enumerate_admissible_words(const TransitionMatrix& a,
                                                   std::size_t n,
                                                   std::size_t budget);

}  // namespace lydim

#endif  // LYDIM_TRANSITION_MATRIX_HPP
