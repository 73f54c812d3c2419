#ifndef LYDIM_CODING_HPP
#define LYDIM_CODING_HPP

#include <optional>
#include <string>

#include "lydim/symbols.hpp"
#include "lydim/transition_matrix.hpp"

namespace lydim {

/// True iff (A)_{w_j, w_{j+1}} = 1 for every consecutive pair.
bool is_admissible(const SymbolWord& w, const TransitionMatrix& a);
bool is_admissible(const SymbolStream& s, const TransitionMatrix& a);

/// First 0-based index j with (A)_{s_j, s_{j+1}} = 0, or nullopt.
std::optional<std::size_t> first_inadmissible_junction(const SymbolStream& s,
                                                       const TransitionMatrix& a);

/// Diagnostics for using the digit-elimination coding with a star matrix.
/// The zero-diagonal variant ((A)_11 = 0, row/column 1 otherwise all 1s) is
/// representable and phi still runs on it, but the coding is not onto the
/// full shift; `note` carries that warning.
struct PhiCompatibility {
  bool star;                // row 1 / column 1 all 1s (includes (A)_11 = 1)
  bool zero_diagonal_star;  // all 1s except (A)_11 = 0
  bool full_bijection;      // == star: the coding is a bijection onto the full shift
  std::string note;         // human-readable warning when not a full bijection
};
PhiCompatibility phi_compatibility(const TransitionMatrix& a);

/// Digit-elimination coding onto the full shift: walks s left to right,
/// keeps each symbol and, whenever the kept symbol is not 1, drops the
/// symbol immediately after it.
///
/// Requires s admissible w.r.t. a and is_star(a, 1, false). A non-1 symbol
/// kept at the final horizon position leaves its dropped successor unknown,
/// which throws HorizonError.
SymbolStream phi(const SymbolStream& s, const TransitionMatrix& a);

/// Inverse coding: inserts symbol 1 immediately after every non-1 symbol.
/// The result is admissible w.r.t. the canonical star matrix with (A)_11 = 1
/// and phi(phi_inverse(alpha)) == alpha on the common horizon.
SymbolStream phi_inverse(const SymbolStream& alpha);
SymbolWord phi_inverse(const SymbolWord& alpha);

/// Kept symbols of the keep/drop scan over a finite word — the base of the
/// image cylinder Phi([w]). Unlike phi() on streams this does not fault when
/// the word ends with a non-1 symbol (its dropped successor lies beyond the
/// base and does not affect the kept prefix).
SymbolWord phi_cylinder(const SymbolWord& w);

}  // namespace lydim

#endif  // LYDIM_CODING_HPP
