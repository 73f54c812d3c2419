#include "lydim/coding.hpp"

#include "lydim/errors.hpp"

namespace lydim {

namespace {

bool pair_admissible(const TransitionMatrix& a, Symbol from, Symbol to) {
  return a.entry(static_cast<std::size_t>(from), static_cast<std::size_t>(to));
}

void check_alphabets(int symbols_alphabet, const TransitionMatrix& a) {
  if (static_cast<std::size_t>(symbols_alphabet) != a.size()) {
    throw UsageError("alphabet " + std::to_string(symbols_alphabet) +
                     " does not match matrix size " + std::to_string(a.size()));
  }
}

/// keep/drop scan shared by phi() and phi_cylinder(). Returns kept symbols;
/// sets `dangling` when the final kept symbol is non-1 so its dropped
/// successor lies beyond the input.
std::vector<Symbol> keep_scan(const std::vector<Symbol>& in, bool& dangling) {
  std::vector<Symbol> kept;
  kept.reserve(in.size());
  dangling = false;
  std::size_t i = 0;
  while (i < in.size()) {
    kept.push_back(in[i]);
    if (in[i] != 1) {
      if (i + 1 >= in.size()) {
        dangling = true;
        return kept;
      }
      i += 2;  // drop the symbol right after a kept non-1
    } else {
      i += 1;
    }
  }
  return kept;
}

}  // namespace

bool is_admissible(const SymbolWord& w, const TransitionMatrix& a) {
  check_alphabets(w.alphabet(), a);
  for (std::size_t j = 0; j + 1 < w.size(); ++j) {
    if (!pair_admissible(a, w.symbols()[j], w.symbols()[j + 1])) return false;
  }
  return true;
}

bool is_admissible(const SymbolStream& s, const TransitionMatrix& a) {
  return !first_inadmissible_junction(s, a).has_value();
}

std::optional<std::size_t> first_inadmissible_junction(const SymbolStream& s,
                                                       const TransitionMatrix& a) {
  check_alphabets(s.alphabet(), a);
  for (std::size_t j = 0; j + 1 < s.horizon(); ++j) {
    if (!pair_admissible(a, s.symbols()[j], s.symbols()[j + 1])) return j;
  }
  return std::nullopt;
}

PhiCompatibility phi_compatibility(const TransitionMatrix& a) {
  PhiCompatibility out;
  out.star = is_star(a, 1, false);
  bool off_diagonal_ones = true;
  for (std::size_t j = 2; j <= a.size(); ++j) {
    if (!a.entry(1, j) || !a.entry(j, 1)) off_diagonal_ones = false;
  }
  out.zero_diagonal_star = off_diagonal_ones && !a.entry(1, 1);
  out.full_bijection = out.star;
  if (out.zero_diagonal_star) {
    out.note =
        "matrix has (A)_11 = 0: admissible sequences must alternate 1/non-1, so the "
        "digit-elimination coding is not onto the full shift (streams with interior 1s "
        "have no preimage)";
  } else if (!out.star) {
    out.note = "matrix is not a star on index 1; the coding has no inverse construction";
  }
  return out;
}

SymbolStream phi(const SymbolStream& s, const TransitionMatrix& a) {
  check_alphabets(s.alphabet(), a);
  const PhiCompatibility compat = phi_compatibility(a);
  if (!compat.star && !compat.zero_diagonal_star) {
    throw DomainError("phi requires row 1 and column 1 of the matrix to be all 1s "
                      "(off the diagonal at minimum)");
  }
  if (auto j = first_inadmissible_junction(s, a)) {
    throw DomainError("stream is not admissible at junction " + std::to_string(*j));
  }
  bool dangling = false;
  std::vector<Symbol> kept = keep_scan(s.symbols(), dangling);
  if (dangling) {
    throw HorizonError("non-1 symbol at the final horizon position " +
                       std::to_string(s.horizon() - 1) +
                       ": its dropped successor is beyond the horizon");
  }
  return SymbolStream(s.alphabet(), std::move(kept), s.provenance());
}

SymbolStream phi_inverse(const SymbolStream& alpha) {
  std::vector<Symbol> out;
  out.reserve(2 * alpha.horizon());
  for (Symbol v : alpha.symbols()) {
    out.push_back(v);
    if (v != 1) out.push_back(1);
  }
  return SymbolStream(alpha.alphabet(), std::move(out), alpha.provenance());
}

SymbolWord phi_inverse(const SymbolWord& alpha) {
  std::vector<Symbol> out;
  out.reserve(2 * alpha.size());
  for (Symbol v : alpha.symbols()) {
    out.push_back(v);
    if (v != 1) out.push_back(1);
  }
  return SymbolWord(alpha.alphabet(), std::move(out));
}

SymbolWord phi_cylinder(const SymbolWord& w) {
  bool dangling = false;
  std::vector<Symbol> kept = keep_scan(w.symbols(), dangling);
  return SymbolWord(w.alphabet(), std::move(kept));
}

}  // namespace lydim
