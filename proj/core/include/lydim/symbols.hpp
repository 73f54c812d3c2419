#ifndef LYDIM_SYMBOLS_HPP
#define LYDIM_SYMBOLS_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lydim {

/// Symbols are 1-based, matching the usual subshift convention {1..m}.
/// All external I/O is 1-based too.
using Symbol = int;

/// Nonempty finite word over {1..m}.
struct SymbolWord {
  SymbolWord(int alphabet, std::vector<Symbol> symbols);

  int alphabet() const { return alphabet_; }
  std::size_t size() const { return symbols_.size(); }
  Symbol at(std::size_t j) const;  // 0-based position
  const std::vector<Symbol>& symbols() const { return symbols_; }

  SymbolWord prefix(std::size_t len) const;
  SymbolWord append(Symbol a) const;

  bool operator==(const SymbolWord& other) const = default;
  /// Lexicographic; only meaningful for words over the same alphabet.
  bool operator<(const SymbolWord& other) const {
    return symbols_ < other.symbols_;
  }

 private:
  int alphabet_;
  std::vector<Symbol> symbols_;
};

/// Where a stream's symbols came from. Reporting only.
enum class Provenance { Free, BuiltByWitness, BuiltByPr };

/// Finite-horizon prefix of a one-sided sequence over {1..m}.
///
/// The horizon is hard: any operation that would need a symbol at or beyond
/// it throws HorizonError instead of inventing data.
struct SymbolStream {
  SymbolStream(int alphabet, std::vector<Symbol> symbols,
               Provenance provenance = Provenance::Free);

  /// Constant stream a,a,a,... of the given horizon.
  static SymbolStream constant(int alphabet, Symbol a, std::size_t horizon);

  int alphabet() const { return alphabet_; }
  std::size_t horizon() const { return symbols_.size(); }
  Provenance provenance() const { return provenance_; }
  Symbol at(std::size_t k) const;  // throws HorizonError when k >= horizon
  const std::vector<Symbol>& symbols() const { return symbols_; }

  SymbolWord prefix_word(std::size_t len) const;

  bool operator==(const SymbolStream& other) const {
    return alphabet_ == other.alphabet_ && symbols_ == other.symbols_;
  }

 private:
  int alphabet_;
  std::vector<Symbol> symbols_;
  Provenance provenance_;
};

/// All streams whose prefix equals `base`.
struct Cylinder {
  SymbolWord base;
  std::size_t length() const { return base.size(); }
};

/// Drops the first k symbols; horizon shrinks by k. k >= horizon throws.
SymbolStream shift(const SymbolStream& s, std::size_t k);

/// 2^-(first index of disagreement); 0 when the streams agree on the whole
/// (shared) horizon — callers must read 0 as "agree within horizon".
/// Disagreement indices beyond ~1074 underflow to 0 as well, which the same
/// reading covers. Requires equal alphabets and equal horizons.
double stream_metric(const SymbolStream& s, const SymbolStream& t);

/// Text format: decimal symbols separated by single spaces, e.g. "1 2 1 1 3".
SymbolWord parse_word(int alphabet, std::string_view text);
SymbolStream parse_stream(int alphabet, std::string_view text);
std::string format_symbols(const std::vector<Symbol>& symbols);

}  // namespace lydim

#endif  // LYDIM_SYMBOLS_HPP
