#include "lydim/symbols.hpp"

#include <cmath>
#include <sstream>

#include "lydim/errors.hpp"
#include "lydim/rational.hpp"

namespace lydim {

namespace {

void check_alphabet(int alphabet) {
  if (alphabet < 2) {
    throw UsageError("alphabet size must be at least 2, got " + std::to_string(alphabet));
  }
}

void check_symbols(int alphabet, const std::vector<Symbol>& symbols) {
  for (std::size_t j = 0; j < symbols.size(); ++j) {
    if (symbols[j] < 1 || symbols[j] > alphabet) {
      throw UsageError("symbol " + std::to_string(symbols[j]) + " at position " +
                       std::to_string(j) + " is outside {1.." +
                       std::to_string(alphabet) + "}");
    }
  }
}

std::vector<Symbol> parse_symbols(int alphabet, std::string_view text) {
  std::vector<Symbol> out;
  std::istringstream in{std::string(text)};
  long v = 0;
  while (in >> v) out.push_back(static_cast<Symbol>(v));
  if (!in.eof()) {
    throw UsageError("symbol text is not space-separated integers: '" +
                     std::string(text) + "'");
  }
  check_symbols(alphabet, out);
  return out;
}

}  // namespace

SymbolWord::SymbolWord(int alphabet, std::vector<Symbol> symbols)
    : alphabet_(alphabet), symbols_(std::move(symbols)) {
  check_alphabet(alphabet_);
  if (symbols_.empty()) throw UsageError("a word must be nonempty");
  check_symbols(alphabet_, symbols_);
}

Symbol SymbolWord::at(std::size_t j) const {
  if (j >= symbols_.size()) {
    throw UsageError("word position " + std::to_string(j) + " out of range (length " +
                     std::to_string(symbols_.size()) + ")");
  }
  return symbols_[j];
}

SymbolWord SymbolWord::prefix(std::size_t len) const {
  if (len == 0 || len > symbols_.size()) {
    throw UsageError("prefix length " + std::to_string(len) + " out of range");
  }
  return SymbolWord(alphabet_, {symbols_.begin(), symbols_.begin() + static_cast<long>(len)});
}

SymbolWord SymbolWord::append(Symbol a) const {
  std::vector<Symbol> ext = symbols_;
  ext.push_back(a);
  return SymbolWord(alphabet_, std::move(ext));
}

SymbolStream::SymbolStream(int alphabet, std::vector<Symbol> symbols, Provenance provenance)
    : alphabet_(alphabet), symbols_(std::move(symbols)), provenance_(provenance) {
  check_alphabet(alphabet_);
  check_symbols(alphabet_, symbols_);
}

SymbolStream SymbolStream::constant(int alphabet, Symbol a, std::size_t horizon) {
  return SymbolStream(alphabet, std::vector<Symbol>(horizon, a));
}

Symbol SymbolStream::at(std::size_t k) const {
  if (k >= symbols_.size()) {
    throw HorizonError("stream horizon " + std::to_string(symbols_.size()) +
                       " exhausted at position " + std::to_string(k));
  }
  return symbols_[k];
}

SymbolWord SymbolStream::prefix_word(std::size_t len) const {
  if (len == 0) throw UsageError("prefix length must be positive");
  if (len > symbols_.size()) {
    throw HorizonError("prefix length " + std::to_string(len) +
                       " exceeds stream horizon " + std::to_string(symbols_.size()));
  }
  return SymbolWord(alphabet_, {symbols_.begin(), symbols_.begin() + static_cast<long>(len)});
}

SymbolStream shift(const SymbolStream& s, std::size_t k) {
  if (k >= s.horizon()) {
    throw HorizonError("shift by " + std::to_string(k) + " exhausts horizon " +
                       std::to_string(s.horizon()));
  }
  std::vector<Symbol> rest{s.symbols().begin() + static_cast<long>(k), s.symbols().end()};
  return SymbolStream(s.alphabet(), std::move(rest), s.provenance());
}

double stream_metric(const SymbolStream& s, const SymbolStream& t) {
  if (s.alphabet() != t.alphabet()) {
    throw UsageError("metric requires equal alphabets");
  }
  if (s.horizon() != t.horizon()) {
    throw UsageError("metric requires equal horizons (" + std::to_string(s.horizon()) +
                     " vs " + std::to_string(t.horizon()) + ")");
  }
  for (std::size_t k = 0; k < s.horizon(); ++k) {
    if (s.symbols()[k] != t.symbols()[k]) return std::ldexp(1.0, -static_cast<int>(k));
  }
  return 0.0;  // agree within horizon; not equality of infinite sequences
}

SymbolWord parse_word(int alphabet, std::string_view text) {
  return SymbolWord(alphabet, parse_symbols(alphabet, text));
}

SymbolStream parse_stream(int alphabet, std::string_view text) {
  return SymbolStream(alphabet, parse_symbols(alphabet, text));
}

std::string format_symbols(const std::vector<Symbol>& symbols) {
  std::string out;
  for (std::size_t j = 0; j < symbols.size(); ++j) {
    if (j) out += ' ';
    out += std::to_string(symbols[j]);
  }
  return out;
}

}  // namespace lydim
