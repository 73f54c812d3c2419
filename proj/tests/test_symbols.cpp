#include <doctest.h>

#include <algorithm>
#include <random>

#include "lydim/errors.hpp"
#include "lydim/symbols.hpp"
#include "oracles.hpp"

using namespace lydim;

TEST_CASE("shift drops leading symbols and shrinks the horizon") {
  SymbolStream s = parse_stream(2, "1 2 1 2 1 2");
  CHECK(shift(s, 1).symbols() == std::vector<Symbol>{2, 1, 2, 1, 2});
  CHECK(shift(s, 0) == s);

  SymbolStream t = parse_stream(3, "3 1 1 1 3");
  CHECK(shift(t, 2).symbols() == std::vector<Symbol>{1, 1, 3});

  CHECK_THROWS_AS(shift(s, 6), HorizonError);
  CHECK_THROWS_AS(shift(s, 7), HorizonError);
}

TEST_CASE("metric is 2^-(first disagreement)") {
  SymbolStream a = parse_stream(2, "1 2 1 2");
  SymbolStream b = parse_stream(2, "1 2 1 2");
  CHECK(stream_metric(a, b) == 0.0);  // agree within horizon

  SymbolStream c = parse_stream(2, "2 2 1 2");
  CHECK(stream_metric(a, c) == 1.0);  // index 0

  SymbolStream d = parse_stream(2, "1 2 1 1");
  CHECK(stream_metric(a, d) == 0.125);  // agree on exactly 3 symbols

  CHECK_THROWS_AS(stream_metric(a, parse_stream(2, "1 2")), UsageError);
  CHECK_THROWS_AS(stream_metric(a, parse_stream(3, "1 2 1 2")), UsageError);
}

TEST_CASE("metric is an ultrametric on fixed-horizon streams") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(1, 3);
  for (int round = 0; round < 500; ++round) {
    std::vector<Symbol> sv(12), tv(12), uv(12);
    for (int j = 0; j < 12; ++j) {
      sv[j] = pick(rng);
      tv[j] = pick(rng);
      uv[j] = pick(rng);
    }
    SymbolStream s(3, sv), t(3, tv), u(3, uv);
    const double dst = stream_metric(s, t);
    CHECK(dst == stream_metric(t, s));
    CHECK(stream_metric(s, s) == 0.0);
    // ultrametric triangle inequality
    CHECK(stream_metric(s, u) <= std::max(dst, stream_metric(t, u)));
  }
}

TEST_CASE("metric of shifted streams honours shared windows") {
  // if s,t agree on positions n..n+j then d(shift n) <= 2^-j
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(1, 2);
  for (int round = 0; round < 200; ++round) {
    std::vector<Symbol> sv(40), tv(40);
    for (int j = 0; j < 40; ++j) {
      sv[j] = pick(rng);
      tv[j] = pick(rng);
    }
    const std::size_t n = 5, j = 9;
    for (std::size_t k = n; k <= n + j; ++k) tv[k] = sv[k];
    SymbolStream s(2, sv), t(2, tv);
    CHECK(stream_metric(shift(s, n), shift(t, n)) <= std::ldexp(1.0, -static_cast<int>(j)));
  }
}

TEST_CASE("words and streams validate their symbols") {
  CHECK_THROWS_AS(SymbolWord(2, {}), UsageError);
  CHECK_THROWS_AS(SymbolWord(2, {1, 3}), UsageError);
  CHECK_THROWS_AS(SymbolWord(2, {0}), UsageError);
  CHECK_THROWS_AS(SymbolStream(1, {1}), UsageError);

  SymbolStream s = parse_stream(5, "1 5 1");
  CHECK(s.horizon() == 3);
  CHECK(s.at(1) == 5);
  CHECK_THROWS_AS(s.at(3), HorizonError);
  CHECK_THROWS_AS(parse_stream(2, "1 x 2"), UsageError);
  CHECK(format_symbols(s.symbols()) == "1 5 1");
}

TEST_CASE("prefix_word fails loudly past the horizon") {
  SymbolStream s = parse_stream(2, "1 2 1");
  CHECK(s.prefix_word(2).symbols() == std::vector<Symbol>{1, 2});
  CHECK_THROWS_AS(s.prefix_word(4), HorizonError);
  CHECK_THROWS_AS(s.prefix_word(0), UsageError);
}
