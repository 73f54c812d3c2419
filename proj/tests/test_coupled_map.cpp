#include <doctest.h>

#include <algorithm>
#include <random>

#include "lydim/coupled_map.hpp"
#include "lydim/errors.hpp"
#include "oracles.hpp"

using namespace lydim;

namespace {

PiecewiseExpandingMap middle_thirds_map() {
  return synthesize(TransitionMatrix::full_shift(2),
                    {Interval(0, Rational(1, 3)), Interval(Rational(2, 3), 1)},
                    {Rational(3), Rational(3)}, {false, false}, Interval(0, 1));
}

PiecewiseExpandingMap two_four_map() {
  return synthesize(TransitionMatrix::full_shift(2),
                    {Interval(0, Rational(1, 2)), Interval(Rational(3, 4), 1)},
                    {Rational(2), Rational(4)}, {false, false}, Interval(0, 1));
}

PiecewiseExpandingMap star_map() {
  return synthesize(TransitionMatrix::parse("1,1;1,0"),
                    {Interval(0, Rational(9, 20)), Interval(Rational(11, 20), 1)},
                    {Rational(20, 9), Rational(2)}, {false, false}, Interval(0, 1));
}

}  // namespace

TEST_CASE("synthesize places the smallest centered covering image") {
  const PiecewiseExpandingMap f = middle_thirds_map();
  // f(x) = 3x on V_1 and 3x - 2 on V_2
  CHECK(f.branches[0].offset == 0);
  CHECK(f.branches[1].offset == -2);
  CHECK(f.branches[0].image() == Interval(0, 1));
  CHECK(f.branches[1].image() == Interval(0, 1));

  const PiecewiseExpandingMap g = star_map();
  CHECK(g.branches[0].image() == Interval(0, 1));
  // row 2 covers V_1 = [0, 9/20] only; length-9/10 image centered over it
  CHECK(g.branches[1].image() == Interval(Rational(-9, 40), Rational(27, 40)));
  CHECK(g.branches[1].image().contains(Interval(0, Rational(9, 20))));
}

TEST_CASE("synthesize failure modes") {
  try {
    synthesize(TransitionMatrix::full_shift(2),
               {Interval(0, Rational(1, 3)), Interval(Rational(2, 3), 1)},
               {Rational(2), Rational(2)}, {false, false}, Interval(0, 1));
    FAIL("expected SynthesisError");
  } catch (const SynthesisError& e) {
    CHECK(e.row == 1);
    CHECK(e.min_feasible_lambda == doctest::Approx(3.0));
  }

  // touching pieces violate strictness
  CHECK_THROWS_AS(synthesize(TransitionMatrix::full_shift(2),
                             {Interval(0, Rational(1, 2)), Interval(Rational(1, 2), 1)},
                             {Rational(3), Rational(3)}, {false, false}, Interval(0, 1)),
                  DomainError);
  // expansion rate must exceed 1
  CHECK_THROWS_AS(synthesize(TransitionMatrix::full_shift(2),
                             {Interval(0, Rational(1, 3)), Interval(Rational(2, 3), 1)},
                             {Rational(1), Rational(3)}, {false, false}, Interval(0, 1)),
                  DomainError);
}

TEST_CASE("verify reports the coupled-expanding facts") {
  const MapVerification ok = verify(middle_thirds_map());
  CHECK(ok.strictly_coupled_expanding);
  CHECK(ok.covering_ok);
  CHECK(ok.strict_separation_ok);
  CHECK(ok.expanding_ok);
  CHECK(ok.irreducible);
  CHECK(ok.branching == 1);
  CHECK(ok.min_gap == Rational(1, 3));

  // pieces shifted to touch: strictness fails, interiors still disjoint
  PiecewiseExpandingMap touching = middle_thirds_map();
  touching.branches[1].domain = Interval(Rational(1, 3), Rational(2, 3));
  const MapVerification bad = verify(touching);
  CHECK_FALSE(bad.strictly_coupled_expanding);
  CHECK_FALSE(bad.strict_separation_ok);
  CHECK(bad.interiors_disjoint);

  // permutation matrix: a fine map, but no branching row for the Cantor
  // construction to hook into
  const PiecewiseExpandingMap perm =
      synthesize(TransitionMatrix::parse("0,1;1,0"),
                 {Interval(0, Rational(1, 3)), Interval(Rational(2, 3), 1)},
                 {Rational(3, 2), Rational(3, 2)}, {false, false}, Interval(0, 1));
  const MapVerification report = verify(perm);
  CHECK(report.strictly_coupled_expanding);
  CHECK_FALSE(report.branching.has_value());
}

TEST_CASE("basic sets by exact back-iteration") {
  const PiecewiseExpandingMap f = middle_thirds_map();
  CHECK(basic_set(f, parse_word(2, "1 1")).interval == Interval(0, Rational(1, 9)));
  CHECK(basic_set(f, parse_word(2, "2 1")).interval ==
        Interval(Rational(2, 3), Rational(7, 9)));
  CHECK(basic_set(f, parse_word(2, "1")).interval == f.branches[0].domain);
  CHECK(basic_set(f, parse_word(2, "2")).interval == f.branches[1].domain);

  const PiecewiseExpandingMap g = star_map();
  CHECK_THROWS_AS(basic_set(g, parse_word(2, "2 2")), DomainError);  // inadmissible
}

TEST_CASE("limit set covers") {
  const PiecewiseExpandingMap f = middle_thirds_map();
  const auto depth2 = limit_set_cover(f, 2, 1000);
  REQUIRE(depth2.size() == 4);
  CHECK(depth2[0].interval == Interval(0, Rational(1, 9)));
  CHECK(depth2[1].interval == Interval(Rational(2, 9), Rational(1, 3)));
  CHECK(depth2[2].interval == Interval(Rational(2, 3), Rational(7, 9)));
  CHECK(depth2[3].interval == Interval(Rational(8, 9), 1));

  const auto star2 = limit_set_cover(star_map(), 2, 1000);
  CHECK(star2.size() == 3);  // words 11, 12, 21

  const auto depth1 = limit_set_cover(f, 1, 1000);
  REQUIRE(depth1.size() == 2);
  CHECK(depth1[0].interval == f.branches[0].domain);
  CHECK(depth1[1].interval == f.branches[1].domain);
}

TEST_CASE("cover invariants: nesting, disjointness, diameter bound") {
  for (const PiecewiseExpandingMap& f : {middle_thirds_map(), two_four_map(), star_map()}) {
    const Rational min_slope = f.min_slope();
    std::vector<BasicSet> parent;
    for (std::size_t depth = 1; depth <= 6; ++depth) {
      const auto cover = limit_set_cover(f, depth, 1u << 20);
      // pairwise positive distance at equal depth
      for (std::size_t a = 0; a + 1 < cover.size(); ++a) {
        CHECK(distance(cover[a].interval, cover[a + 1].interval) > 0);
      }
      // nesting in the parent of the word
      if (depth > 1) {
        for (const BasicSet& child : cover) {
          const SymbolWord head = child.word.prefix(depth - 1);
          const auto it =
              std::find_if(parent.begin(), parent.end(),
                           [&](const BasicSet& p) { return p.word == head; });
          REQUIRE(it != parent.end());
          CHECK(it->interval.contains(child.interval));
        }
      }
      // diameter bound with the word-length exponent
      Rational bound = f.domain.length();
      for (std::size_t d = 0; d < depth; ++d) bound /= min_slope;
      Rational max_diam = 0;
      for (const BasicSet& b : cover) max_diam = std::max(max_diam, b.interval.length());
      CHECK(max_diam <= bound);
      parent = cover;
    }
  }
  // equality for the equal-rate full-shift map
  const PiecewiseExpandingMap f = middle_thirds_map();
  const auto cover = limit_set_cover(f, 5, 1000);
  Rational max_diam = 0;
  for (const BasicSet& b : cover) max_diam = std::max(max_diam, b.interval.length());
  CHECK(max_diam == Rational(1, 243));
}

TEST_CASE("code_orbit follows the itinerary") {
  const PiecewiseExpandingMap f = middle_thirds_map();
  CHECK(code_orbit(f, 0, 5).symbols() == std::vector<Symbol>(6, 1));
  // 3/4 -> 1/4 -> 3/4: the 2-cycle codes (2,1,2,1,...)
  CHECK(code_orbit(f, Rational(3, 4), 3).symbols() == std::vector<Symbol>{2, 1, 2, 1});
  try {
    code_orbit(f, Rational(1, 2), 3);
    FAIL("expected EscapeError");
  } catch (const EscapeError& e) {
    CHECK(e.step == 0);
  }
}

TEST_CASE("conjugacy: points code back to their words, coding commutes") {
  std::mt19937 rng(41);
  for (const PiecewiseExpandingMap& f : {middle_thirds_map(), two_four_map(), star_map()}) {
    const auto words = enumerate_admissible_words(f.matrix, 9, 1u << 20);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    for (int round = 0; round < 200; ++round) {
      const SymbolWord& w = words[pick(rng)];
      const Rational x = basic_set(f, w).interval.midpoint();
      CHECK(code_orbit(f, x, w.size() - 1) == w);
      // f then code = code then shift
      const SymbolWord coded = code_orbit(f, x, w.size() - 1);
      const SymbolWord shifted = code_orbit(f, f.branches[coded.at(0) - 1].apply(x),
                                            w.size() - 2);
      CHECK(std::equal(shifted.symbols().begin(), shifted.symbols().end(),
                       coded.symbols().begin() + 1));
    }
  }
}

TEST_CASE("branch inverses reproduce deeper covers (self-similarity)") {
  const PiecewiseExpandingMap f = two_four_map();
  const SimilarityIFS ifs = inverse_branch_ifs(f);
  REQUIRE(ifs.maps.size() == 2);
  CHECK(ifs.maps[0].ratio == Rational(1, 2));
  CHECK(ifs.maps[1].ratio == Rational(1, 4));

  for (std::size_t depth = 1; depth <= 6; ++depth) {
    const auto cover = limit_set_cover(f, depth, 1u << 20);
    for (Symbol lead : {1, 2}) {
      for (const BasicSet& b : cover) {
        // S_lead(Delta_w) must be exactly Delta_{lead.w}
        std::vector<Symbol> extended{lead};
        extended.insert(extended.end(), b.word.symbols().begin(), b.word.symbols().end());
        const Interval expected = basic_set(f, SymbolWord(2, extended)).interval;
        CHECK(ifs.maps[static_cast<std::size_t>(lead) - 1](b.interval) == expected);
      }
    }
  }
}

TEST_CASE("star decomposition: ratios 1/l1 and 1/(l1*li)") {
  const PiecewiseExpandingMap f = star_map();
  const SimilarityIFS ifs = star_decomposition_ifs(f);
  REQUIRE(ifs.maps.size() == 2);
  CHECK(ifs.maps[0].ratio == Rational(9, 20));
  CHECK(ifs.maps[1].ratio == Rational(9, 40));
  CHECK(validate_ifs(ifs).valid);

  // S_1(Delta_w) = Delta_{1w}; S_2(Delta_w) = Delta_{2,1,w}
  for (std::size_t depth = 1; depth <= 6; ++depth) {
    for (const BasicSet& b : limit_set_cover(f, depth, 1u << 20)) {
      std::vector<Symbol> one_w{1};
      one_w.insert(one_w.end(), b.word.symbols().begin(), b.word.symbols().end());
      CHECK(ifs.maps[0](b.interval) == basic_set(f, SymbolWord(2, one_w)).interval);

      std::vector<Symbol> two_one_w{2, 1};
      two_one_w.insert(two_one_w.end(), b.word.symbols().begin(), b.word.symbols().end());
      CHECK(ifs.maps[1](b.interval) == basic_set(f, SymbolWord(2, two_one_w)).interval);
    }
  }

  CHECK_THROWS_AS(star_decomposition_ifs(middle_thirds_map()), DomainError);
  CHECK_THROWS_AS(inverse_branch_ifs(star_map()), DomainError);
}

TEST_CASE("expanding map induced by an IFS inverts its contractions") {
  const PiecewiseExpandingMap f = middle_thirds_map();
  const SimilarityIFS ifs = inverse_branch_ifs(f);
  const PiecewiseExpandingMap g = expanding_map_from_ifs(ifs);
  REQUIRE(g.piece_count() == 2);
  CHECK(g.branches[0].domain == f.branches[0].domain);
  CHECK(g.branches[1].domain == f.branches[1].domain);
  CHECK(g.branches[0].slope == 3);
  for (const Rational& x : {Rational(1, 10), Rational(3, 10), Rational(7, 10)}) {
    if (auto piece = g.piece_of(x)) {
      CHECK(g.branches[*piece - 1].apply(x) == f.branches[*piece - 1].apply(x));
    }
  }
}
