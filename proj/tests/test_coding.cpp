#include <doctest.h>

#include "lydim/coding.hpp"
#include "lydim/errors.hpp"
#include "oracles.hpp"

using namespace lydim;

namespace {

// one-pass filter, independent of the keep/drop scan in the library:
// marks indices to delete (successor of each surviving non-1), then copies.
std::vector<Symbol> phi_by_filter(const std::vector<Symbol>& in) {
  std::vector<bool> deleted(in.size(), false);
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (!deleted[i] && in[i] != 1 && i + 1 < in.size()) deleted[i + 1] = true;
  }
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (!deleted[i]) out.push_back(in[i]);
  }
  return out;
}

}  // namespace

TEST_CASE("admissibility is the pairwise entry check") {
  const TransitionMatrix star3 = TransitionMatrix::star(3);
  CHECK(is_admissible(parse_word(3, "1 1"), star3));   // (A)_11 = 1 by the canonical form
  CHECK_FALSE(is_admissible(parse_word(3, "2 3"), star3));
  CHECK(is_admissible(parse_word(2, "2 2 1 2"), TransitionMatrix::full_shift(2)));
  CHECK_THROWS_AS(is_admissible(parse_word(2, "1 2"), star3), UsageError);
}

TEST_CASE("phi deletes the successor of every kept non-1 symbol") {
  const TransitionMatrix star3 = TransitionMatrix::star(3);
  CHECK(phi(parse_stream(3, "1 2 1 1 3 1 2 1"), star3).symbols() ==
        std::vector<Symbol>{1, 2, 1, 3, 2});

  const TransitionMatrix full3 = TransitionMatrix::full_shift(3);
  CHECK(phi(SymbolStream::constant(3, 1, 64), full3).symbols() ==
        std::vector<Symbol>(64, 1));

  const TransitionMatrix star2 = TransitionMatrix::star(2);
  CHECK(phi(parse_stream(2, "2 1 2 1 2 1"), star2).symbols() ==
        std::vector<Symbol>{2, 2, 2});

  // a kept non-1 at the last position leaves its dropped successor unknown
  CHECK_THROWS_AS(phi(parse_stream(2, "1 1 2"), star2), HorizonError);
  // not a star matrix
  CHECK_THROWS_AS(phi(parse_stream(2, "1 1"), TransitionMatrix::parse("0,1;1,0")),
                  DomainError);
  // inadmissible input
  CHECK_THROWS_AS(phi(parse_stream(2, "2 2 1"), star2), DomainError);
}

TEST_CASE("phi matches the independent filter oracle on general star matrices") {
  // with extra transitions the eliminated digit need not be 1
  const TransitionMatrix loose = TransitionMatrix::parse("1,1,1;1,0,1;1,1,0");
  REQUIRE(is_star(loose, 1, false));
  const SymbolStream s = parse_stream(3, "1 2 3 2 1 1 3 2 1 1");
  REQUIRE(is_admissible(s, loose));
  CHECK(phi(s, loose).symbols() == phi_by_filter(s.symbols()));
}

TEST_CASE("phi_inverse inserts a 1 after every non-1 digit") {
  CHECK(phi_inverse(parse_stream(3, "1 2 1 3 2")).symbols() ==
        std::vector<Symbol>{1, 2, 1, 1, 3, 1, 2, 1});
  CHECK(phi_inverse(SymbolStream::constant(2, 1, 5)).symbols() ==
        std::vector<Symbol>(5, 1));
  CHECK(phi_inverse(parse_stream(2, "2 2 2")).symbols() ==
        std::vector<Symbol>{2, 1, 2, 1, 2, 1});
}

TEST_CASE("phi and phi_inverse round-trip on the canonical star matrix") {
  for (int m : {2, 3, 5}) {
    const TransitionMatrix star = TransitionMatrix::star(static_cast<std::size_t>(m));
    for (std::uint32_t seed : {1u, 2u, 3u}) {
      const SymbolStream alpha = oracles::random_full_shift_stream(m, 10000, seed);
      const SymbolStream lifted = phi_inverse(alpha);
      CHECK(is_admissible(lifted, star));
      CHECK(phi(lifted, star) == alpha);
    }
  }
}

TEST_CASE("zero-diagonal star is representable but flagged for phi") {
  const TransitionMatrix canonical = TransitionMatrix::star(3, true);
  const TransitionMatrix zero_diag = TransitionMatrix::star(3, false);

  const PhiCompatibility good = phi_compatibility(canonical);
  CHECK(good.star);
  CHECK(good.full_bijection);
  CHECK(good.note.empty());

  // (A)_11 = 0 fails the star test itself, but the shape is recognized and
  // phi still runs on it
  const PhiCompatibility flagged = phi_compatibility(zero_diag);
  CHECK_FALSE(flagged.star);
  CHECK(flagged.zero_diagonal_star);
  CHECK_FALSE(flagged.full_bijection);
  CHECK_FALSE(flagged.note.empty());
  CHECK(phi(parse_stream(3, "2 1 3 1 2 1"), zero_diag).symbols() ==
        std::vector<Symbol>{2, 3, 2});
  CHECK_FALSE(phi_compatibility(TransitionMatrix::parse("1,1;1,0")).zero_diagonal_star);

  // phi_inverse output needs (A)_11 = 1 whenever alpha has consecutive 1s
  const SymbolStream alpha = parse_stream(3, "1 1 2");
  CHECK(is_admissible(phi_inverse(alpha), canonical));
  CHECK_FALSE(is_admissible(phi_inverse(alpha), zero_diag));
}

TEST_CASE("phi_cylinder keeps the determined prefix of an image cylinder") {
  CHECK(phi_cylinder(parse_word(2, "1 2 1 2 1")).symbols() ==
        std::vector<Symbol>{1, 2, 2});  // trailing kept non-1 allowed
  CHECK(phi_cylinder(parse_word(2, "1 2 1 1")).symbols() ==
        std::vector<Symbol>{1, 2, 1});
}
