#include <doctest.h>

#include "lydim/errors.hpp"
#include "lydim/io.hpp"

using namespace lydim;

TEST_CASE("rational literals parse exactly") {
  CHECK(parse_rational("20/9") == Rational(20, 9));
  CHECK(parse_rational("0.45") == Rational(9, 20));
  CHECK(parse_rational("-1/3") == Rational(-1, 3));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK(to_string(Rational(9, 20)) == "9/20");
  CHECK(to_string(Rational(4)) == "4");
  CHECK_THROWS_AS(parse_rational("1/0"), UsageError);
  CHECK_THROWS_AS(parse_rational("a/b"), UsageError);
  CHECK_THROWS_AS(parse_rational(""), UsageError);

  CHECK(rational_floor(Rational(7, 2)) == 3);
  CHECK(rational_floor(Rational(-7, 2)) == -4);
  CHECK(rational_floor(Rational(-4)) == -4);
}

TEST_CASE("map JSON round-trips through synthesize") {
  const Json doc = Json::parse(R"({
    "domain": [0, 1],
    "matrix": "1,1;1,0",
    "branches": [
      { "interval": [0, "9/20"], "lambda": "20/9", "sign": "+" },
      { "interval": ["11/20", 1], "lambda": 2, "sign": "+" }
    ]
  })");
  const PiecewiseExpandingMap f = map_from_json(doc);
  CHECK(f.branches[0].slope == Rational(20, 9));
  CHECK(f.branches[0].domain == Interval(0, Rational(9, 20)));
  CHECK(f.branches[1].offset == Rational(-53, 40));

  const Json emitted = map_to_json(f);
  CHECK(emitted["matrix"] == "1,1;1,0");
  CHECK(emitted["branches"][0]["lambda"] == "20/9");
  const PiecewiseExpandingMap again = map_from_json(emitted);
  CHECK(again.branches[1].offset == f.branches[1].offset);
}

TEST_CASE("map JSON validates its shape") {
  CHECK_THROWS_AS(map_from_json(Json::parse(R"({"matrix": "1,1;1,1"})")), UsageError);
  CHECK_THROWS_AS(map_from_json(Json::parse(
                      R"({"matrix": "1,1;1,1", "branches": [{"interval": [0,1]}]})")),
                  UsageError);
}

TEST_CASE("ifs JSON round-trips") {
  const Json doc = Json::parse(R"({
    "seed": [0, 1],
    "maps": [
      { "ratio": "1/3", "offset": 0 },
      { "ratio": "1/3", "offset": "2/3", "reflect": false }
    ]
  })");
  const SimilarityIFS ifs = ifs_from_json(doc);
  CHECK(ifs.maps[0].ratio == Rational(1, 3));
  CHECK(ifs.maps[1].offset == Rational(2, 3));
  CHECK(validate_ifs(ifs).valid);
  const SimilarityIFS again = ifs_from_json(ifs_to_json(ifs));
  CHECK(again.maps[1].ratio == ifs.maps[1].ratio);
}

TEST_CASE("round12 pins float text to 12 significant digits") {
  CHECK(round12(0.6309297535714574) == doctest::Approx(0.630929753571).epsilon(1e-12));
  CHECK(round12(0.0) == 0.0);
  CHECK(Json(round12(0.1)).dump() == "0.1");
}
