#include <doctest.h>

#include <cmath>
#include <random>

#include "lydim/coding.hpp"
#include "lydim/errors.hpp"
#include "lydim/ifs.hpp"
#include "oracles.hpp"

using namespace lydim;

namespace {

SimilarityIFS middle_thirds() {
  SimilarityIFS ifs;
  ifs.seed = Interval(0, 1);
  ifs.maps.push_back({Rational(1, 3), Rational(0), false});
  ifs.maps.push_back({Rational(1, 3), Rational(2, 3), false});
  return ifs;
}

}  // namespace

TEST_CASE("validate_ifs reports gap and failures") {
  const IfsValidation ok = validate_ifs(middle_thirds());
  CHECK(ok.valid);
  CHECK(ok.gap == Rational(1, 3));  // dist([0,1/3],[2/3,1])

  SimilarityIFS touching;
  touching.seed = Interval(0, 1);
  touching.maps.push_back({Rational(1, 2), Rational(0), false});
  touching.maps.push_back({Rational(1, 2), Rational(1, 2), false});
  const IfsValidation bad = validate_ifs(touching);
  CHECK_FALSE(bad.valid);
  CHECK(bad.gap == 0);

  SimilarityIFS single;
  single.seed = Interval(0, 1);
  single.maps.push_back({Rational(1, 3), Rational(0), false});
  CHECK_FALSE(validate_ifs(single).valid);

  SimilarityIFS escaping;
  escaping.seed = Interval(0, 1);
  escaping.maps.push_back({Rational(1, 3), Rational(0), false});
  escaping.maps.push_back({Rational(1, 3), Rational(1), false});  // S_2(K) = [1, 4/3]
  CHECK_FALSE(validate_ifs(escaping).valid);
}

TEST_CASE("code_point nests and has exact product diameters") {
  const SimilarityIFS ifs = middle_thirds();
  CHECK(code_point(ifs, parse_word(2, "1")) == Interval(Rational(0), Rational(1, 3)));
  // nested composition: S_2 applied to S_1's image
  CHECK(code_point(ifs, parse_word(2, "2 1")) ==
        Interval(Rational(2, 3), Rational(7, 9)));

  std::mt19937 rng(23);
  std::uniform_int_distribution<int> pick(1, 2);
  for (int round = 0; round < 100; ++round) {
    std::vector<Symbol> w;
    for (int j = 0; j < 10; ++j) w.push_back(pick(rng));
    const SymbolWord word(2, w);
    Interval outer = code_point(ifs, word.prefix(6));
    Interval inner = code_point(ifs, word);
    CHECK(outer.contains(inner));  // extension property
    CHECK(inner.length() == Rational(1) / Rational(59049));  // (1/3)^10 exactly
  }
}

TEST_CASE("separation inheritance drives the ball-capture bound") {
  const SimilarityIFS ifs = middle_thirds();
  const Rational d = validate_ifs(ifs).gap;
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> pick(1, 2);
  for (int round = 0; round < 200; ++round) {
    std::vector<Symbol> wv(8), xv(8);
    for (int j = 0; j < 8; ++j) {
      wv[j] = pick(rng);
      xv[j] = pick(rng);
    }
    if (wv == xv) xv[7] = 3 - xv[7];
    std::size_t l = 0;
    while (wv[l] == xv[l]) ++l;
    const SymbolWord w(2, wv), x(2, xv);
    Rational prefix_weight = 1;
    for (std::size_t j = 0; j < l; ++j) prefix_weight *= Rational(1, 3);
    CHECK(distance(code_point(ifs, w), code_point(ifs, x)) >= d * prefix_weight);
  }
}

TEST_CASE("moran_root closed forms") {
  const MoranRoot thirds = moran_root({1.0 / 3.0, 1.0 / 3.0});
  CHECK(thirds.p == doctest::Approx(oracles::kLn2Ln3).epsilon(1e-10));
  CHECK(std::abs(thirds.residual) <= 1e-12);

  CHECK(moran_root({0.5, 0.5}).p == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(moran_root({0.5, 0.25}).p ==
        doctest::Approx(oracles::kMoranHalfQuarter).epsilon(1e-10));

  CHECK_THROWS_AS(moran_root({0.5, 1.0}), DomainError);
  CHECK_THROWS_AS(moran_root({0.5, 0.0}), DomainError);
  CHECK_THROWS_AS(moran_root({0.5}), DomainError);
}

TEST_CASE("moran_root_star reduces to the composite-ratio equation") {
  CHECK(moran_root_star({2, 2}).p ==
        doctest::Approx(oracles::kMoranHalfQuarter).epsilon(1e-10));
  CHECK(moran_root_star({3, 3, 3}).p == doctest::Approx(oracles::kLn2Ln3).epsilon(1e-10));
  // golden value recorded from the cubic oracle before the build
  CHECK(moran_root_star({2, 4, 4}).p ==
        doctest::Approx(oracles::kMoranStar244).epsilon(1e-10));
  CHECK(moran_root_star({2, 4, 4}).p ==
        doctest::Approx(oracles::star244_via_cubic()).epsilon(1e-10));
  CHECK(moran_root_star({20.0 / 9.0, 2.0}).p ==
        doctest::Approx(oracles::kMoranStar2092).epsilon(1e-10));
  CHECK_THROWS_AS(moran_root_star({1.0, 2.0}), DomainError);
}

TEST_CASE("moran_root scale consistency and monotonicity") {
  for (double c : {0.2, 1.0 / 3.0, 0.45}) {
    for (std::size_t m : {2u, 3u, 5u}) {
      const std::vector<double> ratios(m, c);
      CHECK(moran_root(ratios).p ==
            doctest::Approx(std::log(double(m)) / std::log(1.0 / c)).epsilon(1e-10));
    }
  }
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> pick(0.05, 0.45);
  for (int round = 0; round < 50; ++round) {
    std::vector<double> ratios{pick(rng), pick(rng), pick(rng)};
    const double base = moran_root(ratios).p;
    std::vector<double> bumped = ratios;
    bumped[static_cast<std::size_t>(round) % 3] += 0.05;
    CHECK(moran_root(bumped).p > base);
  }
}

TEST_CASE("cylinder weights, plain and primed") {
  const std::vector<Rational> thirds{Rational(1, 3), Rational(1, 3)};
  CHECK(cylinder_weight(parse_word(2, "1 2"), thirds, WeightMode::Plain).exact ==
        Rational(1, 9));

  const std::vector<Rational> c{Rational(2, 5), Rational(1, 4)};
  // primed weight of (2,1) is (c2/c1) * c1 = c2
  CHECK(cylinder_weight(parse_word(2, "2 1"), c, WeightMode::Primed).exact == Rational(1, 4));

  // primed(phi_inverse(w)) == plain(w), exactly, for random cylinders
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> pick(1, 3);
  const std::vector<Rational> c3{Rational(1, 3), Rational(1, 5), Rational(2, 7)};
  for (int round = 0; round < 300; ++round) {
    std::vector<Symbol> wv(1 + round % 50);
    for (auto& v : wv) v = pick(rng);
    const SymbolWord w(3, wv);
    CHECK(cylinder_weight(phi_inverse(w), c3, WeightMode::Primed).exact ==
          cylinder_weight(w, c3, WeightMode::Plain).exact);
  }

  // log-space and linear values agree with the exact one
  const CylinderWeight cw = cylinder_weight(parse_word(2, "1 2 2 1"), c, WeightMode::Plain);
  CHECK(cw.value == doctest::Approx(to_double(cw.exact)).epsilon(1e-12));
  CHECK(std::exp(cw.log_value) == doctest::Approx(to_double(cw.exact)).epsilon(1e-12));
}

TEST_CASE("bernoulli cylinder masses") {
  const std::vector<double> thirds{1.0 / 3.0, 1.0 / 3.0};
  const double d33 = oracles::kLn2Ln3;
  for (std::size_t len : {1u, 4u, 9u}) {
    const SymbolWord w(2, std::vector<Symbol>(len, 1));
    CHECK(bernoulli_cylinder_mass(w, thirds, d33).mass ==
          doctest::Approx(std::pow(2.0, -double(len))).epsilon(1e-10));
  }

  const std::vector<double> c{0.5, 0.25};
  const double d = moran_root(c).p;
  CHECK(bernoulli_cylinder_mass(parse_word(2, "1"), c, d).mass ==
        doctest::Approx(0.6180339887498949).epsilon(1e-9));  // golden-ratio conjugate

  // additivity: mass(w) = sum_a mass(w.a)
  const SymbolWord w = parse_word(2, "1 2 2");
  const double lhs = bernoulli_cylinder_mass(w, c, d).mass;
  const double rhs = bernoulli_cylinder_mass(w.append(1), c, d).mass +
                     bernoulli_cylinder_mass(w.append(2), c, d).mass;
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));

  // masses of all length-k cylinders sum to 1 (k <= 20 for m = 2)
  for (std::size_t k : {6u, 13u, 20u}) {
    double total = 0.0;
    for (std::uint64_t bits = 0; bits < (1ull << k); ++bits) {
      std::vector<Symbol> wv(k);
      for (std::size_t j = 0; j < k; ++j) wv[j] = ((bits >> j) & 1u) ? 2 : 1;
      total += bernoulli_cylinder_mass(SymbolWord(2, wv), c, d).mass;
    }
    CHECK(std::abs(total - 1.0) <= double(k) * 1e-12);
  }

  CHECK_THROWS_AS(bernoulli_cylinder_mass(w, c, 0.5), ConsistencyError);
}
