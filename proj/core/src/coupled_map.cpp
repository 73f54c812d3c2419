#include "lydim/coupled_map.hpp"

#include <algorithm>
#include <string>

#include "lydim/coding.hpp"
#include "lydim/errors.hpp"

namespace lydim {

Interval Branch::image() const {
  Rational a = apply(domain.lo);
  Rational b = apply(domain.hi);
  return reflect ? Interval(b, a) : Interval(a, b);
}

Interval Branch::preimage(const Interval& iv) const {
  Rational a = invert(iv.lo);
  Rational b = invert(iv.hi);
  return reflect ? Interval(b, a) : Interval(a, b);
}

Rational PiecewiseExpandingMap::min_slope() const {
  Rational best = branches.front().slope;
  for (const Branch& b : branches) best = std::min(best, b.slope);
  return best;
}

std::optional<std::size_t> PiecewiseExpandingMap::piece_of(const Rational& x) const {
  for (std::size_t i = 0; i < branches.size(); ++i) {
    if (branches[i].domain.contains(x)) return i + 1;
  }
  return std::nullopt;
}

namespace {

Interval required_hull(const TransitionMatrix& a, const std::vector<Interval>& layout,
                       std::size_t row) {
  std::optional<Interval> acc;
  for (std::size_t j = 1; j <= a.size(); ++j) {
    if (!a.entry(row, j)) continue;
    acc = acc ? hull(*acc, layout[j - 1]) : layout[j - 1];
  }
  // a well-formed matrix has no empty row
  if (!acc) throw ConsistencyError("row " + std::to_string(row) + " selects no pieces");
  return *acc;
}

}  // namespace

PiecewiseExpandingMap synthesize(const TransitionMatrix& a,
                                 const std::vector<Interval>& layout,
                                 const std::vector<Rational>& lambdas,
                                 const std::vector<bool>& reflect,
                                 const Interval& domain) {
  const std::size_t m = a.size();
  if (layout.size() != m || lambdas.size() != m || reflect.size() != m) {
    throw UsageError("expected " + std::to_string(m) + " pieces, rates and signs");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!(layout[i].length() > 0)) {
      throw DomainError("piece V_" + std::to_string(i + 1) + " = " + to_string(layout[i]) +
                        " is degenerate");
    }
    if (!domain.contains(layout[i])) {
      throw DomainError("piece V_" + std::to_string(i + 1) + " = " + to_string(layout[i]) +
                        " is not inside the domain " + to_string(domain));
    }
    if (!(lambdas[i] > 1)) {
      throw DomainError("expansion rate for V_" + std::to_string(i + 1) + " is " +
                        to_string(lambdas[i]) + ", must exceed 1");
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (distance(layout[i], layout[j]) == 0) {
        throw DomainError("pieces V_" + std::to_string(i + 1) + " and V_" +
                          std::to_string(j + 1) + " touch or overlap; strict " +
                          "coupled-expansion needs positive gaps");
      }
    }
  }

  PiecewiseExpandingMap f{domain, a, {}};
  f.branches.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Interval hull_i = required_hull(a, layout, i + 1);
    const Rational span = hull_i.length();
    const Rational image_len = lambdas[i] * layout[i].length();
    if (image_len < span) {
      const Rational min_lambda = span / layout[i].length();
      throw SynthesisError("row " + std::to_string(i + 1) + ": slope " +
                               to_string(lambdas[i]) + " cannot cover span " + to_string(span) +
                               " from piece " + to_string(layout[i]) +
                               "; minimum feasible rate is " + to_string(min_lambda),
                           i + 1, to_double(min_lambda));
    }
    // center the required hull inside the (possibly longer) image
    const Rational image_lo = hull_i.midpoint() - image_len / 2;
    const Rational image_hi = image_lo + image_len;
    Branch branch{layout[i], lambdas[i], reflect[i], 0};
    branch.offset = reflect[i] ? Rational(image_hi + lambdas[i] * layout[i].lo)
                               : Rational(image_lo - lambdas[i] * layout[i].lo);
    f.branches.push_back(std::move(branch));
  }
  return f;
}

MapVerification verify(const PiecewiseExpandingMap& f) {
  MapVerification report;
  const std::size_t m = f.piece_count();

  report.covering_ok = true;
  for (std::size_t i = 0; i < m; ++i) {
    MapVerification::RowCheck row;
    row.row = i + 1;
    std::vector<Interval> layout;
    layout.reserve(m);
    for (const Branch& b : f.branches) layout.push_back(b.domain);
    row.required_hull = required_hull(f.matrix, layout, i + 1);
    row.image = f.branches[i].image();
    row.covered = row.image.contains(row.required_hull);
    row.slack = row.image.length() - row.required_hull.length();
    if (!row.covered) {
      report.covering_ok = false;
      report.failures.push_back("row " + std::to_string(i + 1) + ": image " +
                                to_string(row.image) + " does not cover " +
                                to_string(row.required_hull));
    }
    report.rows.push_back(std::move(row));
  }

  report.strict_separation_ok = true;
  report.interiors_disjoint = true;
  bool first = true;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      MapVerification::GapCheck gap;
      gap.i = i + 1;
      gap.j = j + 1;
      gap.gap = distance(f.branches[i].domain, f.branches[j].domain);
      if (first || gap.gap < report.min_gap) {
        report.min_gap = gap.gap;
        first = false;
      }
      if (gap.gap == 0) {
        report.strict_separation_ok = false;
        report.failures.push_back("pieces V_" + std::to_string(i + 1) + " and V_" +
                                  std::to_string(j + 1) + " have gap 0");
        auto common = intersect(f.branches[i].domain, f.branches[j].domain);
        if (common && common->length() > 0) report.interiors_disjoint = false;
      }
      report.gaps.push_back(std::move(gap));
    }
  }

  report.expanding_ok = true;
  for (std::size_t i = 0; i < m; ++i) {
    if (!(f.branches[i].slope > 1)) {
      report.expanding_ok = false;
      report.failures.push_back("branch " + std::to_string(i + 1) + " slope " +
                                to_string(f.branches[i].slope) + " does not exceed 1");
    }
  }

  report.irreducible = is_irreducible(f.matrix);
  report.branching = branching_row(f.matrix);
  if (!report.irreducible) report.failures.push_back("matrix is not irreducible");
  if (!report.branching) report.failures.push_back("no row has sum >= 2");

  report.strictly_coupled_expanding =
      report.covering_ok && report.strict_separation_ok && report.expanding_ok;
  return report;
}

BasicSet basic_set(const PiecewiseExpandingMap& f, const SymbolWord& w) {
  if (!is_admissible(w, f.matrix)) {
    throw DomainError("word " + format_symbols(w.symbols()) + " is not admissible");
  }
  // back-iteration: start from V_{a_n} and pull through the branch inverses
  Interval current = f.branches[static_cast<std::size_t>(w.symbols().back()) - 1].domain;
  for (std::size_t j = w.size() - 1; j-- > 0;) {
    const Branch& b = f.branches[static_cast<std::size_t>(w.symbols()[j]) - 1];
    auto pulled = intersect(b.preimage(current), b.domain);
    if (!pulled || !(pulled->length() > 0)) {
      throw ConsistencyError("empty basic set for admissible word " +
                             format_symbols(w.symbols()) +
                             "; the map does not satisfy the covering relation");
    }
    current = *pulled;
  }
  return BasicSet{w, current};
}

std::vector<BasicSet> limit_set_cover(const PiecewiseExpandingMap& f, std::size_t depth,
                                      std::size_t budget) {
  if (depth < 1) throw UsageError("cover depth must be at least 1");
  std::vector<SymbolWord> words = enumerate_admissible_words(f.matrix, depth, budget);
  std::vector<BasicSet> cover;
  cover.reserve(words.size());
  for (const SymbolWord& w : words) cover.push_back(basic_set(f, w));
  return cover;
}

SymbolWord code_orbit(const PiecewiseExpandingMap& f, const Rational& x, std::size_t steps) {
  std::vector<Symbol> word;
  word.reserve(steps + 1);
  Rational point = x;
  for (std::size_t n = 0; n <= steps; ++n) {
    auto piece = f.piece_of(point);
    if (!piece) {
      throw EscapeError("orbit escapes the pieces at step " + std::to_string(n) +
                            " (point ~" + std::to_string(to_double(point)) + ")",
                        n, to_double(point));
    }
    word.push_back(static_cast<Symbol>(*piece));
    if (n < steps) point = f.branches[*piece - 1].apply(point);
  }
  return SymbolWord(static_cast<int>(f.piece_count()), std::move(word));
}

Similarity branch_inverse_similarity(const PiecewiseExpandingMap& f, std::size_t piece) {
  if (piece < 1 || piece > f.piece_count()) {
    throw UsageError("piece index " + std::to_string(piece) + " out of range");
  }
  const Branch& b = f.branches[piece - 1];
  Similarity s;
  s.ratio = 1 / b.slope;
  s.reflect = b.reflect;
  s.offset = b.reflect ? Rational(b.offset / b.slope) : Rational(-b.offset / b.slope);
  return s;
}

namespace {

/// first `inner`, then `outer`
Similarity compose(const Similarity& outer, const Similarity& inner) {
  Similarity s;
  s.ratio = outer.ratio * inner.ratio;
  s.reflect = outer.reflect != inner.reflect;
  Rational signed_outer = outer.reflect ? -outer.ratio : outer.ratio;
  s.offset = signed_outer * inner.offset + outer.offset;
  return s;
}

Interval pieces_hull(const PiecewiseExpandingMap& f) {
  Interval h = f.branches.front().domain;
  for (const Branch& b : f.branches) h = hull(h, b.domain);
  return h;
}

}  // namespace

SimilarityIFS inverse_branch_ifs(const PiecewiseExpandingMap& f) {
  if (f.matrix != TransitionMatrix::full_shift(f.matrix.size())) {
    throw DomainError("inverse-branch IFS requires the full-shift matrix");
  }
  SimilarityIFS ifs;
  ifs.seed = pieces_hull(f);
  for (std::size_t i = 1; i <= f.piece_count(); ++i) {
    ifs.maps.push_back(branch_inverse_similarity(f, i));
  }
  return ifs;
}

SimilarityIFS star_decomposition_ifs(const PiecewiseExpandingMap& f) {
  if (!is_star(f.matrix, 1, true)) {
    throw DomainError("star decomposition requires a strict star matrix on index 1");
  }
  SimilarityIFS ifs;
  ifs.seed = pieces_hull(f);
  Similarity t1 = branch_inverse_similarity(f, 1);
  ifs.maps.push_back(t1);
  for (std::size_t i = 2; i <= f.piece_count(); ++i) {
    // (f^2|_{V_i})^-1: undo f|_{V_1}, then f|_{V_i}
    ifs.maps.push_back(compose(branch_inverse_similarity(f, i), t1));
  }
  return ifs;
}

PiecewiseExpandingMap expanding_map_from_ifs(const SimilarityIFS& ifs) {
  IfsValidation validation = validate_ifs(ifs);
  if (!validation.valid) {
    std::string what = "IFS is not valid:";
    for (const std::string& failure : validation.failures) what += " " + failure + ";";
    throw DomainError(what);
  }
  PiecewiseExpandingMap f{ifs.seed, TransitionMatrix::full_shift(ifs.maps.size()), {}};
  for (const Similarity& s : ifs.maps) {
    Branch b;
    b.domain = s(ifs.seed);
    b.slope = 1 / s.ratio;
    b.reflect = s.reflect;
    b.offset = s.reflect ? Rational(s.offset / s.ratio) : Rational(-s.offset / s.ratio);
    f.branches.push_back(std::move(b));
  }
  return f;
}

}  // namespace lydim
