#include "lydim/ifs.hpp"

#include <algorithm>
#include <cmath>

#include "lydim/errors.hpp"

namespace lydim {

Interval Similarity::operator()(const Interval& iv) const {
  Rational a = (*this)(iv.lo);
  Rational b = (*this)(iv.hi);
  return reflect ? Interval(b, a) : Interval(a, b);
}

std::vector<Rational> SimilarityIFS::ratios() const {
  std::vector<Rational> out;
  out.reserve(maps.size());
  for (const Similarity& s : maps) out.push_back(s.ratio);
  return out;
}

IfsValidation validate_ifs(const SimilarityIFS& ifs) {
  IfsValidation report;
  report.ratios = ifs.ratios();
  if (ifs.maps.size() < 2) {
    report.failures.push_back("need at least 2 maps, got " + std::to_string(ifs.maps.size()));
  }
  std::vector<Interval> images;
  images.reserve(ifs.maps.size());
  for (std::size_t i = 0; i < ifs.maps.size(); ++i) {
    const Similarity& s = ifs.maps[i];
    if (!(s.ratio > 0 && s.ratio < 1)) {
      report.failures.push_back("map " + std::to_string(i + 1) + " ratio " +
                                to_string(s.ratio) + " is not in (0,1)");
    }
    Interval img = s(ifs.seed);
    if (!ifs.seed.contains(img)) {
      report.failures.push_back("S_" + std::to_string(i + 1) + "(K) = " + to_string(img) +
                                " is not contained in K = " + to_string(ifs.seed));
    }
    images.push_back(img);
  }
  bool first_gap = true;
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      Rational d = distance(images[i], images[j]);
      if (d == 0) {
        report.failures.push_back("S_" + std::to_string(i + 1) + "(K) and S_" +
                                  std::to_string(j + 1) + "(K) touch or overlap");
      }
      if (first_gap || d < report.gap) {
        report.gap = d;
        first_gap = false;
      }
    }
  }
  report.valid = report.failures.empty();
  return report;
}

Interval code_point(const SimilarityIFS& ifs, const SymbolWord& w) {
  if (static_cast<std::size_t>(w.alphabet()) != ifs.maps.size()) {
    throw UsageError("word alphabet " + std::to_string(w.alphabet()) +
                     " does not match IFS with " + std::to_string(ifs.maps.size()) + " maps");
  }
  // innermost map first: S_{a_0}( ... S_{a_k}(K) ) nests over prefixes
  Interval current = ifs.seed;
  for (std::size_t j = w.size(); j-- > 0;) {
    current = ifs.maps[static_cast<std::size_t>(w.symbols()[j]) - 1](current);
  }
  return current;
}

namespace {

MoranRoot bisect_moran(const std::vector<double>& ratios, double tol) {
  if (ratios.size() < 2) {
    throw DomainError("need at least 2 contraction ratios");
  }
  for (double c : ratios) {
    if (!(c > 0.0 && c < 1.0)) {
      throw DomainError("contraction ratio " + std::to_string(c) + " is not in (0,1)");
    }
  }
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");

  const auto value = [&](double p) {
    double sum = 0.0;
    for (double c : ratios) sum += std::pow(c, p);
    return sum;
  };
  const double cmax = *std::max_element(ratios.begin(), ratios.end());
  const double m = static_cast<double>(ratios.size());
  // At p = 0 the sum is m > 1; at ln m / ln(1/cmax) it is <= 1. The sum is
  // strictly decreasing in p, so this brackets the unique root.
  MoranRoot out;
  out.bracket_lo = 0.0;
  out.bracket_hi = std::log(m) / std::log(1.0 / cmax);
  double lo = out.bracket_lo, hi = out.bracket_hi;
  double mid = 0.5 * (lo + hi), fmid = 0.0;
  const int cap = 200;
  for (int it = 1; it <= cap; ++it) {
    mid = 0.5 * (lo + hi);
    fmid = value(mid) - 1.0;
    out.iterations = it;
    if (std::abs(fmid) <= tol || (hi - lo) <= 1e-17 * (1.0 + mid)) break;
    if (fmid > 0.0) {
      lo = mid;  // sum too big: root lies to the right
    } else {
      hi = mid;
    }
  }
  out.p = mid;
  out.residual = fmid;
  if (std::abs(out.residual) > tol) {
    throw ConvergenceError("Moran bisection left residual " + std::to_string(out.residual) +
                               " > tol after " + std::to_string(out.iterations) + " iterations",
                           out.p);
  }
  return out;
}

}  // namespace

MoranRoot moran_root(const std::vector<double>& ratios, double tol) {
  return bisect_moran(ratios, tol);
}

MoranRoot moran_root_star(const std::vector<double>& lambdas, double tol) {
  if (lambdas.size() < 2) {
    throw DomainError("need at least 2 expansion rates");
  }
  for (double l : lambdas) {
    if (!(l > 1.0)) {
      throw DomainError("expansion rate " + std::to_string(l) + " must exceed 1");
    }
  }
  std::vector<double> ratios;
  ratios.reserve(lambdas.size());
  ratios.push_back(1.0 / lambdas[0]);
  for (std::size_t i = 1; i < lambdas.size(); ++i) {
    ratios.push_back(1.0 / (lambdas[0] * lambdas[i]));
  }
  return bisect_moran(ratios, tol);
}

CylinderWeight cylinder_weight(const SymbolWord& w, const std::vector<Rational>& ratios,
                               WeightMode mode) {
  if (static_cast<std::size_t>(w.alphabet()) != ratios.size()) {
    throw UsageError("word alphabet does not match ratio count");
  }
  for (const Rational& c : ratios) {
    if (!(c > 0 && c < 1)) {
      throw DomainError("contraction ratio " + to_string(c) + " is not in (0,1)");
    }
  }
  CylinderWeight out{Rational(1), 0.0, 0.0};
  for (Symbol v : w.symbols()) {
    const Rational& c = ratios[static_cast<std::size_t>(v) - 1];
    Rational factor = (mode == WeightMode::Primed && v != 1) ? c / ratios[0] : c;
    out.exact *= factor;
    out.log_value += std::log(to_double(factor));
  }
  out.value = std::exp(out.log_value);
  return out;
}

CylinderMass bernoulli_cylinder_mass(const SymbolWord& w, const std::vector<double>& ratios,
                                     double dimension) {
  if (static_cast<std::size_t>(w.alphabet()) != ratios.size()) {
    throw UsageError("word alphabet does not match ratio count");
  }
  double prob_sum = 0.0;
  for (double c : ratios) prob_sum += std::pow(c, dimension);
  if (std::abs(prob_sum - 1.0) > 1e-9) {
    throw ConsistencyError("(c_1^D,...,c_m^D) sums to " + std::to_string(prob_sum) +
                           "; D is not the Moran root of these ratios");
  }
  CylinderMass out{0.0, 0.0};
  for (Symbol v : w.symbols()) {
    out.log_mass += dimension * std::log(ratios[static_cast<std::size_t>(v) - 1]);
  }
  out.mass = std::exp(out.log_mass);
  return out;
}

}  // namespace lydim
