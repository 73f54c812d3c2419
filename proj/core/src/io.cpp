#include "lydim/io.hpp"

#include <cmath>
#include <cstdio>

#include "lydim/errors.hpp"

namespace lydim {

double round12(double x) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

Rational rational_from_json(const Json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long long>());
  if (value.is_number_float()) return Rational(value.get<double>());  // exact binary value
  throw UsageError("expected a number or a rational string, got " + value.dump());
}

Json interval_to_json(const Interval& iv) {
  return Json::array({to_string(iv.lo), to_string(iv.hi)});
}

namespace {

Interval interval_from_json(const Json& value, const char* what) {
  if (!value.is_array() || value.size() != 2) {
    throw UsageError(std::string(what) + " must be a [lo, hi] pair");
  }
  return Interval(rational_from_json(value[0]), rational_from_json(value[1]));
}

bool reflect_from_sign(const Json& value) {
  const std::string sign = value.get<std::string>();
  if (sign == "+") return false;
  if (sign == "-") return true;
  throw UsageError("sign must be \"+\" or \"-\", got '" + sign + "'");
}

}  // namespace

PiecewiseExpandingMap map_from_json(const Json& doc) {
  if (!doc.contains("matrix") || !doc.contains("branches")) {
    throw UsageError("map document needs \"matrix\" and \"branches\"");
  }
  TransitionMatrix a = TransitionMatrix::parse(doc.at("matrix").get<std::string>());
  const Json& branches = doc.at("branches");
  if (!branches.is_array() || branches.size() != a.size()) {
    throw UsageError("expected " + std::to_string(a.size()) + " branches");
  }
  std::vector<Interval> layout;
  std::vector<Rational> lambdas;
  std::vector<bool> reflect;
  for (const Json& b : branches) {
    layout.push_back(interval_from_json(b.at("interval"), "branch interval"));
    lambdas.push_back(rational_from_json(b.at("lambda")));
    reflect.push_back(b.contains("sign") ? reflect_from_sign(b.at("sign")) : false);
  }
  Interval domain = doc.contains("domain")
                        ? interval_from_json(doc.at("domain"), "domain")
                        : [&] {
                            Interval h = layout.front();
                            for (const Interval& v : layout) h = hull(h, v);
                            return h;
                          }();
  return synthesize(a, layout, lambdas, reflect, domain);
}

Json map_to_json(const PiecewiseExpandingMap& f) {
  Json doc;
  doc["domain"] = interval_to_json(f.domain);
  doc["matrix"] = f.matrix.to_literal();
  Json branches = Json::array();
  for (const Branch& b : f.branches) {
    Json jb;
    jb["interval"] = interval_to_json(b.domain);
    jb["lambda"] = to_string(b.slope);
    jb["sign"] = b.reflect ? "-" : "+";
    jb["offset"] = to_string(b.offset);
    jb["image"] = interval_to_json(b.image());
    branches.push_back(std::move(jb));
  }
  doc["branches"] = std::move(branches);
  return doc;
}

SimilarityIFS ifs_from_json(const Json& doc) {
  if (!doc.contains("seed") || !doc.contains("maps")) {
    throw UsageError("IFS document needs \"seed\" and \"maps\"");
  }
  SimilarityIFS ifs;
  ifs.seed = interval_from_json(doc.at("seed"), "seed");
  const Json& maps = doc.at("maps");
  if (!maps.is_array() || maps.size() < 2) {
    throw UsageError("IFS needs at least 2 maps");
  }
  for (const Json& m : maps) {
    Similarity s;
    s.ratio = rational_from_json(m.at("ratio"));
    s.offset = rational_from_json(m.at("offset"));
    s.reflect = m.value("reflect", false);
    ifs.maps.push_back(std::move(s));
  }
  return ifs;
}

Json ifs_to_json(const SimilarityIFS& ifs) {
  Json doc;
  doc["seed"] = interval_to_json(ifs.seed);
  Json maps = Json::array();
  for (const Similarity& s : ifs.maps) {
    Json jm;
    jm["ratio"] = to_string(s.ratio);
    jm["offset"] = to_string(s.offset);
    jm["reflect"] = s.reflect;
    maps.push_back(std::move(jm));
  }
  doc["maps"] = std::move(maps);
  return doc;
}

}  // namespace lydim
