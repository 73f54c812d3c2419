// lydim: subshifts of finite type, coupled-expanding interval maps,
// self-similar sets and their Moran dimensions, and Li-Yorke witness pairs.
//
// Exit codes: 0 success (and every assertion the subcommand makes passed),
// 1 a computation-level failure (reports are still emitted), 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lydim/lydim.hpp"

using namespace lydim;

namespace {

// ---------------------------------------------------------------------------
// small helpers

std::size_t word_budget() {
  if (const char* env = std::getenv("LYDIM_WORD_BUDGET")) {
    return static_cast<std::size_t>(std::strtoull(env, nullptr, 10));
  }
  return std::size_t{1} << 22;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  Json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("bad JSON in '" + path + "': " + e.what());
  }
  return doc;
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

Json number(double x) { return Json(round12(x)); }

std::pair<std::size_t, std::size_t> parse_depth_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    throw UsageError("depth range must look like 4..9, got '" + text + "'");
  }
  return {static_cast<std::size_t>(std::stoull(text.substr(0, dots))),
          static_cast<std::size_t>(std::stoull(text.substr(dots + 2)))};
}

std::vector<std::size_t> parse_k_grid(const std::string& text) {
  // "200..2000:200" or a comma list "50,100,500"
  std::vector<std::size_t> ks;
  if (text.find("..") != std::string::npos) {
    const auto dots = text.find("..");
    const auto colon = text.find(':', dots);
    const std::size_t lo = std::stoull(text.substr(0, dots));
    const std::size_t hi =
        std::stoull(text.substr(dots + 2, colon == std::string::npos
                                              ? std::string::npos
                                              : colon - dots - 2));
    const std::size_t step =
        colon == std::string::npos ? 1 : std::stoull(text.substr(colon + 1));
    if (step == 0 || hi < lo) throw UsageError("bad k grid '" + text + "'");
    for (std::size_t k = lo; k <= hi; k += step) ks.push_back(k);
    return ks;
  }
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) ks.push_back(std::stoull(item));
  if (ks.empty()) throw UsageError("empty k grid");
  return ks;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(to_double(parse_rational(item)));
  if (out.empty()) throw UsageError("empty list");
  return out;
}

SymbolStream stream_argument(int alphabet, const std::string& text) {
  // "constant:2:500" builds the constant-2 stream of horizon 500
  if (text.rfind("constant:", 0) == 0) {
    const auto first = text.find(':');
    const auto second = text.find(':', first + 1);
    if (second == std::string::npos) {
      throw UsageError("constant stream spec must be constant:<symbol>:<horizon>");
    }
    const Symbol v = static_cast<Symbol>(std::stoi(text.substr(first + 1, second - first - 1)));
    const std::size_t h = std::stoull(text.substr(second + 1));
    return SymbolStream::constant(alphabet, v, h);
  }
  // JSON arrays are accepted alongside the space-separated text format
  if (!text.empty() && text.front() == '[') {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string("bad JSON stream: ") + e.what());
    }
    if (!doc.is_array()) throw UsageError("JSON stream must be an array");
    std::vector<Symbol> symbols;
    for (const Json& v : doc) symbols.push_back(v.get<Symbol>());
    return SymbolStream(alphabet, std::move(symbols));
  }
  return parse_stream(alphabet, text);
}

Json verification_to_json(const MapVerification& v) {
  Json doc;
  doc["strictly_coupled_expanding"] = v.strictly_coupled_expanding;
  doc["covering_ok"] = v.covering_ok;
  doc["strict_separation_ok"] = v.strict_separation_ok;
  doc["interiors_disjoint"] = v.interiors_disjoint;
  doc["expanding_ok"] = v.expanding_ok;
  doc["irreducible"] = v.irreducible;
  doc["branching_row"] = v.branching ? Json(*v.branching) : Json(nullptr);
  doc["min_gap"] = to_string(v.min_gap);
  Json rows = Json::array();
  for (const auto& r : v.rows) {
    Json jr;
    jr["row"] = r.row;
    jr["covered"] = r.covered;
    jr["required_hull"] = interval_to_json(r.required_hull);
    jr["image"] = interval_to_json(r.image);
    jr["slack"] = to_string(r.slack);
    rows.push_back(std::move(jr));
  }
  doc["rows"] = std::move(rows);
  Json failures = Json::array();
  for (const auto& f : v.failures) failures.push_back(f);
  doc["failures"] = std::move(failures);
  return doc;
}

bool cantor_hypotheses(const MapVerification& v) {
  // what the invariant-Cantor-set construction needs from a verified map
  return v.strictly_coupled_expanding && v.irreducible && v.branching.has_value();
}

// ---------------------------------------------------------------------------
// subcommand configuration

struct MatrixCheckArgs {
  std::string matrix;
  double tol = 1e-10;
};

struct WordsArgs {
  std::string matrix;
  std::size_t n = 1;
  bool enumerate = false;
};

struct MoranArgs {
  std::string ratios;
  std::string lambdas;
  bool star = false;
  double tol = 1e-12;
};

struct MapArgs {
  std::string spec_path;
  std::string out_path;          // synth
  std::size_t depth = 1;         // cover
  std::string format = "csv";    // cover
  std::string x;                 // orbit
  std::size_t steps = 0;         // orbit
};

struct WitnessArgs {
  std::string matrix;
  std::string s;
  std::string payload;
  std::string schedule = "n^2";
  std::size_t horizon = 0;
  std::size_t depth = 10;
  std::size_t delta_upto = 32;
};

struct DimArgs {
  std::string map_path;
  std::string depths = "4..9";
  double tol = 0.05;
  std::string equation = "auto";  // auto | plain | star
  bool summary_only = false;
};

struct ProbeArgs {
  std::string ifs_path;
  std::string matrix;
  std::string alpha;
  std::string base;
  std::string schedule = "n^2";
  std::string ks = "50..500:50";
  bool plain = false;
};

int run_matrix_check(const MatrixCheckArgs& args) {
  const TransitionMatrix a = TransitionMatrix::parse(args.matrix);
  Json doc;
  doc["matrix"] = a.to_literal();
  doc["m"] = a.size();
  doc["irreducible"] = is_irreducible(a);
  const auto branch = branching_row(a);
  doc["branching_row"] = branch ? Json(*branch) : Json(nullptr);
  Json stars = Json::array();
  for (std::size_t i = 1; i <= a.size(); ++i) {
    Json js;
    js["i"] = i;
    js["non_strict"] = is_star(a, i, false);
    js["strict"] = is_star(a, i, true);
    stars.push_back(std::move(js));
  }
  doc["star"] = std::move(stars);
  if (is_irreducible(a)) {
    doc["spectral_radius"] = number(spectral_radius(a, args.tol));
    doc["entropy"] = number(std::log(spectral_radius(a, args.tol)));
  } else {
    doc["spectral_radius"] = Json(nullptr);
    doc["entropy"] = Json(nullptr);
  }
  const PhiCompatibility compat = phi_compatibility(a);
  Json jc;
  jc["star"] = compat.star;
  jc["zero_diagonal_star"] = compat.zero_diagonal_star;
  jc["full_bijection"] = compat.full_bijection;
  jc["note"] = compat.note;
  doc["phi"] = std::move(jc);
  emit(doc);
  if (!compat.full_bijection && !compat.note.empty()) {
    std::cerr << "warning: " << compat.note << "\n";
  }
  return 0;
}

int run_words(const WordsArgs& args) {
  const TransitionMatrix a = TransitionMatrix::parse(args.matrix);
  Json doc;
  doc["matrix"] = a.to_literal();
  doc["n"] = args.n;
  doc["count"] = count_admissible_words(a, args.n).str();
  if (args.enumerate) {
    const auto words = enumerate_admissible_words(a, args.n, word_budget());
    Json items = Json::array();
    for (const SymbolWord& w : words) items.push_back(format_symbols(w.symbols()));
    doc["words"] = std::move(items);
  }
  emit(doc);
  return 0;
}

int run_moran(const MoranArgs& args) {
  Json doc;
  MoranRoot root;
  if (args.star || !args.lambdas.empty()) {
    if (args.lambdas.empty()) {
      throw UsageError("the star equation needs --lambdas");
    }
    const std::vector<double> lambdas = parse_double_list(args.lambdas);
    root = moran_root_star(lambdas, args.tol);
    doc["equation"] = "(1/l_1)^p + sum_{i>=2} (1/(l_1*l_i))^p = 1";
    Json jl = Json::array();
    for (double l : lambdas) jl.push_back(number(l));
    doc["lambdas"] = std::move(jl);
  } else {
    if (args.ratios.empty()) throw UsageError("need --ratios or --lambdas");
    const std::vector<double> ratios = parse_double_list(args.ratios);
    root = moran_root(ratios, args.tol);
    doc["equation"] = "sum_i c_i^p = 1";
    Json jr = Json::array();
    for (double c : ratios) jr.push_back(number(c));
    doc["ratios"] = std::move(jr);
  }
  doc["p"] = number(root.p);
  doc["residual"] = number(root.residual);
  doc["iterations"] = root.iterations;
  doc["bracket"] = Json::array({number(root.bracket_lo), number(root.bracket_hi)});
  doc["ly_dimension"] = number(2.0 * root.p);
  emit(doc);
  return 0;
}

int run_map_synth(const MapArgs& args) {
  const PiecewiseExpandingMap f = map_from_json(load_json(args.spec_path));
  const MapVerification v = verify(f);
  Json doc;
  doc["map"] = map_to_json(f);
  doc["verification"] = verification_to_json(v);
  if (!args.out_path.empty()) {
    std::ofstream out(args.out_path);
    if (!out) throw UsageError("cannot write '" + args.out_path + "'");
    out << map_to_json(f).dump(2) << "\n";
  }
  emit(doc);
  return cantor_hypotheses(v) ? 0 : 1;
}

int run_map_verify(const MapArgs& args) {
  const PiecewiseExpandingMap f = map_from_json(load_json(args.spec_path));
  const MapVerification v = verify(f);
  emit(verification_to_json(v));
  return cantor_hypotheses(v) ? 0 : 1;
}

int run_map_cover(const MapArgs& args) {
  const PiecewiseExpandingMap f = map_from_json(load_json(args.spec_path));
  const auto cover = limit_set_cover(f, args.depth, word_budget());
  if (args.format == "csv") {
    std::printf("word,lo,hi,diameter\n");
    for (const BasicSet& b : cover) {
      std::string word;
      for (Symbol v : b.word.symbols()) word += std::to_string(v);
      std::printf("%s,%.12g,%.12g,%.12g\n", word.c_str(), to_double(b.interval.lo),
                  to_double(b.interval.hi), to_double(b.interval.length()));
    }
  } else if (args.format == "json") {
    Json items = Json::array();
    for (const BasicSet& b : cover) {
      Json jb;
      jb["word"] = format_symbols(b.word.symbols());
      jb["interval"] = interval_to_json(b.interval);
      jb["diameter"] = number(to_double(b.interval.length()));
      items.push_back(std::move(jb));
    }
    Json doc;
    doc["depth"] = args.depth;
    doc["count"] = cover.size();
    doc["basic_sets"] = std::move(items);
    emit(doc);
  } else {
    throw UsageError("--format must be csv or json");
  }
  return 0;
}

int run_map_orbit(const MapArgs& args) {
  const PiecewiseExpandingMap f = map_from_json(load_json(args.spec_path));
  const SymbolWord w = code_orbit(f, parse_rational(args.x), args.steps);
  Json doc;
  doc["x"] = args.x;
  doc["steps"] = args.steps;
  doc["word"] = format_symbols(w.symbols());
  emit(doc);
  return 0;
}

int run_witness(const WitnessArgs& args) {
  const TransitionMatrix a = TransitionMatrix::parse(args.matrix);
  const int m = static_cast<int>(a.size());
  const WitnessSchedule sched = WitnessSchedule::closed_form(args.schedule);
  const SymbolStream s = stream_argument(m, args.s);
  const SymbolStream payload = stream_argument(m, args.payload);
  if (args.horizon == 0) throw UsageError("--horizon must be positive");

  const SymbolStream t = build_witness(s, sched, a, payload, args.horizon);
  const SymbolStream s_cut(m, {s.symbols().begin(),
                               s.symbols().begin() + static_cast<long>(args.horizon)});
  const MembershipReport membership = check_membership(t, s_cut, sched);
  const LiYorkeSymbolicReport report = verify_liyorke_symbolic(s_cut, t, sched, args.depth);

  Json doc;
  doc["t"] = Json(t.symbols());
  Json sync = Json::array();
  for (const SyncCheck& check : report.checks) {
    Json jc;
    jc["i"] = check.i;
    jc["u"] = check.u;
    jc["prox"] = number(check.proximality);
    jc["sep"] = number(check.separation);
    jc["pass"] = check.proximality_ok && check.separation_ok;
    sync.push_back(std::move(jc));
  }
  doc["sync"] = std::move(sync);
  doc["membership_pass"] = membership.all_pass;
  doc["membership_blocks"] = membership.blocks_checked;

  // delta table over the payload's own coding image
  Json delta = Json::array();
  try {
    const SymbolStream alpha = phi(payload, a);
    const std::size_t k_max =
        std::min(args.delta_upto, alpha.horizon() == 0 ? 0 : alpha.horizon() - 1);
    for (std::size_t k = 0; k <= k_max && alpha.horizon() > 0; ++k) {
      const DeltaResult r = delta_k(alpha.prefix_word(k + 1), sched);
      Json jd;
      jd["k"] = k;
      jd["delta"] = r.delta;
      jd["M"] = r.sync_count;
      jd["bound"] = r.bound;
      delta.push_back(std::move(jd));
    }
  } catch (const Error&) {
    // payload too short to code; the delta table is simply empty
  }
  doc["delta"] = std::move(delta);
  doc["all_pass"] = report.all_pass && membership.all_pass;
  emit(doc);
  return (report.all_pass && membership.all_pass) ? 0 : 1;
}

MoranRoot map_equation_root(const PiecewiseExpandingMap& f, const std::string& equation,
                            double tol) {
  std::string mode = equation;
  if (mode == "auto") {
    if (f.matrix == TransitionMatrix::full_shift(f.matrix.size())) {
      mode = "plain";
    } else if (is_star(f.matrix, 1, true)) {
      mode = "star";
    } else {
      throw UsageError("no closed-form dimension equation for this matrix; pass "
                       "--equation plain or star explicitly");
    }
  }
  std::vector<double> lambdas;
  for (const Branch& b : f.branches) lambdas.push_back(to_double(b.slope));
  if (mode == "plain") {
    std::vector<double> ratios;
    for (double l : lambdas) ratios.push_back(1.0 / l);
    return moran_root(ratios, tol);
  }
  if (mode == "star") return moran_root_star(lambdas, tol);
  throw UsageError("--equation must be auto, plain or star");
}

int run_dim(const DimArgs& args) {
  const PiecewiseExpandingMap f = map_from_json(load_json(args.map_path));
  const auto [lo, hi] = parse_depth_range(args.depths);
  const DimensionEstimate est = estimate_dimension(f, lo, hi, word_budget());
  const MoranRoot root = map_equation_root(f, args.equation, 1e-12);
  const MoranComparison cmp = compare_to_moran(est, root, args.tol);

  if (!args.summary_only) {
    std::printf("epsilon,count\n");
    for (const auto& scale : est.scales) {
      std::printf("%.12g,%llu\n", scale.epsilon,
                  static_cast<unsigned long long>(scale.boxes));
    }
  }
  Json doc;
  doc["slope"] = number(est.slope);
  doc["intercept"] = number(est.intercept);
  doc["residual"] = number(est.residual);
  doc["moran_root"] = number(cmp.root);
  doc["ly_dimension"] = number(cmp.ly_dimension);
  doc["gap"] = number(cmp.gap);
  doc["tol"] = number(cmp.tol);
  doc["verdict"] = cmp.within ? "within" : "outside";
  emit(doc);
  return cmp.within ? 0 : 1;
}

int run_probe(const ProbeArgs& args) {
  const SimilarityIFS ifs = ifs_from_json(load_json(args.ifs_path));
  const int m = static_cast<int>(ifs.maps.size());
  const SymbolStream alpha = stream_argument(m, args.alpha);
  const std::vector<std::size_t> ks = parse_k_grid(args.ks);

  ProbeReport report;
  if (args.plain) {
    report = local_dimension_probe_plain(ifs, alpha, ks);
  } else {
    if (args.matrix.empty()) throw UsageError("witness-embedded probe needs --matrix");
    const TransitionMatrix a = TransitionMatrix::parse(args.matrix);
    std::optional<SymbolStream> base;
    if (!args.base.empty()) base = stream_argument(m, args.base);
    report = local_dimension_probe(ifs, WitnessSchedule::closed_form(args.schedule), a,
                                   alpha, ks, base);
  }

  Json doc;
  doc["D"] = number(report.dimension);
  Json points = Json::array();
  for (const ProbePoint& pt : report.points) {
    Json jp;
    jp["k"] = pt.k;
    jp["ratio"] = number(pt.ratio);
    jp["delta"] = pt.delta;
    points.push_back(std::move(jp));
  }
  doc["points"] = std::move(points);
  doc["final_gap"] = number(report.final_gap);
  doc["gaps_decreasing"] = report.gaps_decreasing_on_grid;
  emit(doc);
  return 0;
}

Json error_object(const char* type, const std::string& message) {
  Json doc;
  Json je;
  je["type"] = type;
  je["message"] = message;
  doc["error"] = std::move(je);
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Symbolic dynamics and fractal-dimension toolkit: transition matrices, "
      "coupled-expanding interval maps, self-similar sets, Moran-equation roots "
      "and Li-Yorke witness pairs"};
  app.require_subcommand(1);

  MatrixCheckArgs matrix_args;
  auto* matrix_cmd = app.add_subcommand("matrix", "Transition-matrix analysis");
  auto* matrix_check = matrix_cmd->add_subcommand(
      "check",
      "Irreducibility, branching row, star structure and spectral radius "
      "(the hypotheses a coupled-expanding map must realize)");
  matrix_check->add_option("--matrix", matrix_args.matrix,
                           "matrix literal, rows ';'-separated: \"1,1;1,0\"")
      ->required();
  matrix_check->add_option("--tol", matrix_args.tol, "power-iteration tolerance");

  WordsArgs words_args;
  auto* words_cmd = app.add_subcommand(
      "words", "Count or enumerate admissible words of a subshift of finite type");
  words_cmd->add_option("--matrix", words_args.matrix, "matrix literal")->required();
  words_cmd->add_option("-n,--length", words_args.n, "word length")->required();
  words_cmd->add_flag("--enumerate", words_args.enumerate,
                      "list the words (budget via LYDIM_WORD_BUDGET)");

  MoranArgs moran_args;
  auto* moran_cmd = app.add_subcommand(
      "moran",
      "Solve the Moran dimension equation sum c_i^p = 1, or its star-matrix "
      "variant (1/l_1)^p + sum (1/(l_1*l_i))^p = 1; reports 2p as the "
      "Li-Yorke-pair dimension figure");
  moran_cmd->add_option("--ratios", moran_args.ratios,
                        "contraction ratios, e.g. 1/3,1/3 or 0.5,0.25");
  moran_cmd->add_option("--lambdas", moran_args.lambdas,
                        "expansion rates for the star equation, e.g. 20/9,2");
  moran_cmd->add_flag("--star", moran_args.star, "use the star equation");
  moran_cmd->add_option("--tol", moran_args.tol, "bisection residual tolerance");

  MapArgs map_args;
  auto* map_cmd = app.add_subcommand("map", "Piecewise-expanding interval maps");
  auto* synth = map_cmd->add_subcommand(
      "synth",
      "Synthesize the affine coupled-expanding map of a layout: each branch "
      "image is the smallest centered interval covering the pieces its matrix "
      "row selects");
  synth->add_option("--spec", map_args.spec_path, "map JSON")->required();
  synth->add_option("--out", map_args.out_path, "write the realized map JSON here");
  auto* verify_cmd = map_cmd->add_subcommand(
      "verify",
      "Check the strict coupled-expanding conditions (covering, gaps, exact "
      "expansion) plus irreducibility and the branching row");
  verify_cmd->add_option("--spec", map_args.spec_path, "map JSON")->required();
  auto* cover = map_cmd->add_subcommand(
      "cover",
      "Emit the depth-n basic sets (nested Cantor-set approximants) as CSV "
      "rows: word, lo, hi, diameter");
  cover->add_option("--spec", map_args.spec_path, "map JSON")->required();
  cover->add_option("--depth", map_args.depth, "word length")->required();
  cover->add_option("--format", map_args.format, "csv (default) or json");
  auto* orbit = map_cmd->add_subcommand(
      "orbit", "Itinerary coding of a point under the map (exact rational orbit)");
  orbit->add_option("--spec", map_args.spec_path, "map JSON")->required();
  orbit->add_option("--x", map_args.x, "starting point, e.g. 3/4")->required();
  orbit->add_option("--steps", map_args.steps, "iterations")->required();

  WitnessArgs witness_args;
  auto* witness_cmd = app.add_subcommand(
      "witness",
      "Build a Li-Yorke witness stream over a star matrix: copies of the base "
      "stream on growing sync blocks, a flipped digit after each, payload in "
      "the free positions; verifies the proximality (2^-i) and separation "
      "(1/2) bounds and the delta(k) cylinder bookkeeping");
  witness_cmd->add_option("--matrix", witness_args.matrix, "matrix literal")->required();
  witness_cmd->add_option("--s", witness_args.s,
                          "base stream (\"1 2 1 ...\" or constant:<sym>:<horizon>)")
      ->required();
  witness_cmd->add_option("--payload", witness_args.payload, "payload stream")->required();
  witness_cmd->add_option("--schedule", witness_args.schedule,
                          "gap schedule N_n: \"n^2\" (default), \"n^3\", or a constant");
  witness_cmd->add_option("--horizon", witness_args.horizon, "output horizon")->required();
  witness_cmd->add_option("--depth", witness_args.depth, "sync blocks to verify");
  witness_cmd->add_option("--delta-upto", witness_args.delta_upto,
                          "largest k in the delta table");

  DimArgs dim_args;
  auto* dim_cmd = app.add_subcommand("dim", "Box-counting dimension estimation");
  auto* estimate = dim_cmd->add_subcommand(
      "estimate",
      "Box-count basic-set covers over a depth range, fit log N vs log(1/eps), "
      "and compare the slope with the map's Moran-equation root");
  estimate->add_option("--map", dim_args.map_path, "map JSON")->required();
  estimate->add_option("--depths", dim_args.depths, "depth range, e.g. 4..9");
  estimate->add_option("--tol", dim_args.tol, "comparison tolerance");
  estimate->add_option("--equation", dim_args.equation, "auto (default), plain or star");
  auto* compare = dim_cmd->add_subcommand(
      "compare", "Same as estimate but emits only the JSON summary");
  compare->add_option("--map", dim_args.map_path, "map JSON")->required();
  compare->add_option("--depths", dim_args.depths, "depth range, e.g. 4..9");
  compare->add_option("--tol", dim_args.tol, "comparison tolerance");
  compare->add_option("--equation", dim_args.equation, "auto (default), plain or star");

  ProbeArgs probe_args;
  auto* probe_cmd = app.add_subcommand("probe", "Measure-theoretic probes");
  auto* local_dim = probe_cmd->add_subcommand(
      "local-dim",
      "Cylinder-level local-dimension surrogate: log Bernoulli mass over log "
      "coded diameter along an embedded cylinder family; approaches the Moran "
      "root as the embedding overhead delta(k)/k vanishes");
  local_dim->add_option("--ifs", probe_args.ifs_path, "IFS JSON")->required();
  local_dim->add_option("--matrix", probe_args.matrix,
                        "star matrix for the witness embedding");
  local_dim->add_option("--alpha", probe_args.alpha,
                        "full-shift stream (\"1 2 ...\" or constant:<sym>:<horizon>)")
      ->required();
  local_dim->add_option("--base", probe_args.base, "base stream (default: all 1s)");
  local_dim->add_option("--schedule", probe_args.schedule, "gap schedule (default n^2)");
  local_dim->add_option("--ks", probe_args.ks, "k grid: \"50..500:50\" or \"50,100\"");
  local_dim->add_flag("--plain", probe_args.plain,
                      "probe the bare cylinders without the witness embedding");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    emit(error_object("usage", e.what()));
    return 2;
  }

  try {
    if (matrix_check->parsed()) return run_matrix_check(matrix_args);
    if (words_cmd->parsed()) return run_words(words_args);
    if (moran_cmd->parsed()) return run_moran(moran_args);
    if (synth->parsed()) return run_map_synth(map_args);
    if (verify_cmd->parsed()) return run_map_verify(map_args);
    if (cover->parsed()) return run_map_cover(map_args);
    if (orbit->parsed()) return run_map_orbit(map_args);
    if (witness_cmd->parsed()) return run_witness(witness_args);
    if (estimate->parsed()) return run_dim(dim_args);
    if (compare->parsed()) {
      dim_args.summary_only = true;
      return run_dim(dim_args);
    }
    if (local_dim->parsed()) return run_probe(probe_args);
    emit(error_object("usage", "no subcommand"));
    return 2;
  } catch (const UsageError& e) {
    emit(error_object("usage", e.what()));
    return 2;
  } catch (const SynthesisError& e) {
    Json doc = error_object("synthesis", e.what());
    doc["error"]["row"] = e.row;
    doc["error"]["min_feasible_lambda"] = number(e.min_feasible_lambda);
    emit(doc);
    return 1;
  } catch (const EscapeError& e) {
    Json doc = error_object("escape", e.what());
    doc["error"]["step"] = e.step;
    doc["error"]["point"] = number(e.point);
    emit(doc);
    return 1;
  } catch (const Error& e) {
    emit(error_object("computation", e.what()));
    return 1;
  }
}
