#include "lydim/witness.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "lydim/coding.hpp"
#include "lydim/errors.hpp"

namespace lydim {

// ---------------------------------------------------------------------------
// WitnessSchedule

WitnessSchedule WitnessSchedule::closed_form(const std::string& form) {
  WitnessSchedule sched;
  sched.description_ = form;
  if (form.size() > 2 && form.substr(0, 2) == "n^") {
    const std::string exp = form.substr(2);
    for (char c : exp) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw UsageError("bad schedule form '" + form + "' (want e.g. \"n^2\" or \"4\")");
      }
    }
    sched.is_power_ = true;
    sched.power_ = std::stoull(exp);
    if (sched.power_ > 8) {
      throw UsageError("schedule exponent " + exp + " is too large (max 8); the gap "
                       "sums overflow 64-bit arithmetic long before such growth helps");
    }
    return sched;
  }
  for (char c : form) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw UsageError("bad schedule form '" + form + "' (want e.g. \"n^2\" or \"4\")");
    }
  }
  if (form.empty()) throw UsageError("empty schedule form");
  sched.constant_ = std::stoull(form);
  return sched;
}

WitnessSchedule WitnessSchedule::from_list(std::vector<std::uint64_t> gaps) {
  WitnessSchedule sched;
  sched.description_ = "list[" + std::to_string(gaps.size()) + "]";
  sched.explicit_gaps_ = std::move(gaps);
  return sched;
}

std::uint64_t WitnessSchedule::gap(std::size_t n) const {
  if (explicit_gaps_) {
    if (n >= explicit_gaps_->size()) {
      throw HorizonError("schedule list of length " + std::to_string(explicit_gaps_->size()) +
                         " exhausted at block " + std::to_string(n));
    }
    return (*explicit_gaps_)[n];
  }
  if (is_power_) {
    std::uint64_t v = 1;
    for (std::uint64_t e = 0; e < power_; ++e) v *= n;
    return v;
  }
  return constant_;
}

std::uint64_t WitnessSchedule::sync_position(std::size_t i) const {
  // u_0 = 0, u_1 = N_0 + 5, u_{i+1} = u_i + N_i + i + 6
  if (i == 0) return 0;
  std::uint64_t u = gap(0) + 5;
  for (std::size_t j = 1; j < i; ++j) u += gap(j) + j + 6;
  return u;
}

std::uint64_t WitnessSchedule::capacity(std::size_t block) const {
  // block i spans [u_i, u_{i+1}); i+1 copies, three pins, one trailing 1
  if (block == 0) return gap(0);
  return gap(block) + 1;
}

std::uint64_t WitnessSchedule::slots_before_block(std::size_t block) const {
  std::uint64_t total = 0;
  for (std::size_t b = 0; b < block; ++b) total += capacity(b);
  return total;
}

std::uint64_t WitnessSchedule::slot_position(std::uint64_t slot) const {
  std::uint64_t remaining = slot;
  std::uint64_t u = 0;
  for (std::size_t block = 0;; ++block) {
    const std::uint64_t cap = capacity(block);
    if (remaining < cap) {
      return u + block + 4 + remaining;  // payload starts at u_i + i + 4
    }
    remaining -= cap;
    u += (block == 0) ? gap(0) + 5 : gap(block) + block + 6;
  }
}

std::size_t WitnessSchedule::block_of_position(std::uint64_t pos) const {
  std::uint64_t u = 0;
  for (std::size_t block = 0;; ++block) {
    const std::uint64_t next = u + ((block == 0) ? gap(0) + 5 : gap(block) + block + 6);
    if (pos < next) return block;
    u = next;
  }
}

std::size_t WitnessSchedule::sync_count_for_cylinder(std::size_t k) const {
  const std::uint64_t target = 2 * (static_cast<std::uint64_t>(k) + 1);
  std::uint64_t sum = 0;
  std::size_t m = 0;
  const std::size_t cap = 4'000'000;
  while (true) {
    sum += gap(m);
    if (sum >= target) return m;
    if (++m > cap) {
      throw DomainError("schedule gaps never reach " + std::to_string(target) +
                        "; N_n may be identically 0");
    }
  }
}

double WitnessSchedule::vanishing_ratio(std::size_t m_blocks) const {
  double denom = 0;
  for (std::size_t n = 0; n < m_blocks; ++n) denom += static_cast<double>(gap(n));
  const double numer = static_cast<double>((m_blocks + 6) * (m_blocks + 6));
  if (denom == 0) return std::numeric_limits<double>::infinity();
  return numer / denom;
}

// ---------------------------------------------------------------------------
// template roles

Symbol flip_symbol(Symbol a, int alphabet) {
  if (a < 1 || a > alphabet) throw UsageError("symbol outside alphabet");
  return 1 + (a % alphabet);  // cyclic successor; never equals a for m >= 2
}

namespace {

enum class Role { Copy, PinnedOne, Flip, Payload };

struct PositionRole {
  Role role;
  std::size_t block;
  std::uint64_t payload_slot = 0;  // meaningful for Role::Payload
};

PositionRole role_of(const WitnessSchedule& sched, std::uint64_t pos) {
  const std::size_t i = sched.block_of_position(pos);
  const std::uint64_t u = sched.sync_position(i);
  const std::uint64_t next = sched.sync_position(i + 1);
  const std::uint64_t off = pos - u;
  if (off <= i) return {Role::Copy, i};
  if (off == i + 1 || off == i + 3 || pos == next - 1) return {Role::PinnedOne, i};
  if (off == i + 2) return {Role::Flip, i};
  const std::uint64_t slot = sched.slots_before_block(i) + (off - (i + 4));
  return {Role::Payload, i, slot};
}

void require_star(const TransitionMatrix& a) {
  if (!is_star(a, 1, false)) {
    throw DomainError("the witness template requires row 1 and column 1 of the matrix "
                      "to be all 1s");
  }
}

void require_admissible(const SymbolStream& s, const TransitionMatrix& a,
                        const std::string& name) {
  if (auto j = first_inadmissible_junction(s, a)) {
    throw DomainError(name + " is not admissible at junction " + std::to_string(*j));
  }
}

}  // namespace

SymbolStream build_witness(const SymbolStream& s, const WitnessSchedule& sched,
                           const TransitionMatrix& a, const SymbolStream& payload,
                           std::size_t horizon) {
  require_star(a);
  if (s.alphabet() != payload.alphabet() ||
      static_cast<std::size_t>(s.alphabet()) != a.size()) {
    throw UsageError("base, payload and matrix alphabets must agree");
  }
  require_admissible(s, a, "base stream");
  require_admissible(payload, a, "payload stream");
  if (horizon == 0) throw UsageError("witness horizon must be positive");
  if (s.horizon() < horizon) {
    // copies and flips read s only at positions below the output horizon
    throw HorizonError("base stream horizon " + std::to_string(s.horizon()) +
                       " too short for witness horizon " + std::to_string(horizon));
  }

  std::vector<Symbol> t;
  t.reserve(horizon);
  for (std::uint64_t pos = 0; pos < horizon; ++pos) {
    const PositionRole r = role_of(sched, pos);
    switch (r.role) {
      case Role::Copy:
        t.push_back(s.at(pos));
        break;
      case Role::PinnedOne:
        t.push_back(1);
        break;
      case Role::Flip:
        t.push_back(flip_symbol(s.at(pos), s.alphabet()));
        break;
      case Role::Payload:
        t.push_back(payload.at(r.payload_slot));  // HorizonError when exhausted
        break;
    }
  }
  SymbolStream out(s.alphabet(), std::move(t), Provenance::BuiltByWitness);
  if (auto j = first_inadmissible_junction(out, a)) {
    throw DomainError("witness output is inadmissible at junction " + std::to_string(*j) +
                      " (symbols " + std::to_string(out.at(*j)) + "," +
                      std::to_string(out.at(*j + 1)) + "); matrix is star but lacks the "
                      "transitions this payload needs");
  }
  return out;
}

SymbolStream pr_map(const SymbolStream& t, const SymbolStream& s,
                    const WitnessSchedule& sched, const TransitionMatrix& a,
                    std::size_t horizon) {
  require_star(a);
  if (t.alphabet() != s.alphabet()) throw UsageError("stream alphabets must agree");
  require_admissible(t, a, "payload stream");
  require_admissible(s, a, "base stream");
  if (horizon == 0) throw UsageError("witness horizon must be positive");
  if (s.horizon() < horizon) {
    throw HorizonError("base stream horizon too short for pr at horizon " +
                       std::to_string(horizon));
  }

  // assembled block by block, consuming t's symbols as the payload segments
  std::vector<Symbol> out;
  out.reserve(horizon);
  std::uint64_t consumed = 0;
  for (std::size_t i = 0; out.size() < horizon; ++i) {
    const std::uint64_t u = sched.sync_position(i);
    for (std::uint64_t pos = u; pos <= u + i && out.size() < horizon; ++pos) {
      out.push_back(s.at(pos));
    }
    if (out.size() < horizon) out.push_back(1);
    if (out.size() < horizon) {
      out.push_back(flip_symbol(s.at(u + i + 2), s.alphabet()));
    }
    if (out.size() < horizon) out.push_back(1);
    const std::uint64_t chunk = sched.capacity(i);
    for (std::uint64_t c = 0; c < chunk && out.size() < horizon; ++c) {
      out.push_back(t.at(consumed++));
    }
    if (out.size() < horizon) out.push_back(1);  // position u_{i+1} - 1
  }
  SymbolStream result(s.alphabet(), std::move(out), Provenance::BuiltByPr);
  if (auto j = first_inadmissible_junction(result, a)) {
    throw DomainError("pr image is inadmissible at junction " + std::to_string(*j));
  }
  return result;
}

DeltaResult delta_k(const SymbolWord& alpha_prefix, const WitnessSchedule& sched) {
  DeltaResult out;
  const SymbolWord preimage = phi_inverse(alpha_prefix);
  out.preimage_length = preimage.size();
  out.embedded_length = sched.slot_position(out.preimage_length);
  out.delta = out.embedded_length - out.preimage_length;
  out.sync_count = sched.sync_count_for_cylinder(alpha_prefix.size() - 1);
  const std::uint64_t m6 = static_cast<std::uint64_t>(out.sync_count) + 6;
  out.bound = m6 * m6;
  return out;
}

MembershipReport check_membership(const SymbolStream& t, const SymbolStream& s,
                                  const WitnessSchedule& sched) {
  if (t.alphabet() != s.alphabet()) throw UsageError("stream alphabets must agree");
  MembershipReport report;
  report.all_pass = true;
  const std::uint64_t h = std::min<std::uint64_t>(t.horizon(), s.horizon());
  // evaluate the defining clauses of each block that fits the horizon
  for (std::size_t i = 0;; ++i) {
    const std::uint64_t u = sched.sync_position(i);
    const std::uint64_t next = sched.sync_position(i + 1);
    if (u + i + 3 >= h) break;
    auto record = [&](const char* clause, std::uint64_t pos, bool pass) {
      if (!pass) {
        report.all_pass = false;
        report.failures.push_back({i, clause, pos, false});
      }
    };
    for (std::uint64_t k = u; k <= u + i; ++k) {
      record("copy: t_k = s_k on [u_i, u_i+i]", k, t.at(k) == s.at(k));
    }
    record("one: t_{u_i+i+1} = 1", u + i + 1, t.at(u + i + 1) == 1);
    record("flip: t_{u_i+i+2} = flip(s_{u_i+i+2})", u + i + 2,
           t.at(u + i + 2) == flip_symbol(s.at(u + i + 2), s.alphabet()));
    record("one: t_{u_i+i+3} = 1", u + i + 3, t.at(u + i + 3) == 1);
    if (next - 1 < h) {
      record("one: t_{u_{i+1}-1} = 1", next - 1, t.at(next - 1) == 1);
    }
    report.blocks_checked = i + 1;
    if (next >= h) break;
  }
  return report;
}

LiYorkeSymbolicReport verify_liyorke_symbolic(const SymbolStream& s, const SymbolStream& t,
                                              const WitnessSchedule& sched,
                                              std::size_t depth) {
  if (s.horizon() != t.horizon()) {
    throw UsageError("symbolic verification expects equal horizons");
  }
  const std::uint64_t needed = sched.sync_position(depth) + depth + 2;
  if (s.horizon() <= needed) {
    throw HorizonError("horizon " + std::to_string(s.horizon()) +
                       " does not cover sync depth " + std::to_string(depth) + " (need > " +
                       std::to_string(needed) + ")");
  }
  LiYorkeSymbolicReport report;
  report.all_pass = true;
  for (std::size_t i = 0; i <= depth; ++i) {
    SyncCheck check;
    check.i = i;
    check.u = sched.sync_position(i);
    check.proximality = stream_metric(shift(s, check.u), shift(t, check.u));
    check.separation =
        stream_metric(shift(s, check.u + i + 1), shift(t, check.u + i + 1));
    check.proximality_ok = check.proximality <= std::ldexp(1.0, -static_cast<int>(i));
    check.separation_ok = check.separation >= 0.5;
    report.all_pass = report.all_pass && check.proximality_ok && check.separation_ok;
    report.checks.push_back(check);
  }
  return report;
}

LiYorkeGeometricReport verify_liyorke_geometric(const PiecewiseExpandingMap& f,
                                                const Rational& x, const Rational& y,
                                                std::size_t horizon,
                                                const GeometricThresholds& thresholds) {
  if (horizon == 0) throw UsageError("geometric horizon must be positive");
  LiYorkeGeometricReport report;
  report.horizon = horizon;
  report.tail_window =
      thresholds.tail_window ? std::min(thresholds.tail_window, horizon) : horizon / 2;
  if (report.tail_window == 0) report.tail_window = 1;

  Rational px = x, py = y;
  bool first = true;
  const std::size_t tail_start = horizon - report.tail_window;
  for (std::size_t n = 0; n <= horizon; ++n) {
    const double d = std::abs(to_double(px - py));
    if (first || d < report.global_min) {
      report.global_min = d;
      report.argmin = n;
    }
    if (first || d > report.global_max) {
      report.global_max = d;
      report.argmax = n;
    }
    if (n >= tail_start) {
      if (n == tail_start) {
        report.tail_min = d;
        report.tail_max = d;
      } else {
        report.tail_min = std::min(report.tail_min, d);
        report.tail_max = std::max(report.tail_max, d);
      }
    }
    first = false;
    if (n == horizon) break;
    auto ix = f.piece_of(px);
    if (!ix) {
      throw EscapeError("first orbit escapes at step " + std::to_string(n), n, to_double(px));
    }
    auto iy = f.piece_of(py);
    if (!iy) {
      throw EscapeError("second orbit escapes at step " + std::to_string(n), n, to_double(py));
    }
    px = f.branches[*ix - 1].apply(px);
    py = f.branches[*iy - 1].apply(py);
  }
  report.proximality_witnessed = report.tail_min < thresholds.eps_prox;
  report.separation_witnessed = report.tail_max > thresholds.eps_sep;
  return report;
}

LiYorkeGeometricReport verify_liyorke_geometric(const SimilarityIFS& ifs, const Rational& x,
                                                const Rational& y, std::size_t horizon,
                                                const GeometricThresholds& thresholds) {
  return verify_liyorke_geometric(expanding_map_from_ifs(ifs), x, y, horizon, thresholds);
}

// ---------------------------------------------------------------------------
// local dimension probe

namespace {

ProbeReport finish_probe(ProbeReport report) {
  report.gaps_decreasing_on_grid = true;
  double prev = std::numeric_limits<double>::infinity();
  for (const ProbePoint& pt : report.points) {
    const double gap = std::abs(pt.ratio - report.dimension);
    // 1e-12 absorbs roundoff jitter when the gaps sit at machine noise
    if (gap > prev + 1e-12) report.gaps_decreasing_on_grid = false;
    prev = gap;
  }
  if (!report.points.empty()) {
    report.final_gap = std::abs(report.points.back().ratio - report.dimension);
  }
  return report;
}

std::vector<double> ratio_doubles(const SimilarityIFS& ifs) {
  std::vector<double> out;
  out.reserve(ifs.maps.size());
  for (const Similarity& s : ifs.maps) out.push_back(to_double(s.ratio));
  return out;
}

}  // namespace

ProbeReport local_dimension_probe(const SimilarityIFS& ifs, const WitnessSchedule& sched,
                                  const TransitionMatrix& a, const SymbolStream& alpha,
                                  const std::vector<std::size_t>& ks,
                                  const std::optional<SymbolStream>& base) {
  IfsValidation validation = validate_ifs(ifs);
  if (!validation.valid) throw DomainError("probe requires a valid IFS");
  if (ks.empty()) throw UsageError("probe needs at least one k");
  if (ifs.maps.size() != a.size()) {
    throw UsageError("IFS map count must match the matrix size");
  }
  require_star(a);

  ProbeReport report;
  report.dimension = moran_root(ratio_doubles(ifs)).p;

  const std::size_t k_max = *std::max_element(ks.begin(), ks.end());
  if (alpha.horizon() <= k_max) {
    throw HorizonError("alpha horizon " + std::to_string(alpha.horizon()) +
                       " does not cover k_max = " + std::to_string(k_max));
  }

  // embed the full Phi^-1(alpha) payload once, then read prefixes
  const SymbolStream payload = phi_inverse(alpha);
  const std::uint64_t max_len =
      sched.slot_position(phi_inverse(alpha.prefix_word(k_max + 1)).size());
  const SymbolStream s =
      base ? *base : SymbolStream::constant(alpha.alphabet(), 1, max_len + 2);
  const SymbolStream embedded = build_witness(s, sched, a, payload, max_len);

  // prefix sums: kept-symbol counts and kept log-ratios of the embedded word
  bool drop_next = false;
  std::vector<std::uint64_t> kept_count(embedded.horizon() + 1, 0);
  std::vector<double> kept_log(embedded.horizon() + 1, 0.0);
  const std::vector<double> logc = [&] {
    std::vector<double> v;
    for (const Similarity& sim : ifs.maps) v.push_back(std::log(to_double(sim.ratio)));
    return v;
  }();
  for (std::size_t p = 0; p < embedded.horizon(); ++p) {
    const Symbol v = embedded.symbols()[p];
    kept_count[p + 1] = kept_count[p];
    kept_log[p + 1] = kept_log[p];
    if (drop_next) {
      drop_next = false;  // this symbol is the eliminated successor
    } else {
      kept_count[p + 1] += 1;
      kept_log[p + 1] += logc[static_cast<std::size_t>(v) - 1];
      drop_next = (v != 1);
    }
  }

  const std::vector<double> ratios_d = ratio_doubles(ifs);
  const double log_seed = std::log(to_double(ifs.seed.length()));
  for (std::size_t k : ks) {
    const SymbolWord prefix = alpha.prefix_word(k + 1);
    const DeltaResult dk = delta_k(prefix, sched);
    ProbePoint pt;
    pt.k = k;
    pt.delta = dk.delta;
    pt.log_mass = bernoulli_cylinder_mass(prefix, ratios_d, report.dimension).log_mass;
    pt.log_diameter = kept_log[dk.embedded_length] + log_seed;
    if (!(pt.log_diameter < 0)) {
      throw DomainError("degenerate cylinder diameter at k = " + std::to_string(k));
    }
    pt.ratio = pt.log_mass / pt.log_diameter;
    report.points.push_back(pt);
  }
  return finish_probe(std::move(report));
}

ProbeReport local_dimension_probe_plain(const SimilarityIFS& ifs, const SymbolStream& alpha,
                                        const std::vector<std::size_t>& ks) {
  IfsValidation validation = validate_ifs(ifs);
  if (!validation.valid) throw DomainError("probe requires a valid IFS");
  if (ks.empty()) throw UsageError("probe needs at least one k");

  ProbeReport report;
  const std::vector<double> ratios = ratio_doubles(ifs);
  report.dimension = moran_root(ratios).p;
  const double log_seed = std::log(to_double(ifs.seed.length()));
  for (std::size_t k : ks) {
    const SymbolWord prefix = alpha.prefix_word(k + 1);
    ProbePoint pt;
    pt.k = k;
    pt.log_mass = bernoulli_cylinder_mass(prefix, ratios, report.dimension).log_mass;
    pt.log_diameter = log_seed;
    for (Symbol v : prefix.symbols()) {
      pt.log_diameter += std::log(ratios[static_cast<std::size_t>(v) - 1]);
    }
    if (!(pt.log_diameter < 0)) {
      throw DomainError("degenerate cylinder diameter at k = " + std::to_string(k));
    }
    pt.ratio = pt.log_mass / pt.log_diameter;
    report.points.push_back(pt);
  }
  return finish_probe(std::move(report));
}

}  // namespace lydim
