#ifndef LYDIM_WITNESS_HPP
#define LYDIM_WITNESS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lydim/coupled_map.hpp"
#include "lydim/ifs.hpp"
#include "lydim/symbols.hpp"
#include "lydim/transition_matrix.hpp"

namespace lydim {

/// Sync schedule of the witness template: gap lengths N_0, N_1, ... and the
/// derived sync positions u_0 = 0, u_1 = N_0 + 5, u_{i+1} = u_i + N_i + i + 6.
///
/// Block i of a witness stream occupies [u_i, u_{i+1}) and looks like
///
///   s_{u_i} ... s_{u_i+i}   1   flip(s_{u_i+i+2})   1   <payload>   1
///
/// so block 0 has N_0 free payload positions and block i >= 1 has N_i + 1.
class WitnessSchedule {
 public:
  /// Closed forms: "n^2", "n^3", ... or a constant like "4".
  static WitnessSchedule closed_form(const std::string& form);
  static WitnessSchedule from_list(std::vector<std::uint64_t> gaps);

  /// N_n; for list schedules, indices beyond the list throw HorizonError.
  std::uint64_t gap(std::size_t n) const;
  /// u_i (cached).
  std::uint64_t sync_position(std::size_t i) const;

  /// Free payload positions in block i: N_0 for i = 0, N_i + 1 afterwards.
  std::uint64_t capacity(std::size_t block) const;
  /// Total payload capacity of blocks 0..block-1.
  std::uint64_t slots_before_block(std::size_t block) const;
  /// Stream position of payload slot #slot (both 0-based).
  std::uint64_t slot_position(std::uint64_t slot) const;
  /// Block containing a stream position.
  std::size_t block_of_position(std::uint64_t pos) const;

  /// M(k): the unique M with sum_{n<M} N_n < 2(k+1) <= sum_{n<=M} N_n.
  std::size_t sync_count_for_cylinder(std::size_t k) const;
  /// (M+6)^2 / sum_{n<M} N_n, the quantity whose vanishing drives the
  /// dimension lower bound. M = 0 gives +infinity.
  double vanishing_ratio(std::size_t m_blocks) const;

  const std::string& description() const { return description_; }

 private:
  WitnessSchedule() = default;

  std::optional<std::vector<std::uint64_t>> explicit_gaps_;
  std::uint64_t power_ = 0;      // N_n = n^power_ ...
  std::uint64_t constant_ = 0;   // ... or N_n = constant_
  bool is_power_ = false;
  std::string description_;
};

Symbol flip_symbol(Symbol a, int alphabet);  // cyclic successor, never == a

/// Fills the witness template over base stream s: copies s on the sync block
/// of each i, pins the surrounding 1s and the flipped digit, and fills every
/// free position from `payload` left to right. Output is checked admissible
/// (a failure is only possible for non-star matrices and names the junction).
///
/// Requires s and payload admissible w.r.t. a, is_star(a, 1, false), and
/// horizons long enough for `horizon` output symbols; throws HorizonError
/// otherwise (never pads).
SymbolStream build_witness(const SymbolStream& s, const WitnessSchedule& sched,
                           const TransitionMatrix& a, const SymbolStream& payload,
                           std::size_t horizon);

/// The re-embedding injection: pr(t) is the witness whose payload is t
/// itself. Assembled block by block (copies, pins, payload chunk per block),
/// and agrees with build_witness(s, sched, a, t, horizon) symbol for symbol.
SymbolStream pr_map(const SymbolStream& t, const SymbolStream& s,
                    const WitnessSchedule& sched, const TransitionMatrix& a,
                    std::size_t horizon);

/// Number of template positions before payload slot L, where L is the length
/// of the coding preimage of [a_0..a_k] — the length overhead of embedding a
/// cylinder through pr versus the bare preimage.
struct DeltaResult {
  std::uint64_t delta = 0;
  std::uint64_t preimage_length = 0;   // |Phi^-1(a_0..a_k)|
  std::uint64_t embedded_length = 0;   // pinned prefix length of the pr image
  std::size_t sync_count = 0;          // M(k)
  std::uint64_t bound = 0;             // (M(k)+6)^2
};
DeltaResult delta_k(const SymbolWord& alpha_prefix, const WitnessSchedule& sched);

/// Clause-by-clause membership check of t against the witness-set definition
/// for base s: copies on [u_i, u_i+i], the pinned 1s, the flipped digit, and
/// the pre-sync 1 at u_{i+1}-1, for every block that fits the horizon.
/// Evaluates the defining clauses directly and does not share the builder's
/// template walk.
struct MembershipReport {
  struct ClauseCheck {
    std::size_t block = 0;
    std::string clause;      // "copy", "one_after_copy", "flip", ...
    std::uint64_t position = 0;
    bool pass = false;
  };
  bool all_pass = false;
  std::size_t blocks_checked = 0;
  std::vector<ClauseCheck> failures;  // only failing clauses are recorded
};
MembershipReport check_membership(const SymbolStream& t, const SymbolStream& s,
                                  const WitnessSchedule& sched);

/// Proximality/separation profile at the sync blocks:
///   d_i = metric(shift(s, u_i),     shift(t, u_i))      must be <= 2^-i,
///   e_i = metric(shift(s, u_i+i+1), shift(t, u_i+i+1))  must be >= 1/2.
struct SyncCheck {
  std::size_t i = 0;
  std::uint64_t u = 0;
  double proximality = 0;
  double separation = 0;
  bool proximality_ok = false;
  bool separation_ok = false;
};
struct LiYorkeSymbolicReport {
  bool all_pass = false;
  std::vector<SyncCheck> checks;
};
LiYorkeSymbolicReport verify_liyorke_symbolic(const SymbolStream& s,
                                              const SymbolStream& t,
                                              const WitnessSchedule& sched,
                                              std::size_t depth);

/// Finite-horizon orbit-distance evidence for a Li-Yorke pair. The verdict
/// is explicitly "witnessed at horizon H": liminf/limsup are not decidable
/// from finitely many iterates and the report never claims more.
struct GeometricThresholds {
  double eps_prox = 1e-6;
  double eps_sep = 1e-3;
  std::size_t tail_window = 0;  // 0: window = horizon/2
};
struct LiYorkeGeometricReport {
  std::size_t horizon = 0;
  std::size_t tail_window = 0;
  double tail_min = 0, tail_max = 0;
  double global_min = 0, global_max = 0;
  std::size_t argmin = 0, argmax = 0;
  bool proximality_witnessed = false;
  bool separation_witnessed = false;
};
LiYorkeGeometricReport verify_liyorke_geometric(const PiecewiseExpandingMap& f,
                                                const Rational& x, const Rational& y,
                                                std::size_t horizon,
                                                const GeometricThresholds& thresholds);
/// Same check on an IFS attractor, via the induced expanding map.
LiYorkeGeometricReport verify_liyorke_geometric(const SimilarityIFS& ifs,
                                                const Rational& x, const Rational& y,
                                                std::size_t horizon,
                                                const GeometricThresholds& thresholds);

/// Cylinder-level surrogate of the mass-distribution quotient:
/// ratio_k = log nu([a_0..a_k]) / log diam(pi(Phi(pr-image cylinder))).
/// If delta(k)/k -> 0 the ratios approach the Moran root from below.
struct ProbePoint {
  std::size_t k = 0;
  double ratio = 0;
  double log_mass = 0;
  double log_diameter = 0;
  std::uint64_t delta = 0;
};
struct ProbeReport {
  double dimension = 0;  // Moran root of the IFS ratios
  std::vector<ProbePoint> points;
  double final_gap = 0;                 // |ratio - D| at the largest k
  bool gaps_decreasing_on_grid = false;
};

/// Witness-embedded probe. `base` is the template's base stream; when absent
/// the all-1s stream is used (minimal template overhead).
ProbeReport local_dimension_probe(const SimilarityIFS& ifs,
                                  const WitnessSchedule& sched,
                                  const TransitionMatrix& a,
                                  const SymbolStream& alpha,
                                  const std::vector<std::size_t>& ks,
                                  const std::optional<SymbolStream>& base = std::nullopt);

/// Plain embedding (no pr, no coding overhead): ratio_k over the bare
/// cylinder [a_0..a_k]. Exactly D at every k for equal ratios and unit seed.
ProbeReport local_dimension_probe_plain(const SimilarityIFS& ifs,
                                        const SymbolStream& alpha,
                                        const std::vector<std::size_t>& ks);

}  // namespace lydim

#endif  // LYDIM_WITNESS_HPP
