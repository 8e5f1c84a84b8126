#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sck/space.hpp"

namespace sck {

/// Set-valued presheaf on a Tier-1 space: a finite set per open and a
/// restriction function for every comparable pair of opens. Functoriality is
/// validated at construction.
class SetPresheaf {
 public:
  /// values[i] is the set at open index i (of space.frame().lattice());
  /// restrictions maps (U, V) with V < U to an index table F(U) -> F(V).
  static SetPresheaf make(
      SpaceDescriptor space, std::vector<std::vector<std::string>> values,
      std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>>
          restrictions);

  const SpaceDescriptor& space() const { return space_; }
  const std::vector<std::string>& at(std::size_t open) const {
    return values_[open];
  }
  /// Element transport along V <= U (identity when V == U).
  std::size_t restrict_elem(std::size_t open_u, std::size_t open_v,
                            std::size_t elem) const;

 private:
  SetPresheaf() = default;
  SpaceDescriptor space_ = SpaceDescriptor::builtin("dint");
  std::vector<std::vector<std::string>> values_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> res_;
};

/// F(∅) a singleton and every binary square cartesian.
struct ExcisiveReport {
  bool ok = false;
  std::string counterexample;
};
ExcisiveReport is_excisive(const SetPresheaf& presheaf);

struct SheafifyResult {
  std::vector<std::string> limit;        // the limit set, printable names
  std::vector<std::size_t> comparison;   // F(U) -> limit
  bool bijective = false;
};

/// Limit of F over { V : V way-below U } with the comparison map from F(U).
/// Tier-1 spaces have U itself terminal in that index poset; the limit is
/// computed honestly as the set of compatible families. NotExcisive when the
/// precondition fails.
SheafifyResult sheafify_at(const SetPresheaf& presheaf, std::size_t open);

/// Jump presheaf on dint: finitely many rational thresholds
/// 0 <= t_1 < ... < t_k < 1; value sets per threshold interval
/// I_0 = [0, t_1], I_j = (t_j, t_{j+1}], I_k = (t_k, 1), constant on each;
/// maps[j] transports V_j -> V_{j+1}. The value at top is V_0 and the value
/// at bot is a singleton.
class JumpPresheaf {
 public:
  static JumpPresheaf make(std::vector<Rat> thresholds,
                           std::vector<std::vector<std::string>> values,
                           std::vector<std::vector<std::size_t>> maps);

  std::size_t regions() const { return values_.size(); }
  const std::vector<Rat>& thresholds() const { return thresholds_; }
  const std::vector<std::string>& region_value(std::size_t j) const {
    return values_[j];
  }

  /// Region of up(q), q in [0,1): the number of thresholds strictly below q.
  std::size_t region_of(const Rat& q) const;
  /// Region of up(q + epsilon): thresholds weakly below q.
  std::size_t region_right_of(const Rat& q) const;
  /// Composite transport V_i -> V_j for i <= j.
  std::vector<std::size_t> transport(std::size_t i, std::size_t j) const;

 private:
  std::vector<Rat> thresholds_;
  std::vector<std::vector<std::string>> values_;
  std::vector<std::vector<std::size_t>> maps_;
};

/// sheafify_at on dint: the limit over {V : V way-below up(q)} is the
/// eventually-stable value just right of q; comparison non-bijective exactly
/// when the transport across q jumps.
SheafifyResult sheafify_at_dint(const JumpPresheaf& presheaf,
                                const FrameElem& open);

/// Presheaf on the classified-ideal frame of dint, with finitely many cut
/// thresholds: locally constant on open parameter regions, with custom
/// values at ClosedCut(u_i) and OpenCut(u_i) for each threshold u_i.
class GammaJumpPresheaf {
 public:
  /// region_values has thresholds.size()+1 entries; all_value is the set at
  /// the ideal All. map_in[i]: region i -> ClosedCut(u_i); map_mid[i]:
  /// ClosedCut(u_i) -> OpenCut(u_i); map_out[i]: OpenCut(u_i) -> region i+1;
  /// all_map: All -> region 0.
  static GammaJumpPresheaf make(
      std::vector<Rat> thresholds, std::vector<std::string> all_value,
      std::vector<std::size_t> all_map,
      std::vector<std::vector<std::string>> region_values,
      std::vector<std::vector<std::string>> closed_at,
      std::vector<std::vector<std::string>> open_at,
      std::vector<std::vector<std::size_t>> map_in,
      std::vector<std::vector<std::size_t>> map_mid,
      std::vector<std::vector<std::size_t>> map_out);

  /// Pullback of a dint jump presheaf along the Flachsmeyer projection:
  /// ClosedCut(q) takes F(up(q)), OpenCut(r) the value just right of r.
  static GammaJumpPresheaf pullback(const JumpPresheaf& presheaf);

  const std::vector<Rat>& thresholds() const { return thresholds_; }
  const std::vector<std::string>& value_at(const FrameElem& cut) const;

  /// The Flachsmeyer image condition at the open `elem` of dint: the germ of
  /// the OpenCut values from the left of q maps bijectively onto the value
  /// at ClosedCut(q). Trivially true at bot and top (compact ideals).
  bool image_condition_at(const FrameElem& elem) const;

 private:
  std::vector<Rat> thresholds_;
  std::vector<std::string> all_value_;
  std::vector<std::size_t> all_map_;
  std::vector<std::vector<std::string>> region_values_, closed_at_, open_at_;
  std::vector<std::vector<std::size_t>> map_in_, map_mid_, map_out_;
  std::vector<std::string> bottom_value_ = {"*"};

  std::size_t region_of(const Rat& r) const;  // thresholds strictly below r

 public:
  /// Transport from the germ just left of q into ClosedCut(q); the germ set
  /// is region_values_[#thresholds < q].
  std::pair<std::vector<std::string>, std::vector<std::size_t>>
  left_germ_into_closed(const Rat& q) const;
};

/// checks emitted by flachsmeyer_image_check
struct ImageCheckReport {
  bool ok = false;
  std::vector<std::pair<std::string, bool>> per_open;
};

/// Condition over a sample of opens: the denominator-bounded grid plus every
/// cut threshold. NotExcisive if the presheaf data is malformed.
ImageCheckReport flachsmeyer_image_check(const GammaJumpPresheaf& presheaf,
                                         unsigned max_denominator);

/// F̂(K) = colim_{U ⊇ K} F(U) for the dint compact saturated family,
/// computed by threshold lookup.
std::vector<std::string> ksat_sections(const JumpPresheaf& presheaf,
                                       const DintCompactSaturated& k);

struct KSheafReport {
  bool ok = false;
  std::vector<std::string> sections;  // F̂(K)
  std::string detail;
};

/// Verifies colim_{L >>' K} F̂(L) -> F̂(K) is a bijection.
KSheafReport k_sheaf_check(const JumpPresheaf& presheaf,
                           const DintCompactSaturated& k);

/// Direct assignment on the closed-up family (test shape for the condition):
/// thresholds with LEFT-closed regions, so monotone stabilization from the
/// left can genuinely fail. values has thresholds.size()+1 entries;
/// Ĝ([r,1]) = values[#thresholds <= r]; maps[i]: values[i] -> values[i+1].
struct KSatAssignment {
  std::vector<Rat> thresholds;
  std::vector<std::vector<std::string>> values;
  std::vector<std::vector<std::size_t>> maps;
};

KSheafReport k_sheaf_check_assignment(const KSatAssignment& assignment,
                                      const DintCompactSaturated& k);

}  // namespace sck
