#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sck/frame.hpp"
#include "sck/poset.hpp"

namespace sck {

/// A stably compact space. Tier-1 spaces fix the convention once: opens are
/// the upper sets of the stored point order, saturated sets are the upper
/// sets, and the specialization order is the stored order. Built-in spaces
/// expose curated families instead of arbitrary subsets.
class SpaceDescriptor {
 public:
  static SpaceDescriptor finite(PosetPtr points);
  static SpaceDescriptor builtin(const std::string& name);  // dint | dint_op

  bool is_tier1() const { return points_ != nullptr; }
  const PosetPtr& points() const;
  const Frame& frame() const { return frame_; }
  std::string name() const;

  /// Tier-1: opens are the upset masks of the point order; index into the
  /// open lattice of the frame.
  std::size_t open_index_of_mask(std::uint64_t upset) const;
  std::uint64_t open_mask(std::size_t index) const;

 private:
  SpaceDescriptor() = default;
  PosetPtr points_;
  Frame frame_ = Frame::builtin("dint");
};

/// Swap the specialization order; dint and dint_op are each other's duals.
/// NoDual for built-ins without a registered dual.
SpaceDescriptor de_groot_dual(const SpaceDescriptor& space);

struct PatchReport {
  std::string kind;   // "discrete" | "interval"
  std::vector<std::string> points;
  std::string basis;
};

PatchReport patch(const SpaceDescriptor& space);

/// Finite Nachbin space: compact Hausdorff is automatic (discrete patch),
/// the datum is the closed partial order on the points.
struct NachbinSpace {
  PosetPtr points;
};

NachbinSpace to_nachbin(const SpaceDescriptor& space);      // TierUnsupported
SpaceDescriptor from_nachbin(const NachbinSpace& nachbin);

/// All compact saturated subsets of a Tier-1 space (the upper sets), sorted;
/// TierUnsupported on built-ins (dint exposes the closed-up family instead).
std::vector<std::uint64_t> compact_saturated_sets(const SpaceDescriptor& space);

/// Compact saturated subsets of dint: empty, [r,1] with rational r, whole.
struct DintCompactSaturated {
  enum class Kind { Empty, ClosedUp, Whole } kind = Kind::Empty;
  Rat r;  // ClosedUp only; Whole is [0,1]

  static DintCompactSaturated empty() { return {Kind::Empty, Rat()}; }
  static DintCompactSaturated closed_up(Rat v) {
    return {Kind::ClosedUp, std::move(v)};
  }
  static DintCompactSaturated whole() { return {Kind::Whole, Rat()}; }
  std::string str() const;
};

/// K <<' L: some open sits between them (K ⊆ U ⊆ L).
bool dint_ksat_below(const DintCompactSaturated& k,
                     const DintCompactSaturated& l);

struct PerfectReport {
  bool continuous = false;
  bool preimage_criterion = false;   // preimages of compact saturated sets compact
  bool hom_criterion = false;        // the frame hom preserves way-below
  bool agree = false;
  bool perfect = false;
  std::string detail;
};

/// Both perfectness criteria for a monotone map between Tier-1 spaces; they
/// must agree. NotContinuous when the map is not monotone.
PerfectReport perfect_check(const MonotoneMap& map);

/// Both criteria for a registered dint endomorphism ("id", "square",
/// "halve", "step:<r>"); preimages of the closed-up family are computed from
/// the registered parameter action.
PerfectReport perfect_check_dint(const std::string& registered_name);

}  // namespace sck
