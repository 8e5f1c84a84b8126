#pragma once

#include <string>
#include <vector>

#include "sck/frame.hpp"

namespace sck {

/// Version stamp of the per-built-in ideal classifications used below.
inline constexpr int kClassificationVersion = 1;

/// A frame ideal in classified normal form.
///   Tier-1 / cofinite:  Principal(x)  (every ideal is principal there)
///   dint:               Bottom | OpenCut(r) | ClosedCut(r) | All
struct ClassifiedIdeal {
  enum class Form { Principal, Bottom, OpenCut, ClosedCut, All };
  Form form = Form::Principal;
  FrameElem principal;  // Principal only
  Rat r;                // cuts only

  std::string str(const Frame& frame) const;
};

/// Join (colimit) of a classified ideal, back in the frame.
FrameElem ideal_join(const Frame& frame, const ClassifiedIdeal& ideal);

struct FlachsmeyerResult {
  Frame frame;
  std::string note;
};

/// Frame of ideals. Tier-1 and cofinite ideals are all principal, so the
/// result is an isomorphic copy; dint yields the double-cut chain.
/// NoClassification for built-ins without a registered classification.
FlachsmeyerResult flachsmeyer(const Frame& frame);

struct SectionCheck {
  std::vector<std::pair<std::string, std::string>> samples;  // y -> ideal
  bool meets_ok = false;
  bool joins_ok = false;
  bool retract_ok = false;
};

/// The section y -> {x : x way-below y} of the ideal-join map, with its
/// frame-hom and retract properties verified on the carrier (Tier-1) or on a
/// basis grid (Tier-2). NotStablyContinuous when the precondition fails.
SectionCheck flachsmeyer_section(const Frame& frame);

ClassifiedIdeal section_ideal(const Frame& frame, const FrameElem& y);

enum class AuxRelation { RatherBelow, WayBelow };

struct CompactifyResult {
  Frame frame;
  std::string note;
};

/// Ideals restricted along the subdivisible core of the auxiliary idealoid
/// (every member has a related successor inside). The default auxiliary
/// relation is rather-below, which lands in compact regular frames; the
/// way-below reading is also exposed and reproduces already-continuous
/// frames instead.
CompactifyResult bm_compactify(const Frame& frame, AuxRelation relation);

struct VscReport {
  bool covers_all = false;
  std::vector<std::string> elements;  // Tier-1: the subframe carrier
  std::string family;                 // Tier-2: parametric description
  bool closed_meets = false;
  bool closed_joins = false;
  bool closed_directed = false;
};

/// Elements expressible as joins of way-below-core-restricted ideals, with
/// subframe closure checks.
VscReport very_schwartz_subframe(const Frame& frame);

/// The auxiliary relation on a Tier-1 frame as an idealoid over the element
/// order (used by the compactification and by tests).
Idealoid tier1_relation_idealoid(const Frame& frame, AuxRelation relation);

}  // namespace sck
