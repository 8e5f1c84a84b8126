#pragma once

#include <string>

#include "sck/frame.hpp"
#include "sck/idealoid.hpp"
#include "sck/presheaf.hpp"
#include "sck/space.hpp"
#include "sck/verdier.hpp"

// vendored single-header nlohmann/json
#include "json.hpp"

namespace sck {

using Json = nlohmann::json;

/// {"elements": [...], "covers": [[a, b], ...]}
PosetPtr poset_from_json(const Json& doc);
Json poset_to_json(const FinitePoset& poset);

/// {"tier": "finite", "poset": {...}} | {"tier": "builtin", "name": "dint"}
Frame frame_from_json(const Json& doc);
Json frame_to_json(const Frame& frame);

/// Frame document plus {"view": "space"}; Tier-1 spaces carry the point
/// poset (opens are its upper sets).
SpaceDescriptor space_from_json(const Json& doc);
Json space_to_json(const SpaceDescriptor& space);

/// {"poset": <poset doc | "dint" | "dint_op" | "cofinite">,
///  "pairs": [[a, b], ...] | "le" | "way-below" | "rather-below"}
/// Absorption closure is applied unless apply_closure is false, in which
/// case the input is validated instead.
struct IdealoidDoc {
  bool tier1 = true;
  Idealoid idealoid = Idealoid::empty(
      std::make_shared<FinitePoset>(FinitePoset::from_covers({"x"}, {})));
  Frame frame = Frame::builtin("dint");  // Tier-2 carrier
  std::string relation;                  // Tier-2 named relation
};
IdealoidDoc idealoid_from_json(const Json& doc, bool apply_closure);
Json idealoid_to_json(const Idealoid& idealoid);

SetPresheaf set_presheaf_from_json(const Json& doc);
JumpPresheaf jump_presheaf_from_json(const Json& doc);
/// Either {"pullback_of": <jump doc>} or the explicit cut-chain tables.
GammaJumpPresheaf gamma_presheaf_from_json(const Json& doc);
KSatAssignment ksat_assignment_from_json(const Json& doc);

RationalComplex complex_from_json(const Json& doc);
Json complex_to_json(const RationalComplex& complex);
ComplexSheaf complex_sheaf_from_json(const Json& doc);

/// Hasse diagram; node labels round-trip through quoting.
std::string poset_to_dot(const FinitePoset& poset, const std::string& name);
std::string lattice_to_dot(const FiniteLattice& lattice,
                           const std::string& name);

Json homology_to_json(const std::map<int, std::size_t>& homology);

}  // namespace sck
