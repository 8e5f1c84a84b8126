#include "sck/space.hpp"

#include <algorithm>

#include "sck/error.hpp"

namespace sck {

SpaceDescriptor SpaceDescriptor::finite(PosetPtr points) {
  SpaceDescriptor s;
  s.points_ = std::move(points);
  // Opens are upsets of the point order = downsets of the opposite; the
  // masks of the lattice elements are then literally the open point sets.
  auto opposite = std::make_shared<FinitePoset>(s.points_->opposite());
  s.frame_ = Frame::tier1(
      FiniteLattice::downsets_of(opposite, FiniteLattice::kDefaultDownsetLimit));
  return s;
}

SpaceDescriptor SpaceDescriptor::builtin(const std::string& name) {
  SpaceDescriptor s;
  s.frame_ = Frame::builtin(name);
  return s;
}

const PosetPtr& SpaceDescriptor::points() const {
  if (!points_) fail("TierUnsupported", "built-in spaces have no point list");
  return points_;
}

std::string SpaceDescriptor::name() const {
  return is_tier1() ? "finite" : frame_.name();
}

std::size_t SpaceDescriptor::open_index_of_mask(std::uint64_t upset) const {
  auto idx = frame_.lattice().index_of_mask(upset);
  if (!idx) fail("UnknownElement", "not an open set of the space");
  return *idx;
}

std::uint64_t SpaceDescriptor::open_mask(std::size_t index) const {
  return frame_.lattice().mask(index);
}

SpaceDescriptor de_groot_dual(const SpaceDescriptor& space) {
  if (space.is_tier1())
    return SpaceDescriptor::finite(
        std::make_shared<FinitePoset>(space.points()->opposite()));
  if (space.frame().kind() == FrameKind::Dint)
    return SpaceDescriptor::builtin("dint_op");
  if (space.frame().kind() == FrameKind::DintOp)
    return SpaceDescriptor::builtin("dint");
  fail("NoDual", "no registered de Groot dual for '" + space.name() + "'");
}

PatchReport patch(const SpaceDescriptor& space) {
  PatchReport rep;
  if (space.is_tier1()) {
    rep.kind = "discrete";
    rep.points = space.points()->labels();
    rep.basis = "all singletons (opens and complements of compact saturated "
                "sets separate the points)";
    return rep;
  }
  rep.kind = "interval";
  rep.basis =
      "rational open intervals (q,q') together with [0,q') and (q,1]; the "
      "standard topology on [0,1]";
  return rep;
}

NachbinSpace to_nachbin(const SpaceDescriptor& space) {
  if (!space.is_tier1())
    fail("TierUnsupported", "Nachbin round-trip is defined for Tier-1 spaces");
  return NachbinSpace{space.points()};
}

SpaceDescriptor from_nachbin(const NachbinSpace& nachbin) {
  return SpaceDescriptor::finite(nachbin.points);
}

std::vector<std::uint64_t> compact_saturated_sets(
    const SpaceDescriptor& space) {
  if (!space.is_tier1())
    fail("TierUnsupported",
         "built-in spaces expose parametric compact saturated families");
  const auto& lattice = space.frame().lattice();
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < lattice.size(); ++i)
    out.push_back(lattice.mask(i));
  std::sort(out.begin(), out.end());
  return out;
}

std::string DintCompactSaturated::str() const {
  switch (kind) {
    case Kind::Empty:
      return "empty";
    case Kind::ClosedUp:
      return "closedup:" + rat_str(r);
    case Kind::Whole:
      return "whole";
  }
  return "?";
}

bool dint_ksat_below(const DintCompactSaturated& k,
                     const DintCompactSaturated& l) {
  using K = DintCompactSaturated::Kind;
  if (k.kind == K::Empty) return true;           // bot open fits between
  if (l.kind == K::Whole) return true;           // top open fits between
  if (k.kind == K::Whole) return false;          // only top contains [0,1]
  if (l.kind == K::Empty) return false;
  return l.r < k.r;  // some rational q with l.r <= q < k.r gives (q,1]
}

PerfectReport perfect_check(const MonotoneMap& map) {
  PerfectReport rep;
  rep.continuous = is_monotone(map);
  if (!rep.continuous)
    fail("NotContinuous",
         "preimages of opens are opens exactly for monotone maps");
  SpaceDescriptor src = SpaceDescriptor::finite(map.source);
  SpaceDescriptor tgt = SpaceDescriptor::finite(map.target);
  // Criterion 1: preimages of compact saturated (= upper) sets are compact
  // saturated. On finite carriers compactness is automatic; saturation is
  // the honest check.
  rep.preimage_criterion = true;
  for (std::uint64_t k : compact_saturated_sets(tgt)) {
    std::uint64_t pre = 0;
    for (std::size_t p = 0; p < map.source->size(); ++p)
      if ((k >> map.apply(p)) & 1u) pre |= 1ull << p;
    if (!map.source->is_upset(pre)) rep.preimage_criterion = false;
  }
  // Criterion 2: the frame hom U -> f^{-1}(U) preserves way-below.
  const auto& ls = src.frame().lattice();
  const auto& lt = tgt.frame().lattice();
  std::vector<std::size_t> table(lt.size());
  for (std::size_t u = 0; u < lt.size(); ++u) {
    std::uint64_t pre = 0;
    for (std::size_t p = 0; p < map.source->size(); ++p)
      if ((lt.mask(u) >> map.apply(p)) & 1u) pre |= 1ull << p;
    auto idx = ls.index_of_mask(pre);
    if (!idx) fail("NotContinuous", "preimage of an open is not open");
    table[u] = *idx;
  }
  FrameHom hom = FrameHom::tier1_table(tgt.frame(), src.frame(), table);
  rep.hom_criterion = preserves_way_below(hom);
  rep.agree = rep.preimage_criterion == rep.hom_criterion;
  rep.perfect = rep.preimage_criterion;
  rep.detail = "finite carrier: preimages of upper sets are compact";
  return rep;
}

PerfectReport perfect_check_dint(const std::string& registered_name) {
  PerfectReport rep;
  FrameHom hom = FrameHom::registered(registered_name);
  rep.continuous = true;  // registered homs are frame homs by construction
  rep.hom_criterion = preserves_way_below(hom);
  // Preimage of [r,1] under the space map realizing the hom, from the
  // registered parameter action g: the preimage is an intersection of
  // preimages of opens, compact exactly when it is a closed-up interval.
  rep.preimage_criterion = true;
  std::string witness;
  auto grid = Frame::builtin("dint").basis_sample(8);
  for (const auto& e : grid) {
    if (e.tag != FrameElem::Tag::Up || e.q == 0) continue;
    const Rat r = e.q;  // the compact saturated set [r,1]
    bool compact_preimage;
    if (registered_name == "id") {
      compact_preimage = true;
    } else if (registered_name == "square") {
      compact_preimage = true;  // preimage [r^2, 1]
    } else if (registered_name == "halve") {
      compact_preimage = true;  // preimage [r/2, 1]
    } else {
      // step:c collapses (c,1] onto 1 and the rest onto 0; the preimage of
      // [r,1] for r > 0 is the non-compact open (c,1].
      compact_preimage = false;
      witness = "preimage of closedup:" + rat_str(r) + " is the open (c,1]";
    }
    if (!compact_preimage) rep.preimage_criterion = false;
  }
  rep.agree = rep.preimage_criterion == rep.hom_criterion;
  rep.perfect = rep.preimage_criterion;
  rep.detail = witness.empty() ? "closed-up preimages computed from the "
                                 "registered parameter action"
                               : witness;
  return rep;
}

}  // namespace sck
