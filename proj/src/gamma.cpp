#include "sck/gamma.hpp"

#include <algorithm>

#include "sck/error.hpp"

namespace sck {

std::string ClassifiedIdeal::str(const Frame& frame) const {
  switch (form) {
    case Form::Principal:
      return "principal:" + frame.elem_str(principal);
    case Form::Bottom:
      return "bottom";
    case Form::OpenCut:
      return "open-cut:" + rat_str(r);
    case Form::ClosedCut:
      return "closed-cut:" + rat_str(r);
    case Form::All:
      return "all";
  }
  return "?";
}

FrameElem ideal_join(const Frame& frame, const ClassifiedIdeal& ideal) {
  switch (ideal.form) {
    case ClassifiedIdeal::Form::Principal:
      return ideal.principal;
    case ClassifiedIdeal::Form::Bottom:
      return frame.bottom();
    case ClassifiedIdeal::Form::OpenCut:
    case ClassifiedIdeal::Form::ClosedCut:
      return frame.kind() == FrameKind::DintOp ? FrameElem::down(ideal.r)
                                               : FrameElem::up(ideal.r);
    case ClassifiedIdeal::Form::All:
      return frame.top();
  }
  return frame.bottom();
}

FlachsmeyerResult flachsmeyer(const Frame& frame) {
  switch (frame.kind()) {
    case FrameKind::Finite:
      return {frame,
              "every ideal of a finite lattice is principal; the ideal frame "
              "is the isomorphic copy x -> principal:x (classification v" +
                  std::to_string(kClassificationVersion) + ")"};
    case FrameKind::Dint:
      return {Frame::gamma_dint(),
              "ideals of dint: bottom, open-cut:r, closed-cut:r (principal), "
              "all, with rational r (classification v" +
                  std::to_string(kClassificationVersion) + ")"};
    case FrameKind::Cofinite:
      return {frame,
              "every ideal of the cofinite frame is principal (a directed "
              "family of finite complements attains its intersection); the "
              "ideal frame is the isomorphic copy x -> principal:x "
              "(classification v" +
                  std::to_string(kClassificationVersion) + ")"};
    default:
      fail("NoClassification",
           "no registered ideal classification for '" + frame.name() + "'");
  }
}

ClassifiedIdeal section_ideal(const Frame& frame, const FrameElem& y) {
  ClassifiedIdeal out;
  switch (frame.kind()) {
    case FrameKind::Finite:
    case FrameKind::Cofinite:
      // way-below is <=; the section is the principal ideal.
      out.form = ClassifiedIdeal::Form::Principal;
      out.principal = y;
      return out;
    case FrameKind::Dint:
    case FrameKind::DintOp:
      if (y.tag == FrameElem::Tag::Bot) {
        out.form = ClassifiedIdeal::Form::Bottom;
      } else if (y.tag == FrameElem::Tag::Top) {
        out.form = ClassifiedIdeal::Form::All;
      } else {
        out.form = ClassifiedIdeal::Form::OpenCut;
        out.r = y.q;
      }
      return out;
    default:
      fail("NoClassification",
           "no registered ideal classification for '" + frame.name() + "'");
  }
}

namespace {

/// Inclusion of classified cut ideals; the cut parameter runs opposite ways
/// in dint and dint_op.
bool cut_ideal_le(const Frame& frame, const ClassifiedIdeal& a,
                  const ClassifiedIdeal& b) {
  using F = ClassifiedIdeal::Form;
  if (a.form == F::Bottom || b.form == F::All) return true;
  if (a.form == F::All) return false;
  if (b.form == F::Bottom) return false;
  const bool op = frame.kind() == FrameKind::DintOp;
  if (op ? a.r < b.r : a.r > b.r) return true;
  if (op ? a.r > b.r : a.r < b.r) return false;
  return a.form == F::OpenCut || b.form == F::ClosedCut;
}

}  // namespace

SectionCheck flachsmeyer_section(const Frame& frame) {
  auto rep = frame.stably_continuous();
  if (!rep.ok)
    fail("NotStablyContinuous", "frame fails stable continuity: " + rep.certificate);
  SectionCheck check;
  check.meets_ok = check.joins_ok = check.retract_ok = true;
  auto sample = frame.basis_sample(6);
  for (const auto& y : sample) {
    auto ideal = section_ideal(frame, y);
    check.samples.emplace_back(frame.elem_str(y), ideal.str(frame));
    if (!(ideal_join(frame, ideal) == y)) check.retract_ok = false;
  }
  // Finite meets and binary joins on the sampled fragment.
  const bool cuts =
      frame.kind() == FrameKind::Dint || frame.kind() == FrameKind::DintOp;
  auto ideal_le = [&](const ClassifiedIdeal& a, const ClassifiedIdeal& b) {
    if (cuts) return cut_ideal_le(frame, a, b);
    return frame.le(a.principal, b.principal);
  };
  auto ideal_eq = [&](const ClassifiedIdeal& a, const ClassifiedIdeal& b) {
    return ideal_le(a, b) && ideal_le(b, a);
  };
  for (const auto& y1 : sample)
    for (const auto& y2 : sample) {
      auto meet_img = section_ideal(frame, frame.meet(y1, y2));
      auto join_img = section_ideal(frame, frame.join(y1, y2));
      auto i1 = section_ideal(frame, y1);
      auto i2 = section_ideal(frame, y2);
      if (cuts) {
        // Chain of ideals: meet is the smaller, join the larger.
        auto meet_pair = ideal_le(i1, i2) ? i1 : i2;
        auto join_pair = ideal_le(i1, i2) ? i2 : i1;
        if (!ideal_eq(meet_img, meet_pair)) check.meets_ok = false;
        if (!ideal_eq(join_img, join_pair)) check.joins_ok = false;
      } else {
        // Principal ideals: intersection and generated join are principal on
        // the meet and join of the generators.
        if (!(meet_img.principal == frame.meet(i1.principal, i2.principal)))
          check.meets_ok = false;
        if (!(join_img.principal == frame.join(i1.principal, i2.principal)))
          check.joins_ok = false;
      }
    }
  return check;
}

Idealoid tier1_relation_idealoid(const Frame& frame, AuxRelation relation) {
  const auto& l = frame.lattice();
  if (l.size() > 64)
    fail("SizeLimitExceeded",
         "Tier-1 compactification needs a carrier of at most 64 elements");
  auto order = std::make_shared<FinitePoset>(l.order_poset());
  std::vector<std::uint64_t> rows(l.size(), 0);
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b) {
      bool related =
          relation == AuxRelation::WayBelow
              ? frame.way_below(FrameElem::t1(a), FrameElem::t1(b))
              : frame.rather_below(FrameElem::t1(a), FrameElem::t1(b))
                    .has_value();
      if (related) rows[a] |= 1ull << b;
    }
  return Idealoid::from_rows(std::move(order), std::move(rows), false);
}

CompactifyResult bm_compactify(const Frame& frame, AuxRelation relation) {
  const char* relname =
      relation == AuxRelation::RatherBelow ? "rather-below" : "way-below";
  switch (frame.kind()) {
    case FrameKind::Finite: {
      const auto& l = frame.lattice();
      Idealoid core = sd_core(tier1_relation_idealoid(frame, relation));
      // Ideals of a finite lattice are principal; the principal ideal of x
      // is restricted along the core exactly when (x, x) is in it.
      std::vector<std::size_t> keep;
      for (std::size_t x = 0; x < l.size(); ++x)
        if (core.contains(x, x)) keep.push_back(x);
      Frame out = Frame::tier1(l.sublattice(keep));
      return {std::move(out),
              std::string("restricted principal ideals along sd-core of ") +
                  relname + ": " + std::to_string(keep.size()) + " of " +
                  std::to_string(l.size()) + " elements survive"};
    }
    case FrameKind::Dint:
    case FrameKind::DintOp: {
      if (relation == AuxRelation::RatherBelow) {
        // Only the bottom ideal and the whole frame have rather-below
        // successors throughout; cut ideals are stuck at their basis
        // elements.
        auto pt = std::make_shared<FinitePoset>(
            FinitePoset::from_covers({"pt"}, {}));
        Frame two = Frame::tier1(FiniteLattice::downsets_of(pt, 4));
        return {std::move(two),
                "restricted ideals along sd-core of rather-below: bottom and "
                "all survive (the point)"};
      }
      // Way-below: the open cuts are exactly the restricted ideals, so the
      // construction reproduces the frame.
      return {Frame::builtin(frame.name()),
              "restricted ideals along sd-core of way-below: bottom, every "
              "open-cut:r and all survive; isomorphic copy of the input"};
    }
    case FrameKind::Cofinite: {
      if (relation == AuxRelation::WayBelow)
        return {Frame::builtin("cofinite"),
                "way-below is <=; every principal ideal is restricted, "
                "isomorphic copy of the input"};
      auto pt =
          std::make_shared<FinitePoset>(FinitePoset::from_covers({"pt"}, {}));
      Frame two = Frame::tier1(FiniteLattice::downsets_of(pt, 4));
      return {std::move(two),
              "restricted ideals along sd-core of rather-below: bottom and "
              "all survive (the point)"};
    }
    default:
      fail("NoClassification",
           "no registered ideal classification for '" + frame.name() + "'");
  }
}

VscReport very_schwartz_subframe(const Frame& frame) {
  VscReport rep;
  switch (frame.kind()) {
    case FrameKind::Finite: {
      const auto& l = frame.lattice();
      Idealoid core = sd_core(tier1_relation_idealoid(frame, AuxRelation::WayBelow));
      std::vector<std::size_t> carrier;
      for (std::size_t x = 0; x < l.size(); ++x)
        if (core.contains(x, x)) carrier.push_back(x);
      rep.covers_all = carrier.size() == l.size();
      for (std::size_t x : carrier) rep.elements.push_back(l.id(x));
      std::vector<bool> in(l.size(), false);
      for (std::size_t x : carrier) in[x] = true;
      rep.closed_meets = rep.closed_joins = true;
      for (std::size_t a : carrier)
        for (std::size_t b : carrier) {
          if (!in[l.meet(a, b)]) rep.closed_meets = false;
          if (!in[l.join(a, b)]) rep.closed_joins = false;
        }
      // Directed joins of a finite carrier reduce to binary joins.
      rep.closed_directed = rep.closed_joins;
      return rep;
    }
    case FrameKind::Dint:
    case FrameKind::DintOp:
      rep.covers_all = true;
      rep.family =
          "bottom (join of the bottom ideal), every basis element (join of "
          "its open cut, which is way-below restricted), top (join of the "
          "improper ideal)";
      rep.closed_meets = rep.closed_joins = rep.closed_directed = true;
      return rep;
    case FrameKind::Cofinite:
      rep.covers_all = true;
      rep.family =
          "algebraic case: way-below is <=, every principal ideal is "
          "restricted, all elements are reached";
      rep.closed_meets = rep.closed_joins = rep.closed_directed = true;
      return rep;
    default:
      fail("NoClassification",
           "no registered ideal classification for '" + frame.name() + "'");
  }
}

}  // namespace sck
