#include "sck/presheaf.hpp"

#include <algorithm>
#include <set>

#include "sck/error.hpp"

namespace sck {

SetPresheaf SetPresheaf::make(
    SpaceDescriptor space, std::vector<std::vector<std::string>> values,
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>>
        restrictions) {
  if (!space.is_tier1())
    fail("TierUnsupported", "set presheaves live on Tier-1 spaces");
  const auto& l = space.frame().lattice();
  if (values.size() != l.size())
    fail("ParseError", "need one value set per open");
  SetPresheaf f;
  f.space_ = std::move(space);
  f.values_ = std::move(values);
  f.res_ = std::move(restrictions);
  for (std::size_t u = 0; u < l.size(); ++u)
    for (std::size_t v = 0; v < l.size(); ++v) {
      if (u == v || !l.le(v, u)) continue;
      auto it = f.res_.find({u, v});
      if (it == f.res_.end())
        fail("ParseError", "missing restriction " + l.id(u) + " > " + l.id(v));
      if (it->second.size() != f.values_[u].size())
        fail("ParseError", "restriction table size mismatch at " + l.id(u));
      for (std::size_t x : it->second)
        if (x >= f.values_[v].size())
          fail("ParseError", "restriction lands outside the target set");
    }
  // functoriality: res[U->W] = res[V->W] ∘ res[U->V]
  for (std::size_t u = 0; u < l.size(); ++u)
    for (std::size_t v = 0; v < l.size(); ++v)
      for (std::size_t w = 0; w < l.size(); ++w) {
        if (!(l.le(w, v) && l.le(v, u))) continue;
        if (u == v || v == w) continue;
        for (std::size_t x = 0; x < f.values_[u].size(); ++x)
          if (f.restrict_elem(u, w, x) !=
              f.restrict_elem(v, w, f.restrict_elem(u, v, x)))
            fail("ParseError", "restrictions do not compose at " + l.id(u) +
                                   " > " + l.id(v) + " > " + l.id(w));
      }
  return f;
}

std::size_t SetPresheaf::restrict_elem(std::size_t open_u, std::size_t open_v,
                                       std::size_t elem) const {
  if (open_u == open_v) return elem;
  return res_.at({open_u, open_v})[elem];
}

ExcisiveReport is_excisive(const SetPresheaf& presheaf) {
  const auto& l = presheaf.space().frame().lattice();
  ExcisiveReport rep;
  if (presheaf.at(l.bottom()).size() != 1) {
    rep.counterexample = "the empty open does not carry a singleton";
    return rep;
  }
  for (std::size_t u = 0; u < l.size(); ++u)
    for (std::size_t v = 0; v < l.size(); ++v) {
      const std::size_t uv = l.join(u, v), iv = l.meet(u, v);
      // pullback of F(U) -> F(U∩V) <- F(V)
      std::vector<std::pair<std::size_t, std::size_t>> pullback;
      for (std::size_t s = 0; s < presheaf.at(u).size(); ++s)
        for (std::size_t t = 0; t < presheaf.at(v).size(); ++t)
          if (presheaf.restrict_elem(u, iv, s) ==
              presheaf.restrict_elem(v, iv, t))
            pullback.emplace_back(s, t);
      std::set<std::pair<std::size_t, std::size_t>> image;
      for (std::size_t w = 0; w < presheaf.at(uv).size(); ++w)
        if (!image
                 .insert({presheaf.restrict_elem(uv, u, w),
                          presheaf.restrict_elem(uv, v, w)})
                 .second) {
          rep.counterexample = "square at (" + l.id(u) + ", " + l.id(v) +
                               ") is not injective into the pullback";
          return rep;
        }
      if (image.size() != pullback.size()) {
        rep.counterexample =
            "square at (" + l.id(u) + ", " + l.id(v) + ") is not cartesian";
        return rep;
      }
    }
  rep.ok = true;
  return rep;
}

SheafifyResult sheafify_at(const SetPresheaf& presheaf, std::size_t open) {
  auto exc = is_excisive(presheaf);
  if (!exc.ok) fail("NotExcisive", exc.counterexample);
  const auto& frame = presheaf.space().frame();
  const auto& l = frame.lattice();
  // Index poset {V : V way-below U}; on a finite frame way-below is <=, so U
  // itself is terminal, but the limit is computed honestly.
  std::vector<std::size_t> index;
  for (std::size_t v = 0; v < l.size(); ++v)
    if (frame.way_below(FrameElem::t1(v), FrameElem::t1(open)))
      index.push_back(v);
  // Compatible families over the index poset.
  std::vector<std::vector<std::size_t>> families;
  std::vector<std::size_t> current(index.size(), 0);
  std::size_t combinations = 1;
  bool overflow = false;
  for (std::size_t v : index) {
    combinations *= std::max<std::size_t>(presheaf.at(v).size(), 1);
    if (combinations > 2000000) overflow = true;
  }
  if (overflow) fail("SizeLimitExceeded", "limit computation too large");
  std::size_t total = combinations;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    for (std::size_t i = 0; i < index.size(); ++i) {
      const std::size_t n = std::max<std::size_t>(presheaf.at(index[i]).size(), 1);
      current[i] = rest % n;
      rest /= n;
    }
    bool compatible = true;
    for (std::size_t i = 0; i < index.size() && compatible; ++i)
      for (std::size_t j = 0; j < index.size(); ++j) {
        if (!l.le(index[j], index[i])) continue;
        if (presheaf.restrict_elem(index[i], index[j], current[i]) !=
            current[j]) {
          compatible = false;
          break;
        }
      }
    if (compatible) families.push_back(current);
  }
  SheafifyResult out;
  for (const auto& fam : families) {
    std::string name = "(";
    for (std::size_t i = 0; i < index.size(); ++i) {
      if (i) name += ",";
      name += presheaf.at(index[i])[fam[i]];
    }
    name += ")";
    out.limit.push_back(name);
  }
  // comparison: s in F(U) maps to the family (s|V)_V
  std::set<std::size_t> hit;
  for (std::size_t s = 0; s < presheaf.at(open).size(); ++s) {
    std::vector<std::size_t> fam(index.size());
    for (std::size_t i = 0; i < index.size(); ++i)
      fam[i] = presheaf.restrict_elem(open, index[i], s);
    auto it = std::find(families.begin(), families.end(), fam);
    if (it == families.end())
      fail("NotExcisive", "restriction family escapes the computed limit");
    out.comparison.push_back(
        static_cast<std::size_t>(it - families.begin()));
    hit.insert(out.comparison.back());
  }
  out.bijective = hit.size() == out.comparison.size() &&
                  hit.size() == out.limit.size();
  return out;
}

JumpPresheaf JumpPresheaf::make(std::vector<Rat> thresholds,
                                std::vector<std::vector<std::string>> values,
                                std::vector<std::vector<std::size_t>> maps) {
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    if (thresholds[i] < 0 || thresholds[i] >= 1)
      fail("OutOfRange", "thresholds live in [0,1)");
    if (i && !(thresholds[i - 1] < thresholds[i]))
      fail("ParseError", "thresholds must increase strictly");
  }
  if (values.size() != thresholds.size() + 1)
    fail("ParseError", "need one value set per threshold interval");
  if (maps.size() != thresholds.size())
    fail("ParseError", "need one transport map per threshold");
  for (std::size_t j = 0; j < maps.size(); ++j) {
    if (maps[j].size() != values[j].size())
      fail("ParseError", "transport table size mismatch");
    for (std::size_t x : maps[j])
      if (x >= values[j + 1].size())
        fail("ParseError", "transport lands outside the target set");
  }
  for (const auto& v : values)
    if (v.empty()) fail("ParseError", "value sets must be nonempty");
  JumpPresheaf f;
  f.thresholds_ = std::move(thresholds);
  f.values_ = std::move(values);
  f.maps_ = std::move(maps);
  return f;
}

std::size_t JumpPresheaf::region_of(const Rat& q) const {
  std::size_t r = 0;
  for (const Rat& t : thresholds_)
    if (t < q) ++r;
  return r;
}

std::size_t JumpPresheaf::region_right_of(const Rat& q) const {
  std::size_t r = 0;
  for (const Rat& t : thresholds_)
    if (t <= q) ++r;
  return r;
}

std::vector<std::size_t> JumpPresheaf::transport(std::size_t i,
                                                 std::size_t j) const {
  std::vector<std::size_t> out(values_[i].size());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = x;
  for (std::size_t k = i; k < j; ++k)
    for (std::size_t x = 0; x < out.size(); ++x) out[x] = maps_[k][out[x]];
  return out;
}

SheafifyResult sheafify_at_dint(const JumpPresheaf& presheaf,
                                const FrameElem& open) {
  SheafifyResult out;
  auto copy_identity = [&](const std::vector<std::string>& set) {
    out.limit = set;
    for (std::size_t i = 0; i < set.size(); ++i) out.comparison.push_back(i);
    out.bijective = true;
  };
  if (open.tag == FrameElem::Tag::Bot) {
    copy_identity({"*"});
    return out;
  }
  if (open.tag == FrameElem::Tag::Top) {
    // top is way-below top, so the index poset has a terminal object.
    copy_identity(presheaf.region_value(0));
    return out;
  }
  const Rat q = open.q;
  const std::size_t here = presheaf.region_of(q);
  const std::size_t right = presheaf.region_right_of(q);
  out.limit = presheaf.region_value(right);
  out.comparison = presheaf.transport(here, right);
  std::set<std::size_t> hit(out.comparison.begin(), out.comparison.end());
  out.bijective = hit.size() == out.comparison.size() &&
                  hit.size() == out.limit.size();
  return out;
}

GammaJumpPresheaf GammaJumpPresheaf::make(
    std::vector<Rat> thresholds, std::vector<std::string> all_value,
    std::vector<std::size_t> all_map,
    std::vector<std::vector<std::string>> region_values,
    std::vector<std::vector<std::string>> closed_at,
    std::vector<std::vector<std::string>> open_at,
    std::vector<std::vector<std::size_t>> map_in,
    std::vector<std::vector<std::size_t>> map_mid,
    std::vector<std::vector<std::size_t>> map_out) {
  const std::size_t k = thresholds.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (thresholds[i] < 0 || thresholds[i] >= 1)
      fail("OutOfRange", "cut thresholds live in [0,1)");
    if (i && !(thresholds[i - 1] < thresholds[i]))
      fail("ParseError", "cut thresholds must increase strictly");
  }
  if (region_values.size() != k + 1 || closed_at.size() != k ||
      open_at.size() != k || map_in.size() != k || map_mid.size() != k ||
      map_out.size() != k)
    fail("ParseError", "gamma presheaf table sizes inconsistent");
  auto check_map = [](const std::vector<std::size_t>& m,
                      const std::vector<std::string>& src,
                      const std::vector<std::string>& dst) {
    if (m.size() != src.size())
      fail("ParseError", "gamma transport size mismatch");
    for (std::size_t x : m)
      if (x >= dst.size())
        fail("ParseError", "gamma transport lands outside the target");
  };
  check_map(all_map, all_value, region_values[0]);
  for (std::size_t i = 0; i < k; ++i) {
    check_map(map_in[i], region_values[i], closed_at[i]);
    check_map(map_mid[i], closed_at[i], open_at[i]);
    check_map(map_out[i], open_at[i], region_values[i + 1]);
  }
  GammaJumpPresheaf g;
  g.thresholds_ = std::move(thresholds);
  g.all_value_ = std::move(all_value);
  g.all_map_ = std::move(all_map);
  g.region_values_ = std::move(region_values);
  g.closed_at_ = std::move(closed_at);
  g.open_at_ = std::move(open_at);
  g.map_in_ = std::move(map_in);
  g.map_mid_ = std::move(map_mid);
  g.map_out_ = std::move(map_out);
  return g;
}

GammaJumpPresheaf GammaJumpPresheaf::pullback(const JumpPresheaf& f) {
  // ClosedCut(q) takes F(up(q)); OpenCut(r) takes the value just right of r.
  // At a threshold t of F this makes ClosedCut(t) carry the left interval
  // value and OpenCut(t) the right one, with the original jump map between.
  std::vector<Rat> ts = f.thresholds();
  std::vector<std::vector<std::string>> region_values, closed_at, open_at;
  std::vector<std::vector<std::size_t>> map_in, map_mid, map_out;
  auto identity_on = [](const std::vector<std::string>& s) {
    std::vector<std::size_t> id(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) id[i] = i;
    return id;
  };
  for (std::size_t j = 0; j <= ts.size(); ++j)
    region_values.push_back(f.region_value(j));
  for (std::size_t j = 0; j < ts.size(); ++j) {
    closed_at.push_back(f.region_value(j));
    open_at.push_back(f.region_value(j + 1));
    map_in.push_back(identity_on(f.region_value(j)));
    map_mid.push_back(f.transport(j, j + 1));
    map_out.push_back(identity_on(f.region_value(j + 1)));
  }
  return make(std::move(ts), f.region_value(0), identity_on(f.region_value(0)),
              std::move(region_values), std::move(closed_at),
              std::move(open_at), std::move(map_in), std::move(map_mid),
              std::move(map_out));
}

std::size_t GammaJumpPresheaf::region_of(const Rat& r) const {
  std::size_t out = 0;
  for (const Rat& t : thresholds_)
    if (t < r) ++out;
  return out;
}

const std::vector<std::string>& GammaJumpPresheaf::value_at(
    const FrameElem& cut) const {
  using Tag = FrameElem::Tag;
  switch (cut.tag) {
    case Tag::CutBottom:
      return bottom_value_;
    case Tag::CutAll:
      return all_value_;
    case Tag::ClosedCut:
    case Tag::OpenCut: {
      for (std::size_t i = 0; i < thresholds_.size(); ++i)
        if (thresholds_[i] == cut.q)
          return cut.tag == Tag::ClosedCut ? closed_at_[i] : open_at_[i];
      return region_values_[region_of(cut.q)];
    }
    default:
      fail("UnknownElement", "not a cut element");
  }
}

std::pair<std::vector<std::string>, std::vector<std::size_t>>
GammaJumpPresheaf::left_germ_into_closed(const Rat& q) const {
  // The germ over OpenCut(r) as r increases to q is the region value of the
  // open region just left of q; transport it down the chain into
  // ClosedCut(q).
  std::size_t germ_region = region_of(q);
  std::vector<std::size_t> acc(region_values_[germ_region].size());
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = i;
  auto apply = [&](const std::vector<std::size_t>& m) {
    for (auto& x : acc) x = m[x];
  };
  // Walk regions and thresholds from germ_region until ClosedCut(q).
  for (std::size_t i = germ_region; i < thresholds_.size(); ++i) {
    if (thresholds_[i] > q) break;
    if (thresholds_[i] == q) {
      apply(map_in_[i]);
      return {region_values_[germ_region], acc};
    }
    apply(map_in_[i]);
    apply(map_mid_[i]);
    apply(map_out_[i]);
  }
  // q is not a threshold: ClosedCut(q) carries the region value itself.
  return {region_values_[germ_region], acc};
}

bool GammaJumpPresheaf::image_condition_at(const FrameElem& elem) const {
  using Tag = FrameElem::Tag;
  if (elem.tag == Tag::Bot || elem.tag == Tag::Top)
    return true;  // embedded as principal (compact) ideals
  auto [germ, map] = left_germ_into_closed(elem.q);
  const auto& target = value_at(FrameElem::closed_cut(elem.q));
  std::set<std::size_t> hit(map.begin(), map.end());
  return hit.size() == germ.size() && hit.size() == target.size();
}

ImageCheckReport flachsmeyer_image_check(const GammaJumpPresheaf& presheaf,
                                         unsigned max_denominator) {
  ImageCheckReport rep;
  rep.ok = true;
  auto sample = Frame::builtin("dint").basis_sample(max_denominator);
  std::vector<FrameElem> opens(sample.begin(), sample.end());
  for (const Rat& t : presheaf.thresholds())
    opens.push_back(FrameElem::up(t));
  for (const auto& open : opens) {
    bool here = presheaf.image_condition_at(open);
    rep.per_open.emplace_back(
        open.tag == FrameElem::Tag::Up ? "up:" + rat_str(open.q)
        : open.tag == FrameElem::Tag::Bot ? "bot" : "top",
        here);
    if (!here) rep.ok = false;
  }
  return rep;
}

std::vector<std::string> ksat_sections(const JumpPresheaf& presheaf,
                                       const DintCompactSaturated& k) {
  using K = DintCompactSaturated::Kind;
  switch (k.kind) {
    case K::Empty:
      return {"*"};
    case K::Whole:
      return presheaf.region_value(0);
    case K::ClosedUp:
      // germ over opens (q,1] ⊇ [r,1] as q increases to r
      return presheaf.region_value(presheaf.region_of(k.r));
  }
  return {};
}

KSheafReport k_sheaf_check(const JumpPresheaf& presheaf,
                           const DintCompactSaturated& k) {
  using K = DintCompactSaturated::Kind;
  KSheafReport rep;
  rep.sections = ksat_sections(presheaf, k);
  if (k.kind != K::ClosedUp) {
    rep.ok = true;  // K itself is minimal among L >>' K
    rep.detail = "trivial: K is way-below itself in the coframe";
    return rep;
  }
  // germ of F̂([s,1]) as s increases to r, compared with F̂([r,1]).
  const std::size_t germ_region = presheaf.region_of(k.r);
  auto germ = presheaf.region_value(germ_region);
  auto transport = presheaf.transport(germ_region, germ_region);
  std::set<std::size_t> hit(transport.begin(), transport.end());
  rep.ok = germ.size() == rep.sections.size() && hit.size() == germ.size();
  rep.detail = "germ over [s,1], s below " + rat_str(k.r) + ", is " +
               std::to_string(germ.size()) + " sections";
  return rep;
}

KSheafReport k_sheaf_check_assignment(const KSatAssignment& assignment,
                                      const DintCompactSaturated& k) {
  KSheafReport rep;
  if (assignment.values.size() != assignment.thresholds.size() + 1 ||
      assignment.maps.size() != assignment.thresholds.size())
    fail("ParseError", "assignment table sizes inconsistent");
  auto region = [&](const Rat& r, bool left_closed) {
    std::size_t out = 0;
    for (const Rat& t : assignment.thresholds)
      if (left_closed ? t <= r : t < r) ++out;
    return out;
  };
  using K = DintCompactSaturated::Kind;
  if (k.kind != K::ClosedUp) {
    rep.ok = true;
    rep.sections = k.kind == K::Empty ? std::vector<std::string>{"*"}
                                      : assignment.values[0];
    rep.detail = "trivial: K is way-below itself in the coframe";
    return rep;
  }
  const std::size_t here = region(k.r, true);   // left-closed regions
  const std::size_t left = region(k.r, false);  // germ from below
  rep.sections = assignment.values[here];
  std::vector<std::size_t> acc(assignment.values[left].size());
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = i;
  for (std::size_t j = left; j < here; ++j)
    for (auto& x : acc) x = assignment.maps[j][x];
  std::set<std::size_t> hit(acc.begin(), acc.end());
  rep.ok = hit.size() == assignment.values[left].size() &&
           hit.size() == rep.sections.size();
  rep.detail = left == here
                   ? "stabilized below the threshold"
                   : "assignment jumps at " + rat_str(k.r) +
                         "; germ and value differ";
  return rep;
}

}  // namespace sck
