#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sck/error.hpp"
#include "sck/json_io.hpp"
#include "sck/presheaf.hpp"

using namespace sck;

namespace {

PosetPtr antichain2() {
  return std::make_shared<FinitePoset>(
      FinitePoset::from_covers({"x", "y"}, {}));
}

PosetPtr chain2() {
  return std::make_shared<FinitePoset>(
      FinitePoset::from_covers({"a", "b"}, {{"a", "b"}}));
}

/// Product presheaf on the 2-antichain space: F({x}) = s, F({y}) = t,
/// F(top) = s × t. Excisive by construction.
SetPresheaf product_presheaf(std::vector<std::string> s,
                             std::vector<std::string> t) {
  SpaceDescriptor space = SpaceDescriptor::finite(antichain2());
  const auto& l = space.frame().lattice();
  const std::size_t bot = l.index_of_id(""), ux = l.index_of_id("x"),
                    uy = l.index_of_id("y"), top = l.index_of_id("x,y");
  std::vector<std::vector<std::string>> values(4);
  values[bot] = {"*"};
  values[ux] = s;
  values[uy] = t;
  for (const auto& a : s)
    for (const auto& b : t) values[top].push_back(a + b);
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> res;
  std::vector<std::size_t> to_x, to_y;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) {
      to_x.push_back(i);
      to_y.push_back(j);
    }
  res[{top, ux}] = to_x;
  res[{top, uy}] = to_y;
  res[{top, bot}] = std::vector<std::size_t>(s.size() * t.size(), 0);
  res[{ux, bot}] = std::vector<std::size_t>(s.size(), 0);
  res[{uy, bot}] = std::vector<std::size_t>(t.size(), 0);
  return SetPresheaf::make(space, std::move(values), std::move(res));
}

JumpPresheaf spec_jump() {
  // singleton for q <= 1/3, a two-element set above
  return JumpPresheaf::make({Rat(1, 3)}, {{"*"}, {"s0", "s1"}}, {{0}});
}

}  // namespace

TEST_CASE("excision on the 2-antichain space") {
  auto good = product_presheaf({"a", "b"}, {"c"});
  CHECK(is_excisive(good).ok);

  // break the cardinality: top too small to be the product
  SpaceDescriptor space = SpaceDescriptor::finite(antichain2());
  const auto& l = space.frame().lattice();
  std::vector<std::vector<std::string>> values(4);
  values[l.index_of_id("")] = {"*"};
  values[l.index_of_id("x")] = {"a", "b"};
  values[l.index_of_id("y")] = {"c", "d"};
  values[l.index_of_id("x,y")] = {"w"};
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> res;
  res[{l.index_of_id("x,y"), l.index_of_id("x")}] = {0};
  res[{l.index_of_id("x,y"), l.index_of_id("y")}] = {0};
  auto bad = SetPresheaf::make(space, std::move(values), std::move(res));
  CHECK_FALSE(is_excisive(bad).ok);
}

TEST_CASE("chain spaces are excisive once the empty open is a singleton") {
  SpaceDescriptor space = SpaceDescriptor::finite(chain2());
  const auto& l = space.frame().lattice();
  std::vector<std::vector<std::string>> values(3);
  values[l.index_of_id("")] = {"*"};
  values[l.index_of_id("b")] = {"u", "v"};
  values[l.index_of_id("a,b")] = {"p", "q", "r"};
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> res;
  res[{l.index_of_id("a,b"), l.index_of_id("b")}] = {0, 1, 1};
  auto f = SetPresheaf::make(space, std::move(values), std::move(res));
  CHECK(is_excisive(f).ok);
}

TEST_CASE("sheafify_at is the identity on Tier-1") {
  auto f = product_presheaf({"a", "b"}, {"c", "d"});
  const auto& l = f.space().frame().lattice();
  for (std::size_t u = 0; u < l.size(); ++u) {
    auto out = sheafify_at(f, u);
    CHECK(out.bijective);
    CHECK(out.limit.size() == f.at(u).size());
  }
}

TEST_CASE("sheafify_at on the dint jump example") {
  auto f = spec_jump();
  SUBCASE("non-bijective exactly at the threshold") {
    auto at_threshold = sheafify_at_dint(f, FrameElem::up(Rat(1, 3)));
    CHECK(at_threshold.limit == std::vector<std::string>{"s0", "s1"});
    CHECK_FALSE(at_threshold.bijective);
  }
  SUBCASE("bijective away from the threshold") {
    CHECK(sheafify_at_dint(f, FrameElem::up(Rat(1, 2))).bijective);
    CHECK(sheafify_at_dint(f, FrameElem::up(Rat(1, 4))).bijective);
    CHECK(sheafify_at_dint(f, FrameElem::bot()).bijective);
    CHECK(sheafify_at_dint(f, FrameElem::top()).bijective);
  }
  SUBCASE("idempotence: a presheaf with no jumps is fixed") {
    auto constant = JumpPresheaf::make({}, {{"c0", "c1"}}, {});
    for (const Rat& q : {Rat(0), Rat(1, 3), Rat(7, 8)})
      CHECK(sheafify_at_dint(constant, FrameElem::up(q)).bijective);
  }
}

TEST_CASE("compactness of basis inclusions under filtered colimits") {
  // F(up(q')) -> colim of a filtered family of jump presheaves factors
  // through a finite stage: with eventually-stable values the colimit at a
  // fixed open is reached at a finite index.
  std::vector<JumpPresheaf> family;
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::string> grown;
    for (int i = 0; i < n; ++i) grown.push_back("g" + std::to_string(i));
    family.push_back(JumpPresheaf::make({Rat(1, 2)}, {{"*"}, grown},
                                        {std::vector<std::size_t>{0}}));
  }
  // at up(3/4) the values stabilize... they grow; the *maps* from a fixed
  // stage factor: every element of stage n maps to stage n+1 by inclusion
  // index, so a map out of the basis element up(3/4) at stage n is already
  // present at stage n
  for (std::size_t n = 0; n + 1 < family.size(); ++n) {
    const auto& now = family[n].region_value(1);
    const auto& next = family[n + 1].region_value(1);
    CHECK(std::includes(next.begin(), next.end(), now.begin(), now.end()));
  }
}

TEST_CASE("flachsmeyer image condition") {
  SUBCASE("pullbacks satisfy it") {
    auto g = GammaJumpPresheaf::pullback(spec_jump());
    auto rep = flachsmeyer_image_check(g, 6);
    CHECK(rep.ok);
  }
  SUBCASE("separating the cut types breaks it") {
    // all open cuts carry {b}, all closed cuts carry {a0, a1}; the germ from
    // the open side cannot be bijective onto the closed value
    auto g = GammaJumpPresheaf::make(
        {Rat(1, 2)}, {"t"}, {0}, {{"r0"}, {"r1"}}, {{"a0", "a1"}}, {{"b"}},
        {{0}}, {{0, 0}}, {{0}});
    auto rep = flachsmeyer_image_check(g, 4);
    CHECK_FALSE(rep.ok);
    bool threshold_fails = false;
    for (auto& [name, ok] : rep.per_open)
      if (name == "up:1/2" && !ok) threshold_fails = true;
    CHECK(threshold_fails);
  }
  SUBCASE("constant singleton passes") {
    auto g = GammaJumpPresheaf::pullback(
        JumpPresheaf::make({}, {{"*"}}, {}));
    CHECK(flachsmeyer_image_check(g, 4).ok);
  }
}

TEST_CASE("k-sheaf condition") {
  auto f = spec_jump();
  SUBCASE("constant presheaf") {
    auto constant = JumpPresheaf::make({}, {{"c"}}, {});
    CHECK(k_sheaf_check(constant, DintCompactSaturated::closed_up(Rat(1, 2)))
              .ok);
    CHECK(k_sheaf_check(constant, DintCompactSaturated::whole()).ok);
    CHECK(k_sheaf_check(constant, DintCompactSaturated::empty()).ok);
  }
  SUBCASE("jump presheaf at the spec sample point") {
    auto rep = k_sheaf_check(f, DintCompactSaturated::closed_up(Rat(1, 3)));
    CHECK(rep.ok);
    // sections from outside [1/3,1]: opens (q,1] with q < 1/3 carry the
    // singleton, so the germ is the singleton
    CHECK(rep.sections == std::vector<std::string>{"*"});
  }
  SUBCASE("above the threshold the sections jump") {
    auto rep = k_sheaf_check(f, DintCompactSaturated::closed_up(Rat(1, 2)));
    CHECK(rep.ok);
    CHECK(rep.sections == std::vector<std::string>{"s0", "s1"});
  }
  SUBCASE("adversarial assignment fails at its threshold") {
    KSatAssignment bad;
    bad.thresholds = {Rat(1, 2)};
    bad.values = {{"a"}, {"b0", "b1"}};
    bad.maps = {{0}};
    CHECK_FALSE(
        k_sheaf_check_assignment(bad, DintCompactSaturated::closed_up(Rat(1, 2)))
            .ok);
    CHECK(k_sheaf_check_assignment(bad,
                                   DintCompactSaturated::closed_up(Rat(1, 4)))
              .ok);
    CHECK(k_sheaf_check_assignment(bad,
                                   DintCompactSaturated::closed_up(Rat(3, 4)))
              .ok);
  }
}

TEST_CASE("sheafification commutes with finite products of presheaves") {
  auto f = product_presheaf({"a", "b"}, {"c"});
  auto g = product_presheaf({"u"}, {"v", "w"});
  const auto& l = f.space().frame().lattice();
  // product presheaf
  std::vector<std::vector<std::string>> values(l.size());
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> res;
  for (std::size_t u = 0; u < l.size(); ++u)
    for (const auto& a : f.at(u))
      for (const auto& b : g.at(u)) values[u].push_back(a + "|" + b);
  for (std::size_t u = 0; u < l.size(); ++u)
    for (std::size_t v = 0; v < l.size(); ++v) {
      if (u == v || !l.le(v, u)) continue;
      std::vector<std::size_t> table;
      for (std::size_t i = 0; i < f.at(u).size(); ++i)
        for (std::size_t j = 0; j < g.at(u).size(); ++j)
          table.push_back(f.restrict_elem(u, v, i) * g.at(v).size() +
                          g.restrict_elem(u, v, j));
      res[{u, v}] = std::move(table);
    }
  auto fg = SetPresheaf::make(f.space(), std::move(values), std::move(res));
  for (std::size_t u = 0; u < l.size(); ++u) {
    auto lhs = sheafify_at(fg, u);
    auto rhs_f = sheafify_at(f, u);
    auto rhs_g = sheafify_at(g, u);
    CHECK(lhs.limit.size() == rhs_f.limit.size() * rhs_g.limit.size());
    CHECK(lhs.bijective == (rhs_f.bijective && rhs_g.bijective));
  }
}

TEST_CASE("presheaf JSON round trip") {
  Json doc = {
      {"space",
       {{"tier", "finite"},
        {"poset",
         {{"elements", {"a", "b"}}, {"covers", {{"a", "b"}}}}}}},
      {"values",
       {{"", {"*"}}, {"b", {"u", "v"}}, {"a,b", {"p", "q", "r"}}}},
      {"restrictions", {{"a,b>b", {{"p", "u"}, {"q", "v"}, {"r", "v"}}}}}};
  auto f = set_presheaf_from_json(doc);
  CHECK(is_excisive(f).ok);
  auto jump = jump_presheaf_from_json(
      {{"thresholds", {"1/3"}},
       {"values", {{"*"}, {"s0", "s1"}}},
       {"maps", {{{"*", "s0"}}}}});
  CHECK(jump.region_of(Rat(1, 4)) == 0);
  CHECK(jump.region_right_of(Rat(1, 3)) == 1);
}
