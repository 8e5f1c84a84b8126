#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sck/enumerate.hpp"
#include "sck/error.hpp"
#include "sck/verdier.hpp"

using namespace sck;

namespace {

PosetPtr one_point() {
  return std::make_shared<FinitePoset>(FinitePoset::from_covers({"x"}, {}));
}

PosetPtr two_discrete() {
  return std::make_shared<FinitePoset>(
      FinitePoset::from_covers({"x", "y"}, {}));
}

PosetPtr sierpinski_points() {
  return std::make_shared<FinitePoset>(
      FinitePoset::from_covers({"a", "b"}, {{"a", "b"}}));
}

RationalComplex one_dim(int degree) {
  return RationalComplex::from_parts({{degree, 1}}, {});
}

/// Skyscraper-sum sheaf: F(U) = ⊕_{x in U} C_x with projection restrictions.
ComplexSheaf skyscraper_sum(PosetPtr points,
                            const std::vector<RationalComplex>& stalks) {
  SpaceDescriptor space = SpaceDescriptor::finite(points);
  const auto& l = space.frame().lattice();
  std::vector<RationalComplex> values;
  for (std::size_t u = 0; u < l.size(); ++u) {
    RationalComplex acc = RationalComplex::zero();
    for (std::size_t x = 0; x < points->size(); ++x)
      if ((l.mask(u) >> x) & 1u) acc = direct_sum(acc, stalks[x]);
    values.push_back(acc);
  }
  std::map<std::pair<std::size_t, std::size_t>, std::map<int, Matrix>> res;
  for (std::size_t u = 0; u < l.size(); ++u)
    for (std::size_t v = 0; v < l.size(); ++v) {
      if (u == v || !l.le(v, u)) continue;
      std::map<int, Matrix> mats;
      // projection: rows = v-block layout, cols = u-block layout
      for (int deg = -4; deg <= 4; ++deg) {
        std::size_t rows = 0, cols = 0;
        for (std::size_t x = 0; x < points->size(); ++x) {
          if ((l.mask(v) >> x) & 1u) rows += stalks[x].dim(deg);
          if ((l.mask(u) >> x) & 1u) cols += stalks[x].dim(deg);
        }
        if (rows == 0 || cols == 0) continue;
        Matrix m = zero_matrix(rows, cols);
        std::size_t roff = 0, coff = 0;
        for (std::size_t x = 0; x < points->size(); ++x) {
          const std::size_t d = stalks[x].dim(deg);
          const bool in_u = (l.mask(u) >> x) & 1u;
          const bool in_v = (l.mask(v) >> x) & 1u;
          if (in_u && in_v)
            for (std::size_t i = 0; i < d; ++i) m[roff + i][coff + i] = 1;
          if (in_v) roff += d;
          if (in_u) coff += d;
        }
        mats[deg] = std::move(m);
      }
      res[{u, v}] = std::move(mats);
    }
  return ComplexSheaf::make(space, std::move(values), std::move(res));
}

}  // namespace

TEST_CASE("complex tools") {
  SUBCASE("homology of the acyclic 2-term complex") {
    RationalComplex c =
        RationalComplex::from_parts({{0, 1}, {1, 1}}, {{0, {{Rat(1)}}}});
    CHECK(c.homology().empty());
  }
  SUBCASE("d∘d is enforced") {
    CHECK_THROWS_AS(
        RationalComplex::from_parts({{0, 1}, {1, 1}, {2, 1}},
                                    {{0, {{Rat(1)}}}, {1, {{Rat(1)}}}}),
        Error);
  }
  SUBCASE("mapping fiber of an identity is acyclic") {
    RationalComplex c =
        RationalComplex::from_parts({{0, 2}, {1, 1}}, {{0, {{Rat(1), Rat(2)}}}});
    CHECK(mapping_fiber(identity_chain_map(c)).is_acyclic());
  }
  SUBCASE("total fiber of a product square is acyclic") {
    RationalComplex a = one_dim(0);
    RationalComplex sum = direct_sum(a, a);
    // square: a⊕a -> a, a -> 0 with the two projections
    ChainMap top = ChainMap::make(sum, a, {{0, Matrix{{Rat(1), Rat(0)}}}});
    ChainMap left = ChainMap::make(sum, a, {{0, Matrix{{Rat(0), Rat(1)}}}});
    ChainMap bottom = zero_chain_map(a, RationalComplex::zero());
    ChainMap right = zero_chain_map(a, RationalComplex::zero());
    CHECK(total_fiber(top, bottom, left, right).is_acyclic());
  }
  SUBCASE("fiber and cofiber are inverse in homology") {
    RationalComplex a =
        RationalComplex::from_parts({{0, 1}, {1, 2}}, {{0, {{Rat(1)}, {Rat(0)}}}});
    RationalComplex b = one_dim(1);
    ChainMap f = ChainMap::make(a, b, {{1, Matrix{{Rat(0), Rat(1)}}}});
    // cofib(fib(f) -> a) has the homology of b
    ChainMap incl = ChainMap::make(
        mapping_fiber(f), a,
        [&] {
          std::map<int, Matrix> mats;
          for (int deg = a.min_degree(); deg <= a.max_degree(); ++deg) {
            const std::size_t rows = a.dim(deg);
            const std::size_t cols = mapping_fiber(f).dim(deg);
            if (rows == 0 || cols == 0) continue;
            Matrix m = zero_matrix(rows, cols);
            for (std::size_t i = 0; i < rows; ++i) m[i][i] = 1;
            mats[deg] = std::move(m);
          }
          return mats;
        }());
    CHECK(mapping_cofiber(incl).homology() == b.homology());
  }
}

TEST_CASE("stable excision of the generated corpus") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    auto sheaf = random_stable_excisive_sheaf(sierpinski_points(), seed);
    CAPTURE(seed);
    CHECK(is_stable_excisive(sheaf).ok);
  }
  auto sky = skyscraper_sum(two_discrete(), {one_dim(0), one_dim(1)});
  CHECK(is_stable_excisive(sky).ok);
}

TEST_CASE("verdier dual on the named examples") {
  SUBCASE("one-point space") {
    auto sheaf = skyscraper_sum(one_point(), {one_dim(0)});
    auto vd = verdier_dual(sheaf);
    const auto& dl = vd.dual_space.frame().lattice();
    // full dual open: fib(F(X) -> F(∅)) ~ C; empty dual open: ~ 0
    CHECK(vd.values[dl.index_of_id("x")].homology() ==
          std::map<int, std::size_t>{{0, 1}});
    CHECK(vd.values[dl.index_of_id("")].is_acyclic());
  }
  SUBCASE("two-point discrete direct sum picks complementary summands") {
    auto sheaf = skyscraper_sum(two_discrete(), {one_dim(0), one_dim(0)});
    auto vd = verdier_dual(sheaf);
    const auto& dl = vd.dual_space.frame().lattice();
    // dual open {x} has K = {y}: fib(F(X) -> F({y})) ~ F({x})
    CHECK(vd.values[dl.index_of_id("x")].homology() ==
          std::map<int, std::size_t>{{0, 1}});
    CHECK(vd.values[dl.index_of_id("x,y")].homology() ==
          std::map<int, std::size_t>{{0, 2}});
    CHECK(vd.values[dl.index_of_id("")].is_acyclic());
  }
  SUBCASE("Sierpinski with a nontrivial restriction") {
    // points a < b; opens: {}, {b}, {a,b}; F(top) = Q in degree 0,
    // F({b}) = Q in degree 0, restriction the identity
    SpaceDescriptor space = SpaceDescriptor::finite(sierpinski_points());
    const auto& l = space.frame().lattice();
    std::vector<RationalComplex> values(3);
    values[l.index_of_id("")] = RationalComplex::zero();
    values[l.index_of_id("b")] = one_dim(0);
    values[l.index_of_id("a,b")] = one_dim(0);
    std::map<std::pair<std::size_t, std::size_t>, std::map<int, Matrix>> res;
    res[{l.index_of_id("a,b"), l.index_of_id("b")}] = {
        {0, Matrix{{Rat(1)}}}};
    res[{l.index_of_id("a,b"), l.index_of_id("")}] = {};
    res[{l.index_of_id("b"), l.index_of_id("")}] = {};
    auto sheaf = ComplexSheaf::make(space, std::move(values), std::move(res));
    REQUIRE(is_stable_excisive(sheaf).ok);
    auto vd = verdier_dual(sheaf);
    const auto& dl = vd.dual_space.frame().lattice();
    // K = {a,b}: fib(id) ~ 0;  K = {b}: fib(Q -> Q) ~ 0;  K = {}: ~ Q
    CHECK(vd.values[dl.index_of_id("")].is_acyclic());
    CHECK(vd.values[dl.index_of_id("a")].is_acyclic());
    CHECK(vd.values[dl.index_of_id("a,b")].homology() ==
          std::map<int, std::size_t>{{0, 1}});
  }
  SUBCASE("non-excisive inputs are rejected") {
    SpaceDescriptor space = SpaceDescriptor::finite(one_point());
    const auto& l = space.frame().lattice();
    std::vector<RationalComplex> values(2);
    values[l.index_of_id("")] = one_dim(0);  // not acyclic at the empty open
    values[l.index_of_id("x")] = one_dim(0);
    std::map<std::pair<std::size_t, std::size_t>, std::map<int, Matrix>> res;
    res[{l.index_of_id("x"), l.index_of_id("")}] = {{0, Matrix{{Rat(1)}}}};
    auto bad = ComplexSheaf::make(space, std::move(values), std::move(res));
    CHECK_THROWS_AS(verdier_dual(bad), Error);
  }
}

TEST_CASE("verdier dual lands in stable-excisive cosheaves") {
  std::vector<PosetPtr> spaces = {one_point(), two_discrete(),
                                  sierpinski_points()};
  for (const auto& pts : spaces)
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      auto sheaf = random_stable_excisive_sheaf(pts, seed);
      auto vd = verdier_dual(sheaf);
      CAPTURE(seed);
      CHECK(cosheaf_stable_excisive(vd).ok);
    }
}

TEST_CASE("double dual preserves homology degreewise") {
  std::vector<PosetPtr> spaces = {one_point(), two_discrete(),
                                  sierpinski_points()};
  for (const auto& pts : spaces)
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
      auto sheaf = random_stable_excisive_sheaf(pts, seed);
      auto rep = verdier_double_dual_check(sheaf);
      CAPTURE(seed);
      CHECK(rep.ok);
    }
}
