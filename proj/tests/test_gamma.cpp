#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sck/enumerate.hpp"
#include "sck/error.hpp"
#include "sck/frame.hpp"
#include "sck/gamma.hpp"

using namespace sck;

namespace {

PosetPtr chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  for (std::size_t i = 0; i + 1 < n; ++i)
    covers.emplace_back(std::to_string(i), std::to_string(i + 1));
  return std::make_shared<FinitePoset>(
      FinitePoset::from_covers(std::move(labels), covers));
}

PosetPtr antichain(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  return std::make_shared<FinitePoset>(
      FinitePoset::from_covers(std::move(labels), {}));
}

Frame sierpinski() {
  return Frame::tier1(FiniteLattice::downsets_of(chain(2), 1 << 20));
}

Frame powerset(std::size_t n) {
  return Frame::tier1(FiniteLattice::downsets_of(antichain(n), 1 << 20));
}

}  // namespace

TEST_CASE("ideal classification oracle for bounded cofinite fragments") {
  // Carrier fragment: bot plus cof(F) for F inside {0..4}. Every nonempty
  // downward closed join closed family over the fragment must contain its
  // own maximum, i.e. every ideal is principal. This is the enumeration
  // behind enabling flachsmeyer on the cofinite built-in.
  Frame cof = Frame::builtin("cofinite");
  std::vector<FrameElem> carrier;
  carrier.push_back(cof.bottom());
  for (unsigned mask = 0; mask < 32; ++mask) {
    std::vector<long long> f;
    for (unsigned b = 0; b < 5; ++b)
      if ((mask >> b) & 1u) f.push_back(b);
    carrier.push_back(FrameElem::cof(std::move(f)));
  }
  const std::size_t n = carrier.size();
  auto le = [&](std::size_t a, std::size_t b) {
    return cof.le(carrier[a], carrier[b]);
  };
  std::set<std::vector<bool>> seen;
  for (std::uint64_t gens = 1; gens < (1ull << 12); ++gens) {
    std::vector<bool> in(n, false);
    for (std::size_t g = 0; g < 12; ++g)
      if ((gens >> g) & 1u) in[g] = true;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t a = 0; a < n; ++a) {
        if (!in[a]) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (in[b] && a != b) {
            FrameElem j = cof.join(carrier[a], carrier[b]);
            for (std::size_t c = 0; c < n; ++c)
              if (carrier[c] == j && !in[c]) {
                in[c] = true;
                changed = true;
              }
          }
          if (!in[b] && le(b, a)) {
            in[b] = true;
            changed = true;
          }
        }
      }
    }
    if (!seen.insert(in).second) continue;
    std::size_t maxima = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (!in[a]) continue;
      bool is_max = true;
      for (std::size_t b = 0; b < n; ++b)
        if (in[b] && a != b && le(a, b)) is_max = false;
      if (is_max) ++maxima;
    }
    CHECK(maxima == 1);
  }
}

TEST_CASE("flachsmeyer on Tier-1 returns an isomorphic copy") {
  auto fr = sierpinski();
  auto out = flachsmeyer(fr);
  CHECK(out.frame.is_tier1());
  CHECK(lattices_isomorphic(out.frame.lattice(), fr.lattice()));
  CHECK(out.note.find("principal") != std::string::npos);
}

TEST_CASE("flachsmeyer on dint is the double-cut chain") {
  auto out = flachsmeyer(Frame::builtin("dint"));
  REQUIRE(out.frame.kind() == FrameKind::GammaDint);
  Frame g = out.frame;
  auto oc = [&](const char* s) { return g.parse_elem(s); };
  // both cut types per rational r, interleaved
  CHECK(g.le(oc("open:1/2"), oc("closed:1/2")));
  CHECK_FALSE(g.le(oc("closed:1/2"), oc("open:1/2")));
  CHECK(g.le(oc("closed:1/2"), oc("open:1/4")));
  CHECK(g.le(g.bottom(), oc("open:2/3")));
  CHECK(g.le(oc("closed:0"), g.top()));
  CHECK_FALSE(g.le(g.top(), oc("closed:0")));
  CHECK(g.stably_continuous().ok);
}

TEST_CASE("flachsmeyer on cofinite is enabled by the classification") {
  auto out = flachsmeyer(Frame::builtin("cofinite"));
  CHECK(out.frame.kind() == FrameKind::Cofinite);
  CHECK(out.note.find("principal") != std::string::npos);
}

TEST_CASE("flachsmeyer without a classification") {
  CHECK_THROWS_AS(flachsmeyer(Frame::builtin("dint_op")), Error);
  try {
    flachsmeyer(Frame::builtin("dint_op"));
    FAIL("expected NoClassification");
  } catch (const Error& e) {
    CHECK(e.code() == "NoClassification");
  }
}

TEST_CASE("flachsmeyer section") {
  SUBCASE("Tier-1: principal ideals, retract of the join map") {
    auto check = flachsmeyer_section(sierpinski());
    CHECK(check.meets_ok);
    CHECK(check.joins_ok);
    CHECK(check.retract_ok);
    for (auto& [y, ideal] : check.samples)
      CHECK(ideal == "principal:" + y);
  }
  SUBCASE("dint: open cuts, all at the top") {
    auto check = flachsmeyer_section(Frame::builtin("dint"));
    CHECK(check.meets_ok);
    CHECK(check.joins_ok);
    CHECK(check.retract_ok);
    bool saw_top = false, saw_cut = false;
    for (auto& [y, ideal] : check.samples) {
      if (y == "top") {
        saw_top = true;
        CHECK(ideal == "all");
      }
      if (y == "up:1/2") {
        saw_cut = true;
        CHECK(ideal == "open-cut:1/2");
      }
    }
    CHECK(saw_top);
    CHECK(saw_cut);
  }
  SUBCASE("dint_op mirrors dint") {
    auto check = flachsmeyer_section(Frame::builtin("dint_op"));
    CHECK(check.meets_ok);
    CHECK(check.joins_ok);
    CHECK(check.retract_ok);
  }
}

TEST_CASE("compactification of the named frames") {
  SUBCASE("Sierpinski collapses to the point") {
    auto out = bm_compactify(sierpinski(), AuxRelation::RatherBelow);
    CHECK(out.frame.lattice().size() == 2);
    CHECK(out.frame.is_regular());
    CHECK(out.frame.top_is_compact());
  }
  SUBCASE("powerset frames are fixed") {
    for (std::size_t n = 1; n <= 4; ++n) {
      auto fr = powerset(n);
      auto out = bm_compactify(fr, AuxRelation::RatherBelow);
      CHECK(out.frame.lattice().size() == fr.lattice().size());
      CHECK(lattices_isomorphic(out.frame.lattice(), fr.lattice()));
      CHECK(out.frame.is_regular());
    }
  }
  SUBCASE("dint collapses to the point under rather-below") {
    auto out = bm_compactify(Frame::builtin("dint"), AuxRelation::RatherBelow);
    REQUIRE(out.frame.is_tier1());
    CHECK(out.frame.lattice().size() == 2);
    CHECK(out.frame.is_regular());
  }
  SUBCASE("dint reproduces itself under way-below") {
    auto out = bm_compactify(Frame::builtin("dint"), AuxRelation::WayBelow);
    CHECK(out.frame.kind() == FrameKind::Dint);
  }
  SUBCASE("cofinite collapses under rather-below") {
    auto out =
        bm_compactify(Frame::builtin("cofinite"), AuxRelation::RatherBelow);
    CHECK(out.frame.lattice().size() == 2);
  }
  SUBCASE("idempotence up to isomorphism") {
    std::vector<Frame> frames = {sierpinski(), powerset(3),
                                 Frame::tier1(FiniteLattice::downsets_of(
                                     chain(4), 1 << 20))};
    for (const auto& fr : frames) {
      auto once = bm_compactify(fr, AuxRelation::RatherBelow);
      auto twice = bm_compactify(once.frame, AuxRelation::RatherBelow);
      CHECK(lattices_isomorphic(once.frame.lattice(), twice.frame.lattice()));
    }
    auto once = bm_compactify(Frame::builtin("dint"), AuxRelation::RatherBelow);
    auto twice = bm_compactify(once.frame, AuxRelation::RatherBelow);
    CHECK(lattices_isomorphic(once.frame.lattice(), twice.frame.lattice()));
  }
  SUBCASE("outputs are regular with a compact top") {
    for (const auto& p : posets_up_to_iso(3)) {
      auto fr = Frame::tier1(FiniteLattice::downsets_of(
          std::make_shared<FinitePoset>(p), 1 << 20));
      auto out = bm_compactify(fr, AuxRelation::RatherBelow);
      CHECK(out.frame.is_regular());
      CHECK(out.frame.top_is_compact());
    }
  }
}

TEST_CASE("very Schwartz subframe") {
  SUBCASE("Tier-1 frames are covered entirely") {
    auto rep = very_schwartz_subframe(sierpinski());
    CHECK(rep.covers_all);
    CHECK(rep.closed_meets);
    CHECK(rep.closed_joins);
    CHECK(rep.closed_directed);
    CHECK(rep.elements.size() == 3);
  }
  SUBCASE("built-ins are covered entirely") {
    for (const char* name : {"dint", "dint_op", "cofinite"}) {
      auto rep = very_schwartz_subframe(Frame::builtin(name));
      CAPTURE(name);
      CHECK(rep.covers_all);
      CHECK(rep.closed_meets);
      CHECK(rep.closed_joins);
      CHECK(rep.closed_directed);
    }
  }
}
