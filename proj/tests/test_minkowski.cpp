#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sck/dense_order.hpp"
#include "sck/error.hpp"
#include "sck/minkowski.hpp"

using namespace sck;

namespace {

/// Independent oracle for the question-mark function: the Stern-Brocot walk
/// accumulating binary digits, no continued fractions involved.
Rat question_mark_by_walk(const Rat& x) {
  REQUIRE(x >= 0);
  REQUIRE(x <= 1);
  if (x == 0) return Rat(0);
  if (x == 1) return Rat(1);
  Int lp = 0, lq = 1, rp = 1, rq = 1;
  Rat lo(0), hi(1);
  for (;;) {
    Int mp = lp + rp, mq = lq + rq;
    Rat mid = (lo + hi) / 2;
    Rat med(mp, mq);
    if (x == med) return mid;
    if (x < med) {
      rp = mp;
      rq = mq;
      hi = mid;
    } else {
      lp = mp;
      lq = mq;
      lo = mid;
    }
  }
}

}  // namespace

TEST_CASE("endpoints and the pinned values") {
  CHECK(minkowski_forward(Rat(0)) == Rat(0));
  CHECK(minkowski_forward(Rat(1)) == Rat(1));
  CHECK(minkowski_forward(Rat(1, 2)) == Rat(1, 2));
  CHECK(minkowski_forward(Rat(1, 3)) == Rat(1, 4));
  CHECK(minkowski_inverse(Rat(1, 4)) == Rat(1, 3));
  CHECK(minkowski_inverse(Rat(0)) == Rat(0));
  CHECK(minkowski_inverse(Rat(1)) == Rat(1));
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(minkowski_forward(Rat(3, 2)), Error);
  CHECK_THROWS_AS(minkowski_forward(Rat(-1, 2)), Error);
  CHECK_THROWS_AS(minkowski_inverse(Rat(1, 3)), Error);
}

TEST_CASE("forward agrees with the Stern-Brocot walk oracle") {
  for (long long q = 1; q <= 30; ++q)
    for (long long p = 0; p <= q; ++p) {
      Rat x(p, q);
      CHECK(minkowski_forward(x) == question_mark_by_walk(x));
    }
}

TEST_CASE("bijection and monotonicity on random rationals") {
  std::mt19937_64 rng(7);
  std::vector<Rat> xs;
  for (int i = 0; i < 200; ++i) {
    long long q = 1 + static_cast<long long>(rng() % 50);
    long long p = static_cast<long long>(rng() % (q + 1));
    xs.emplace_back(p, q);
  }
  for (const Rat& x : xs) {
    Rat y = minkowski_forward(x);
    CHECK(is_dyadic(y));
    CHECK(minkowski_inverse(y) == x);
  }
  std::sort(xs.begin(), xs.end());
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (xs[i] == xs[i + 1]) continue;
    CHECK(minkowski_forward(xs[i]) < minkowski_forward(xs[i + 1]));
  }
}

TEST_CASE("back-and-forth between the named dense orders") {
  auto dy = DenseOrderHandle::named("dyadic[0,1]");
  auto ra = DenseOrderHandle::named("rational[0,1]");
  SUBCASE("endpoints forced") {
    auto iso = back_and_forth(dy, ra, 4);
    bool saw00 = false, saw11 = false;
    for (auto& [a, b] : iso.pairs) {
      if (a == 0 && b == 0) saw00 = true;
      if (a == 1 && b == 1) saw11 = true;
    }
    CHECK(saw00);
    CHECK(saw11);
  }
  SUBCASE("order-preserving and injective") {
    auto iso = back_and_forth(dy, ra, 9);
    for (std::size_t i = 0; i + 1 < iso.pairs.size(); ++i) {
      CHECK(iso.pairs[i].first < iso.pairs[i + 1].first);
      CHECK(iso.pairs[i].second < iso.pairs[i + 1].second);
    }
  }
  SUBCASE("agrees with the Minkowski inverse under Stern-Brocot witnesses") {
    auto iso = back_and_forth(dy, ra, 12);
    for (auto& [d, r] : iso.pairs) CHECK(minkowski_inverse(d) == r);
  }
  SUBCASE("endpoint mismatch") {
    auto open = DenseOrderHandle::named("rational(0,1)");
    CHECK_THROWS_AS(back_and_forth(open, ra, 2), Error);
    auto iso = back_and_forth(DenseOrderHandle::named("dyadic(0,1)"), open, 6);
    for (std::size_t i = 0; i + 1 < iso.pairs.size(); ++i)
      CHECK(iso.pairs[i].second < iso.pairs[i + 1].second);
  }
}
