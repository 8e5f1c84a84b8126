#include "sck/dense_order.hpp"

#include <algorithm>
#include <deque>

#include "sck/error.hpp"

namespace sck {

DenseOrderHandle DenseOrderHandle::named(const std::string& name) {
  DenseOrderHandle h;
  h.name_ = name;
  std::string kind;
  if (name.size() > 5 && name.substr(name.size() - 5) == "[0,1]") {
    h.has_min_ = h.has_max_ = true;
    kind = name.substr(0, name.size() - 5);
  } else if (name.size() > 5 && name.substr(name.size() - 5) == "(0,1)") {
    kind = name.substr(0, name.size() - 5);
  } else {
    fail("ParseError", "unknown dense order '" + name + "'");
  }
  if (kind == "dyadic")
    h.dyadic_ = true;
  else if (kind != "rational")
    fail("ParseError", "unknown dense order '" + name + "'");
  return h;
}

Rat DenseOrderHandle::nth(std::size_t i) const {
  std::size_t k = i;
  if (has_min_) {
    if (k == 0) return Rat(0);
    --k;
  }
  if (has_max_) {
    if (k == 0) return Rat(1);
    --k;
  }
  if (dyadic_) {
    // by depth: 1/2; 1/4, 3/4; 1/8, 3/8, 5/8, 7/8; ...
    std::size_t level = 1, width = 1;
    while (k >= width) {
      k -= width;
      width <<= 1;
      ++level;
    }
    return Rat(Int(2 * k + 1), Int(1) << static_cast<unsigned>(level));
  }
  // Stern-Brocot breadth-first inside (0,1).
  std::deque<std::array<Int, 4>> queue;  // lp, lq, rp, rq
  queue.push_back({Int(0), Int(1), Int(1), Int(1)});
  for (;;) {
    auto [lp, lq, rp, rq] = queue.front();
    queue.pop_front();
    Int mp = lp + rp, mq = lq + rq;
    if (k == 0) return Rat(mp, mq);
    --k;
    queue.push_back({lp, lq, mp, mq});
    queue.push_back({mp, mq, rp, rq});
  }
}

Rat DenseOrderHandle::between(const Rat& a, const Rat& b) const {
  if (!(a < b)) fail("OutOfRange", "between() needs a < b");
  if (dyadic_) {
    Rat lo(0), hi(1);
    for (;;) {
      Rat mid = (lo + hi) / 2;
      if (mid <= a)
        lo = mid;
      else if (mid >= b)
        hi = mid;
      else
        return mid;
    }
  }
  Int lp = 0, lq = 1, rp = 1, rq = 1;
  for (;;) {
    Int mp = lp + rp, mq = lq + rq;
    Rat med(mp, mq);
    if (med <= a) {
      lp = mp;
      lq = mq;
    } else if (med >= b) {
      rp = mp;
      rq = mq;
    } else {
      return med;
    }
  }
}

Rat DenseOrderHandle::above(const Rat& a) const { return between(a, Rat(1)); }

Rat DenseOrderHandle::below(const Rat& b) const { return between(Rat(0), b); }

PartialIso back_and_forth(const DenseOrderHandle& left,
                          const DenseOrderHandle& right, std::size_t steps) {
  if (left.has_min() != right.has_min() || left.has_max() != right.has_max())
    fail("EndpointMismatch", "endpoint patterns differ: '" + left.name() +
                                 "' vs '" + right.name() + "'");
  PartialIso iso;
  auto insert_pair = [&](const Rat& a, const Rat& b) {
    iso.pairs.emplace_back(a, b);
    std::sort(iso.pairs.begin(), iso.pairs.end());
  };
  if (left.has_min()) insert_pair(left.min_value(), right.min_value());
  if (left.has_max()) insert_pair(left.max_value(), right.max_value());

  // Inserts `value` on the active side, with the image produced by the
  // passive side's witness procedures.
  auto place = [&](const Rat& value, const DenseOrderHandle& passive,
                   bool forth) {
    const Rat* lo = nullptr;
    const Rat* hi = nullptr;
    for (const auto& [a, b] : iso.pairs) {
      const Rat& key = forth ? a : b;
      const Rat& img = forth ? b : a;
      if (key < value) lo = &img;
      if (key > value && !hi) hi = &img;
    }
    Rat image = lo && hi  ? passive.between(*lo, *hi)
                : lo      ? passive.above(*lo)
                : hi      ? passive.below(*hi)
                          : passive.nth(0);
    if (forth)
      insert_pair(value, image);
    else
      insert_pair(image, value);
  };

  std::size_t left_cursor = 0, right_cursor = 0;
  for (std::size_t s = 0; s < steps; ++s) {
    const bool forth = s % 2 == 0;
    const DenseOrderHandle& active = forth ? left : right;
    const DenseOrderHandle& passive = forth ? right : left;
    std::size_t& cursor = forth ? left_cursor : right_cursor;
    Rat value;
    for (;;) {
      value = active.nth(cursor++);
      bool matched = false;
      for (const auto& [a, b] : iso.pairs)
        if ((forth ? a : b) == value) matched = true;
      if (!matched) break;
    }
    place(value, passive, forth);
  }
  return iso;
}

}  // namespace sck
