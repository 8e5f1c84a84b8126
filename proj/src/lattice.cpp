#include "sck/lattice.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "sck/error.hpp"

namespace sck {

FiniteLattice FiniteLattice::downsets_of(PosetPtr base, std::size_t limit) {
  FiniteLattice l;
  l.base_ = std::move(base);
  l.masks_ = enumerate_downsets(*l.base_, limit);
  for (std::size_t i = 0; i < l.masks_.size(); ++i) {
    l.mask_index_[l.masks_[i]] = i;
    l.ids_.push_back(subset_id(*l.base_, l.masks_[i]));
  }
  l.bottom_ = 0;
  l.top_ = l.masks_.size() - 1;
  return l;
}

FiniteLattice FiniteLattice::from_masks(PosetPtr base,
                                        std::vector<std::uint64_t> masks) {
  FiniteLattice l;
  l.base_ = std::move(base);
  std::sort(masks.begin(), masks.end(), [&](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return subset_id(*l.base_, a) < subset_id(*l.base_, b);
  });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  l.masks_ = std::move(masks);
  for (std::size_t i = 0; i < l.masks_.size(); ++i) {
    l.mask_index_[l.masks_[i]] = i;
    l.ids_.push_back(subset_id(*l.base_, l.masks_[i]));
  }
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b) {
      if (!l.mask_index_.count(l.masks_[a] | l.masks_[b]) ||
          !l.mask_index_.count(l.masks_[a] & l.masks_[b]))
        fail("NotALattice", "mask family not closed under union/intersection");
    }
  l.bottom_ = 0;
  l.top_ = l.size() - 1;
  if (l.size() == 0) fail("NotALattice", "empty carrier");
  return l;
}

FiniteLattice FiniteLattice::from_order(std::vector<std::string> labels,
                                        std::vector<std::uint64_t> le_rows) {
  FinitePoset order = FinitePoset::from_le_rows(labels, le_rows);
  FiniteLattice l;
  const std::size_t n = order.size();
  l.ids_ = order.labels();
  l.le_rows_.resize(n);
  for (std::size_t a = 0; a < n; ++a) l.le_rows_[a] = order.up_row(a);
  l.join_.assign(n, std::vector<std::uint32_t>(n));
  l.meet_.assign(n, std::vector<std::uint32_t>(n));
  auto unique_bound = [&](std::uint64_t candidates, bool least) {
    // least upper bound when least=true, greatest lower bound otherwise
    std::optional<std::size_t> best;
    for (std::size_t c = 0; c < n; ++c) {
      if (!((candidates >> c) & 1u)) continue;
      bool extremal = true;
      for (std::size_t d = 0; d < n; ++d) {
        if (!((candidates >> d) & 1u)) continue;
        if (least ? !order.le(c, d) : !order.le(d, c)) {
          extremal = false;
          break;
        }
      }
      if (extremal) {
        best = c;
        break;
      }
    }
    return best;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto j = unique_bound(order.up_row(a) & order.up_row(b), true);
      auto m = unique_bound(order.down_row(a) & order.down_row(b), false);
      if (!j || !m)
        fail("NotALattice", "missing join or meet of '" + l.ids_[a] +
                                "' and '" + l.ids_[b] + "'");
      l.join_[a][b] = static_cast<std::uint32_t>(*j);
      l.meet_[a][b] = static_cast<std::uint32_t>(*m);
    }
  auto bot = unique_bound(order.full_mask(), false);
  auto top = unique_bound(order.full_mask(), true);
  if (!bot || !top) fail("NotALattice", "no bottom or top");
  l.bottom_ = *bot;
  l.top_ = *top;
  return l;
}

bool FiniteLattice::le(std::size_t a, std::size_t b) const {
  if (mask_form()) return (masks_[a] & ~masks_[b]) == 0;
  return (le_rows_[a] >> b) & 1u;
}

std::size_t FiniteLattice::join(std::size_t a, std::size_t b) const {
  if (mask_form()) return mask_index_.at(masks_[a] | masks_[b]);
  return join_[a][b];
}

std::size_t FiniteLattice::meet(std::size_t a, std::size_t b) const {
  if (mask_form()) return mask_index_.at(masks_[a] & masks_[b]);
  return meet_[a][b];
}

std::size_t FiniteLattice::index_of_id(const std::string& id) const {
  for (std::size_t i = 0; i < ids_.size(); ++i)
    if (ids_[i] == id) return i;
  fail("UnknownElement", "no lattice element with id '" + id + "'");
}

std::optional<std::size_t> FiniteLattice::index_of_mask(
    std::uint64_t m) const {
  auto it = mask_index_.find(m);
  if (it == mask_index_.end()) return std::nullopt;
  return it->second;
}

FiniteLattice FiniteLattice::sublattice(
    const std::vector<std::size_t>& keep) const {
  if (mask_form()) {
    std::vector<std::uint64_t> masks;
    for (std::size_t i : keep) masks.push_back(masks_[i]);
    return from_masks(base_, std::move(masks));
  }
  std::vector<std::size_t> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::size_t> back(size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < sorted.size(); ++i) back[sorted[i]] = i;
  for (std::size_t a : sorted)
    for (std::size_t b : sorted) {
      if (back[join_[a][b]] == static_cast<std::size_t>(-1) ||
          back[meet_[a][b]] == static_cast<std::size_t>(-1))
        fail("NotALattice", "subset not closed under join/meet");
    }
  std::vector<std::string> labels;
  std::vector<std::uint64_t> rows(sorted.size(), 0);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    labels.push_back(ids_[sorted[i]]);
    for (std::size_t j = 0; j < sorted.size(); ++j)
      if (le(sorted[i], sorted[j])) rows[i] |= 1ull << j;
  }
  return from_order(std::move(labels), std::move(rows));
}

FinitePoset FiniteLattice::order_poset() const {
  if (size() > 64)
    fail("SizeLimitExceeded", "lattice too large to view as a poset");
  std::vector<std::uint64_t> rows(size(), 0);
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if (le(a, b)) rows[a] |= 1ull << b;
  return FinitePoset::from_le_rows(ids_, std::move(rows));
}

bool is_distributive(const FiniteLattice& lattice) {
  const std::size_t n = lattice.size();
  if (lattice.mask_form() && n > 1024) return true;  // set operations
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (lattice.meet(x, lattice.join(y, z)) !=
            lattice.join(lattice.meet(x, y), lattice.meet(x, z)))
          return false;
  return true;
}

namespace {

bool extend_iso(const FiniteLattice& a, const FiniteLattice& b,
                std::vector<std::size_t>& img, std::vector<bool>& used,
                std::size_t next) {
  if (next == a.size()) return true;
  for (std::size_t cand = 0; cand < b.size(); ++cand) {
    if (used[cand]) continue;
    bool ok = true;
    for (std::size_t prev = 0; prev < next && ok; ++prev) {
      if (a.le(prev, next) != b.le(img[prev], cand)) ok = false;
      if (a.le(next, prev) != b.le(cand, img[prev])) ok = false;
    }
    if (!ok) continue;
    img[next] = cand;
    used[cand] = true;
    if (extend_iso(a, b, img, used, next + 1)) return true;
    used[cand] = false;
  }
  return false;
}

}  // namespace

bool lattices_isomorphic(const FiniteLattice& a, const FiniteLattice& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> img(a.size());
  std::vector<bool> used(b.size(), false);
  return extend_iso(a, b, img, used, 0);
}

}  // namespace sck
