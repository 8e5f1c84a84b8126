#include "sck/poset.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "sck/error.hpp"

namespace sck {

namespace {

void check_labels(const std::vector<std::string>& labels) {
  if (labels.size() > 64)
    fail("PosetTooLarge", "carriers are capped at 64 elements, got " +
                              std::to_string(labels.size()));
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) fail("DuplicateLabel", "duplicate label '" + l + "'");
}

}  // namespace

FinitePoset FinitePoset::from_covers(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  check_labels(labels);
  FinitePoset p;
  p.labels_ = std::move(labels);
  const std::size_t n = p.labels_.size();
  p.le_rows_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) p.le_rows_[i] = 1ull << i;
  for (const auto& [a, b] : covers) {
    p.le_rows_[p.index_of(a)] |= 1ull << p.index_of(b);
  }
  // Reflexive-transitive closure, Warshall on bitmask rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if ((p.le_rows_[a] >> k) & 1u) p.le_rows_[a] |= p.le_rows_[k];
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (p.le(a, b) && p.le(b, a))
        fail("CycleDetected", "antisymmetry fails between '" + p.labels_[a] +
                                  "' and '" + p.labels_[b] + "'");
  return p;
}

FinitePoset FinitePoset::from_le_rows(std::vector<std::string> labels,
                                      std::vector<std::uint64_t> le_rows) {
  check_labels(labels);
  const std::size_t n = labels.size();
  if (le_rows.size() != n) fail("ParseError", "order matrix size mismatch");
  FinitePoset p;
  p.labels_ = std::move(labels);
  p.le_rows_ = std::move(le_rows);
  for (std::size_t a = 0; a < n; ++a) {
    if (!p.le(a, a)) fail("ParseError", "order not reflexive");
    for (std::size_t b = 0; b < n; ++b) {
      if (!p.le(a, b)) continue;
      if (a != b && p.le(b, a)) fail("CycleDetected", "antisymmetry fails");
      if ((p.le_rows_[b] & ~p.le_rows_[a]) != 0)
        fail("ParseError", "order not transitive");
    }
  }
  return p;
}

std::size_t FinitePoset::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  fail("UnknownElement", "no element labelled '" + label + "'");
}

std::uint64_t FinitePoset::down_row(std::size_t b) const {
  std::uint64_t m = 0;
  for (std::size_t a = 0; a < size(); ++a)
    if (le(a, b)) m |= 1ull << a;
  return m;
}

FinitePoset FinitePoset::opposite() const {
  FinitePoset p;
  p.labels_ = labels_;
  p.le_rows_.assign(size(), 0);
  for (std::size_t a = 0; a < size(); ++a) p.le_rows_[a] = down_row(a);
  return p;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::cover_pairs()
    const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b) {
      if (a == b || !le(a, b)) continue;
      bool covered = true;
      for (std::size_t c = 0; c < size(); ++c)
        if (c != a && c != b && le(a, c) && le(c, b)) {
          covered = false;
          break;
        }
      if (covered) out.emplace_back(a, b);
    }
  return out;
}

bool FinitePoset::is_downset(std::uint64_t mask) const {
  for (std::size_t b = 0; b < size(); ++b)
    if ((mask >> b) & 1u)
      if ((down_row(b) & ~mask) != 0) return false;
  return true;
}

bool FinitePoset::is_upset(std::uint64_t mask) const {
  for (std::size_t a = 0; a < size(); ++a)
    if ((mask >> a) & 1u)
      if ((up_row(a) & ~mask) != 0) return false;
  return true;
}

std::uint64_t FinitePoset::down_closure(std::uint64_t mask) const {
  std::uint64_t out = 0;
  for (std::size_t b = 0; b < size(); ++b)
    if ((mask >> b) & 1u) out |= down_row(b);
  return out;
}

std::uint64_t FinitePoset::up_closure(std::uint64_t mask) const {
  std::uint64_t out = 0;
  for (std::size_t a = 0; a < size(); ++a)
    if ((mask >> a) & 1u) out |= up_row(a);
  return out;
}

bool FinitePoset::is_directed() const {
  if (size() == 0) return false;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if ((up_row(a) & up_row(b)) == 0) return false;
  return true;
}

bool FinitePoset::same_labels_and_order(const FinitePoset& other) const {
  return labels_ == other.labels_ && le_rows_ == other.le_rows_;
}

bool is_monotone(const MonotoneMap& f) {
  if (f.table.size() != f.source->size())
    fail("ParseError", "map table is not total");
  for (std::size_t i : f.table)
    if (i >= f.target->size()) fail("UnknownElement", "map index out of range");
  const auto& src = *f.source;
  const auto& tgt = *f.target;
  for (std::size_t a = 0; a < src.size(); ++a)
    for (std::size_t b = 0; b < src.size(); ++b)
      if (src.le(a, b) && !tgt.le(f.table[a], f.table[b])) return false;
  return true;
}

std::string subset_id(const FinitePoset& poset, std::uint64_t mask) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < poset.size(); ++i)
    if ((mask >> i) & 1u) names.push_back(poset.label(i));
  std::sort(names.begin(), names.end());
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ',';
    out += names[i];
  }
  return out;
}

std::uint64_t parse_subset_id(const FinitePoset& poset, const std::string& id) {
  std::uint64_t mask = 0;
  if (id.empty()) return 0;
  std::stringstream ss(id);
  std::string part;
  while (std::getline(ss, part, ','))
    mask |= 1ull << poset.index_of(part);
  return mask;
}

std::vector<std::uint64_t> enumerate_downsets(const FinitePoset& poset,
                                              std::size_t limit) {
  // Elements are consumed in a linear extension; a downset is picked once as
  // the leaf of an include/exclude recursion, inclusion allowed only when all
  // strict predecessors are present.
  const std::size_t n = poset.size();
  std::vector<std::size_t> topo;
  {
    std::uint64_t placed = 0;
    while (topo.size() < n) {
      for (std::size_t i = 0; i < n; ++i) {
        if ((placed >> i) & 1u) continue;
        if ((poset.down_row(i) & ~placed & ~(1ull << i)) == 0) {
          topo.push_back(i);
          placed |= 1ull << i;
        }
      }
    }
  }
  std::vector<std::uint64_t> out;
  out.push_back(0);
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t e = topo[step];
    const std::uint64_t preds = poset.down_row(e) & ~(1ull << e);
    const std::size_t sz = out.size();
    for (std::size_t i = 0; i < sz; ++i) {
      if ((out[i] & preds) == preds) {
        out.push_back(out[i] | (1ull << e));
        if (out.size() > limit)
          fail("SizeLimitExceeded",
               "downset count exceeds the configured bound of " +
                   std::to_string(limit));
      }
    }
  }
  std::sort(out.begin(), out.end(), [&](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return subset_id(poset, a) < subset_id(poset, b);
  });
  return out;
}

}  // namespace sck
