#include "sck/idealoid.hpp"

#include <algorithm>
#include <bit>

#include "sck/error.hpp"
#include "sck/minkowski.hpp"

namespace sck {

namespace {

std::vector<std::uint64_t> absorption_closure(
    const FinitePoset& poset, const std::vector<std::uint64_t>& rows) {
  const std::size_t n = poset.size();
  std::vector<std::uint64_t> out(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    std::uint64_t bs = rows[a];
    if (!bs) continue;
    std::uint64_t widened = 0;
    for (std::size_t b = 0; b < n; ++b)
      if ((bs >> b) & 1u) widened |= poset.up_row(b);
    for (std::size_t a2 = 0; a2 < n; ++a2)
      if (poset.le(a2, a)) out[a2] |= widened;
  }
  return out;
}

}  // namespace

Idealoid Idealoid::from_rows(PosetPtr poset, std::vector<std::uint64_t> rows,
                             bool close) {
  const std::size_t n = poset->size();
  if (rows.size() != n) fail("ParseError", "pair matrix size mismatch");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (((rows[a] >> b) & 1u) && !poset->le(a, b))
        fail("PairNotInOrder", "pair (" + poset->label(a) + ", " +
                                   poset->label(b) + ") not in the order");
  if (close) {
    rows = absorption_closure(*poset, rows);
  } else if (!is_idealoid(*poset, rows)) {
    fail("NotAnIdealoid", "pair set is not absorption-closed");
  }
  Idealoid i;
  i.poset_ = std::move(poset);
  i.rows_ = std::move(rows);
  return i;
}

Idealoid Idealoid::from_pairs(
    PosetPtr poset,
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
    bool close) {
  std::vector<std::uint64_t> rows(poset->size(), 0);
  for (auto [a, b] : pairs) rows[a] |= 1ull << b;
  return from_rows(std::move(poset), std::move(rows), close);
}

Idealoid Idealoid::full_order(PosetPtr poset) {
  std::vector<std::uint64_t> rows(poset->size());
  for (std::size_t a = 0; a < poset->size(); ++a) rows[a] = poset->up_row(a);
  return from_rows(std::move(poset), std::move(rows), false);
}

Idealoid Idealoid::strict_order(PosetPtr poset) {
  std::vector<std::uint64_t> rows(poset->size());
  for (std::size_t a = 0; a < poset->size(); ++a)
    rows[a] = poset->up_row(a) & ~(1ull << a);
  return from_rows(std::move(poset), std::move(rows), false);
}

Idealoid Idealoid::empty(PosetPtr poset) {
  const std::size_t n = poset->size();
  return from_rows(std::move(poset), std::vector<std::uint64_t>(n, 0), false);
}

std::size_t Idealoid::pair_count() const {
  std::size_t c = 0;
  for (auto r : rows_) c += std::popcount(r);
  return c;
}

std::vector<std::pair<std::size_t, std::size_t>> Idealoid::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < rows_.size(); ++a)
    for (std::size_t b = 0; b < rows_.size(); ++b)
      if (contains(a, b)) out.emplace_back(a, b);
  return out;
}

bool Idealoid::subset_of(const Idealoid& other) const {
  for (std::size_t a = 0; a < rows_.size(); ++a)
    if (rows_[a] & ~other.rows_[a]) return false;
  return true;
}

bool is_idealoid(const FinitePoset& poset,
                 const std::vector<std::uint64_t>& rows) {
  const std::size_t n = poset.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!((rows[a] >> b) & 1u)) continue;
      for (std::size_t a2 = 0; a2 < n; ++a2) {
        if (!poset.le(a2, a)) continue;
        if ((poset.up_row(b) & ~rows[a2]) != 0) return false;
      }
    }
  return true;
}

namespace {

bool row_subdivisible(const std::vector<std::uint64_t>& rows, std::size_t a,
                      std::size_t b) {
  const std::uint64_t from_a = rows[a];
  for (std::size_t c = 0; c < rows.size(); ++c)
    if (((from_a >> c) & 1u) && ((rows[c] >> b) & 1u)) return true;
  return false;
}

}  // namespace

bool is_subdivisible(const Idealoid& idealoid) {
  const auto& rows = idealoid.rows();
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < rows.size(); ++b)
      if (idealoid.contains(a, b) && !row_subdivisible(rows, a, b))
        return false;
  return true;
}

Idealoid sd_core(const Idealoid& idealoid) {
  std::vector<std::uint64_t> rows = idealoid.rows();
  const std::size_t n = rows.size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (((rows[a] >> b) & 1u) && !row_subdivisible(rows, a, b)) {
          rows[a] &= ~(1ull << b);
          changed = true;
        }
  }
  return Idealoid::from_rows(idealoid.poset(), std::move(rows), false);
}

Chain subdivision_chain(const Idealoid& idealoid, std::size_t a, std::size_t b,
                        unsigned depth) {
  Idealoid core = sd_core(idealoid);
  if (!core.contains(a, b))
    fail("NotInCore", "(" + idealoid.poset()->label(a) + ", " +
                          idealoid.poset()->label(b) +
                          ") is not in the subdivisible core");
  const std::size_t segments = 1ull << depth;
  std::vector<std::size_t> values(segments + 1);
  values.front() = a;
  values.back() = b;
  // Repeated halving; every adjacent pair stays inside the core, so deeper
  // levels always find interpolants.
  for (unsigned level = 0; level < depth; ++level) {
    const std::size_t step = segments >> level;
    for (std::size_t lo = 0; lo < segments; lo += step) {
      const std::size_t hi = lo + step, mid = lo + step / 2;
      std::optional<std::size_t> witness;
      for (std::size_t c = 0; c < core.poset()->size(); ++c)
        if (core.contains(values[lo], c) && core.contains(c, values[hi])) {
          witness = c;
          break;
        }
      if (!witness)
        fail("WitnessSearchFailed", "no interpolant found inside the core");
      values[mid] = *witness;
    }
  }
  Chain chain;
  chain.values = std::move(values);
  for (std::size_t m = 0; m <= segments; ++m)
    chain.index.push_back(
        minkowski_inverse(Rat(Int(m), Int(std::uint64_t(segments)))));
  return chain;
}

bool chain_is_valid(const Idealoid& idealoid, const Chain& chain) {
  if (chain.index.size() != chain.values.size()) return false;
  if (chain.index.empty()) return false;
  if (chain.index.front() != 0 || chain.index.back() != 1) return false;
  for (std::size_t i = 0; i + 1 < chain.index.size(); ++i)
    if (!(chain.index[i] < chain.index[i + 1])) return false;
  const auto& poset = *idealoid.poset();
  for (std::size_t i = 0; i < chain.values.size(); ++i)
    for (std::size_t j = i + 1; j < chain.values.size(); ++j) {
      if (!poset.le(chain.values[i], chain.values[j])) return false;
      if (!idealoid.contains(chain.values[i], chain.values[j])) return false;
    }
  return true;
}

void validate_ideal(const IdealWitness& witness) {
  const auto& poset = *witness.poset;
  const std::uint64_t m = witness.members;
  if (m == 0) fail("NotAnIdeal", "ideal must be nonempty");
  if (!poset.is_downset(m)) fail("NotAnIdeal", "not downward closed");
  for (std::size_t a = 0; a < poset.size(); ++a) {
    if (!((m >> a) & 1u)) continue;
    for (std::size_t b = 0; b < poset.size(); ++b) {
      if (!((m >> b) & 1u)) continue;
      if ((poset.up_row(a) & poset.up_row(b) & m) == 0)
        fail("NotAnIdeal", "not directed: '" + poset.label(a) + "' and '" +
                               poset.label(b) + "' have no bound inside");
    }
  }
}

bool is_restricted_ideal(const Idealoid& idealoid,
                         const IdealWitness& witness) {
  validate_ideal(witness);
  const std::uint64_t m = witness.members;
  for (std::size_t p = 0; p < witness.poset->size(); ++p) {
    if (!((m >> p) & 1u)) continue;
    if ((idealoid.row(p) & m) == 0) return false;
  }
  return true;
}

std::vector<std::size_t> sequentialize(const Idealoid& idealoid,
                                       std::size_t seed, std::size_t count) {
  std::vector<std::size_t> out;
  if (count == 0) return out;
  out.push_back(seed);
  while (out.size() < count) {
    const std::uint64_t succ = idealoid.row(out.back());
    if (!succ)
      fail("NoSuccessor", "'" + idealoid.poset()->label(out.back()) +
                              "' has no successor along the idealoid");
    out.push_back(static_cast<std::size_t>(std::countr_zero(succ)));
  }
  return out;
}

std::size_t ArrowIdealoid::arrow_index(std::size_t src, std::size_t tgt) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i] == std::make_pair(src, tgt)) return i;
  fail("UnknownElement", "no such arrow");
}

ArrowIdealoid arrow_idealoid(const Idealoid& idealoid) {
  const auto base = idealoid.poset();
  ArrowIdealoid out;
  for (std::size_t s = 0; s < base->size(); ++s)
    for (std::size_t t = 0; t < base->size(); ++t)
      if (base->le(s, t)) out.arrows.emplace_back(s, t);
  if (out.arrows.size() > 64)
    fail("PosetTooLarge", "arrow carrier exceeds 64 elements");
  std::vector<std::string> labels;
  for (auto [s, t] : out.arrows)
    labels.push_back(base->label(s) + "->" + base->label(t));
  std::vector<std::uint64_t> rows(out.arrows.size(), 0);
  for (std::size_t i = 0; i < out.arrows.size(); ++i)
    for (std::size_t j = 0; j < out.arrows.size(); ++j)
      if (base->le(out.arrows[i].first, out.arrows[j].first) &&
          base->le(out.arrows[i].second, out.arrows[j].second))
        rows[i] |= 1ull << j;
  out.arrow_poset = std::make_shared<FinitePoset>(
      FinitePoset::from_le_rows(std::move(labels), std::move(rows)));
  std::vector<std::uint64_t> pair_rows(out.arrows.size(), 0);
  for (std::size_t i = 0; i < out.arrows.size(); ++i)
    for (std::size_t j = 0; j < out.arrows.size(); ++j)
      if (idealoid.contains(out.arrows[i].first, out.arrows[j].first) &&
          idealoid.contains(out.arrows[i].second, out.arrows[j].second))
        pair_rows[i] |= 1ull << j;
  out.idealoid =
      Idealoid::from_rows(out.arrow_poset, std::move(pair_rows), false);
  return out;
}

std::optional<std::size_t> buffer_check(const Idealoid& idealoid,
                                        std::pair<std::size_t, std::size_t> f,
                                        std::pair<std::size_t, std::size_t> g) {
  const auto& poset = *idealoid.poset();
  for (std::size_t c = 0; c < poset.size(); ++c)
    if (poset.le(f.second, c) && poset.le(g.first, c) &&
        idealoid.contains(c, g.second))
      return c;
  return std::nullopt;
}

bool arrow_interpolable(const ArrowIdealoid& arrows, std::size_t f,
                        std::size_t g) {
  return row_subdivisible(arrows.idealoid.rows(), f, g);
}

bool mutually_cofinal(const FinitePoset& poset, std::uint64_t ideal_a,
                      std::uint64_t ideal_b) {
  for (std::size_t p = 0; p < poset.size(); ++p) {
    if (((ideal_a >> p) & 1u) && (poset.up_row(p) & ideal_b) == 0) return false;
    if (((ideal_b >> p) & 1u) && (poset.up_row(p) & ideal_a) == 0) return false;
  }
  return true;
}

}  // namespace sck
