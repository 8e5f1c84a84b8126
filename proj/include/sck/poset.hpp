#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace sck {

/// Finite poset over opaque string labels. Internally everything is dense
/// indices and uint64 bitmask rows, so carriers are capped at 64 elements.
/// Values are immutable after construction and safe to share.
class FinitePoset {
 public:
  /// Builds the reflexive-transitive closure of the cover relation.
  /// Throws DuplicateLabel / CycleDetected / PosetTooLarge.
  static FinitePoset from_covers(
      std::vector<std::string> labels,
      const std::vector<std::pair<std::string, std::string>>& covers);

  /// Accepts an explicit order matrix; validates the poset axioms.
  static FinitePoset from_le_rows(std::vector<std::string> labels,
                                  std::vector<std::uint64_t> le_rows);

  std::size_t size() const { return labels_.size(); }
  bool le(std::size_t a, std::size_t b) const {
    return (le_rows_[a] >> b) & 1u;
  }
  bool lt(std::size_t a, std::size_t b) const { return a != b && le(a, b); }

  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t index_of(const std::string& label) const;  // UnknownElement

  /// Row a has bit b set iff a <= b.
  std::uint64_t up_row(std::size_t a) const { return le_rows_[a]; }
  /// Row b has bit a set iff a <= b.
  std::uint64_t down_row(std::size_t b) const;

  std::uint64_t full_mask() const {
    return size() == 64 ? ~0ull : (1ull << size()) - 1;
  }

  FinitePoset opposite() const;

  /// Hasse edges (a, b) with a covered by b, lexicographic in indices.
  std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const;

  bool is_downset(std::uint64_t mask) const;
  bool is_upset(std::uint64_t mask) const;
  std::uint64_t down_closure(std::uint64_t mask) const;
  std::uint64_t up_closure(std::uint64_t mask) const;

  /// Nonempty and every pair has an upper bound.
  bool is_directed() const;

  bool same_labels_and_order(const FinitePoset& other) const;

 private:
  FinitePoset() = default;
  std::vector<std::string> labels_;
  std::vector<std::uint64_t> le_rows_;
};

using PosetPtr = std::shared_ptr<const FinitePoset>;

/// Total map between posets, stored as an index table.
struct MonotoneMap {
  PosetPtr source;
  PosetPtr target;
  std::vector<std::size_t> table;

  std::size_t apply(std::size_t i) const { return table.at(i); }
};

/// True iff a <= b implies f(a) <= f(b) for all pairs.
bool is_monotone(const MonotoneMap& f);

/// Canonical identifier of a subset: comma-joined sorted labels ("" for the
/// empty set).
std::string subset_id(const FinitePoset& poset, std::uint64_t mask);

/// Inverse of subset_id; throws UnknownElement on foreign labels.
std::uint64_t parse_subset_id(const FinitePoset& poset, const std::string& id);

/// All downsets of the poset as bitmasks, sorted by (popcount, id).
/// Throws SizeLimitExceeded once the count passes `limit`.
std::vector<std::uint64_t> enumerate_downsets(const FinitePoset& poset,
                                              std::size_t limit);

}  // namespace sck
