#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sck/poset.hpp"

namespace sck {

/// Finite lattice. Two storage forms behind one interface:
///   - mask form: elements are subsets (downsets of a base poset) and
///     join/meet are union/intersection, so very large carriers stay cheap;
///   - table form: explicit join/meet tables, needed for hand-built
///     non-distributive examples.
class FiniteLattice {
 public:
  static constexpr std::size_t kDefaultDownsetLimit = 1u << 20;

  /// Lattice of all downsets of `base`, ordered by inclusion.
  static FiniteLattice downsets_of(PosetPtr base, std::size_t limit);

  /// Explicit lattice from an order; join/meet computed as unique
  /// least-upper/greatest-lower bounds, NotALattice when not unique.
  static FiniteLattice from_order(std::vector<std::string> labels,
                                  std::vector<std::uint64_t> le_rows);

  /// Mask-form lattice over a named subset family (each element one mask of
  /// `base` points); family must be closed under union and intersection.
  static FiniteLattice from_masks(PosetPtr base,
                                  std::vector<std::uint64_t> masks);

  std::size_t size() const { return ids_.size(); }
  bool le(std::size_t a, std::size_t b) const;
  std::size_t join(std::size_t a, std::size_t b) const;
  std::size_t meet(std::size_t a, std::size_t b) const;
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

  const std::string& id(std::size_t i) const { return ids_[i]; }
  std::size_t index_of_id(const std::string& id) const;  // UnknownElement

  bool mask_form() const { return !masks_.empty(); }
  std::uint64_t mask(std::size_t i) const { return masks_[i]; }
  std::optional<std::size_t> index_of_mask(std::uint64_t m) const;
  const PosetPtr& base() const { return base_; }

  /// Restriction to a subset of elements; requires closure under join/meet
  /// and is checked.
  FiniteLattice sublattice(const std::vector<std::size_t>& keep) const;

  /// The element order as a FinitePoset (labels = element ids).
  FinitePoset order_poset() const;

 private:
  FiniteLattice() = default;
  void finish_tables();

  PosetPtr base_;                          // mask form only
  std::vector<std::uint64_t> masks_;       // mask form only
  std::unordered_map<std::uint64_t, std::size_t> mask_index_;
  std::vector<std::string> ids_;
  std::vector<std::vector<std::uint32_t>> join_, meet_;  // table form only
  std::vector<std::uint64_t> le_rows_;                   // table form only
  std::size_t bottom_ = 0, top_ = 0;
};

/// x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z) over all triples. Mask-form lattices
/// distribute structurally (set operations); the loop is still run when the
/// carrier is small enough to be worth it.
bool is_distributive(const FiniteLattice& lattice);

/// Order-isomorphism search (small carriers); used for the idempotence and
/// identity checks on compactification outputs.
bool lattices_isomorphic(const FiniteLattice& a, const FiniteLattice& b);

}  // namespace sck
