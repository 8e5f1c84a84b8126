#pragma once

#include <cstdint>
#include <vector>

#include "sck/poset.hpp"

namespace sck {

/// All labeled posets on {0..n-1} as le bitmask row vectors, each exactly
/// once. Grown by inserting element k into every poset on k elements with a
/// compatible (strictly-below, strictly-above) pair of sets.
std::vector<std::vector<std::uint64_t>> all_labeled_posets(std::size_t n);

/// One representative per isomorphism class, labels "p0", "p1", ...
std::vector<FinitePoset> posets_up_to_iso(std::size_t n);

/// All ideals (nonempty, downward closed, directed) of a poset, as masks.
std::vector<std::uint64_t> enumerate_ideals(const FinitePoset& poset);

/// All upsets of a poset, as masks.
std::vector<std::uint64_t> enumerate_upsets(const FinitePoset& poset);

}  // namespace sck
