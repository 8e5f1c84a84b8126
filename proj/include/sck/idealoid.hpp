#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sck/poset.hpp"
#include "sck/rational.hpp"

namespace sck {

/// A set of pairs (a, b) with a <= b, closed under weakening on both sides:
/// a' <= a and b <= b' keeps (a', b') inside. Stored as bitmask rows over a
/// finite carrier.
class Idealoid {
 public:
  /// Validates a <= b for every pair (PairNotInOrder) and, depending on
  /// `close`, either absorption-closes the input or rejects non-closed input.
  static Idealoid from_pairs(
      PosetPtr poset,
      const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
      bool close);

  static Idealoid full_order(PosetPtr poset);
  static Idealoid strict_order(PosetPtr poset);
  static Idealoid empty(PosetPtr poset);
  static Idealoid from_rows(PosetPtr poset, std::vector<std::uint64_t> rows,
                            bool close);

  const PosetPtr& poset() const { return poset_; }
  bool contains(std::size_t a, std::size_t b) const {
    return (rows_[a] >> b) & 1u;
  }
  std::uint64_t row(std::size_t a) const { return rows_[a]; }
  const std::vector<std::uint64_t>& rows() const { return rows_; }
  std::size_t pair_count() const;
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  bool operator==(const Idealoid& other) const {
    return rows_ == other.rows_;
  }
  bool subset_of(const Idealoid& other) const;

  Idealoid() = default;  // empty-carrier placeholder; use the factories

 private:
  PosetPtr poset_;
  std::vector<std::uint64_t> rows_;
};

/// Absorption check on a raw pair set (the relation need not be closed).
bool is_idealoid(const FinitePoset& poset,
                 const std::vector<std::uint64_t>& rows);

/// Every (a, b) admits c with (a, c) and (c, b) inside.
bool is_subdivisible(const Idealoid& idealoid);

/// Largest subdivisible subidealoid: greatest fixpoint of
/// J -> {(a,b) in J : exists c with (a,c),(c,b) in J}, started from I.
Idealoid sd_core(const Idealoid& idealoid);

/// Interpolation chain indexed inside Q∩[0,1].
struct Chain {
  std::vector<Rat> index;           // strictly increasing, 0 and 1 included
  std::vector<std::size_t> values;  // one carrier element per index point
};

/// Iterated bisection of (a, b) within sd_core(I) to depth k; index points
/// are the Minkowski preimages of the dyadic grid m / 2^k. Interpolants are
/// resolved to the least carrier index. NotInCore when (a, b) is outside the
/// core.
Chain subdivision_chain(const Idealoid& idealoid, std::size_t a, std::size_t b,
                        unsigned depth);

bool chain_is_valid(const Idealoid& idealoid, const Chain& chain);

/// Ideal of a poset: nonempty, downward closed, directed subset.
struct IdealWitness {
  PosetPtr poset;
  std::uint64_t members = 0;
};

/// Throws NotAnIdeal when the witness is not an ideal.
void validate_ideal(const IdealWitness& witness);

/// True iff every p in J has a successor q in J with (p, q) in I.
bool is_restricted_ideal(const Idealoid& idealoid, const IdealWitness& witness);

/// Deterministic successor walk: p0 = seed, p_{i+1} = least q with
/// (p_i, q) in I. NoSuccessor when the restriction property fails.
std::vector<std::size_t> sequentialize(const Idealoid& idealoid,
                                       std::size_t seed, std::size_t count);

/// The arrow poset of P (elements a->a' with a <= a', componentwise order)
/// together with the induced idealoid: pairs of arrows whose sources and
/// targets are both related by I.
struct ArrowIdealoid {
  PosetPtr arrow_poset;
  Idealoid idealoid;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;  // (src, tgt) in P

  std::size_t arrow_index(std::size_t src, std::size_t tgt) const;
};

ArrowIdealoid arrow_idealoid(const Idealoid& idealoid);

/// Buffer certificate for a pair of arrows f = (a -> a'), g = (b -> b') in
/// the arrow idealoid: some c with a' <= c, b <= c and (c, b') in I. Returns
/// the least such c.
std::optional<std::size_t> buffer_check(const Idealoid& idealoid,
                                        std::pair<std::size_t, std::size_t> f,
                                        std::pair<std::size_t, std::size_t> g);

/// One-step interpolability of f -> g inside the arrow idealoid.
bool arrow_interpolable(const ArrowIdealoid& arrows, std::size_t f,
                        std::size_t g);

/// Mutual cofinality of two ideals (each member of one sits below a member
/// of the other).
bool mutually_cofinal(const FinitePoset& poset, std::uint64_t ideal_a,
                      std::uint64_t ideal_b);

}  // namespace sck
