#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sck/complexes.hpp"
#include "sck/space.hpp"

namespace sck {

/// Sheaf of rational complexes on a Tier-1 space: a complex per open and a
/// restriction chain map per comparable pair, strictly functorial.
class ComplexSheaf {
 public:
  static ComplexSheaf make(
      SpaceDescriptor space, std::vector<RationalComplex> values,
      std::map<std::pair<std::size_t, std::size_t>, std::map<int, Matrix>>
          restrictions);

  const SpaceDescriptor& space() const { return space_; }
  const RationalComplex& at(std::size_t open) const { return values_[open]; }
  ChainMap restriction(std::size_t open_u, std::size_t open_v) const;

 private:
  ComplexSheaf() = default;
  SpaceDescriptor space_ = SpaceDescriptor::builtin("dint");
  std::vector<RationalComplex> values_;
  std::map<std::pair<std::size_t, std::size_t>, std::map<int, Matrix>> res_;
};

struct StableExcisionReport {
  bool ok = false;
  std::string counterexample;
};

/// The empty open carries an acyclic complex and every binary square has an
/// acyclic total fiber.
StableExcisionReport is_stable_excisive(const ComplexSheaf& sheaf);

/// Cosheaf on the de Groot dual: a complex per dual open (lower set of the
/// original points) with covariant transition maps.
struct ComplexCosheaf {
  SpaceDescriptor dual_space = SpaceDescriptor::builtin("dint");
  std::vector<RationalComplex> values;  // per dual-open index
  std::map<std::pair<std::size_t, std::size_t>, std::map<int, Matrix>>
      extensions;  // (W, W') with W < W': VD(W) -> VD(W')

  ChainMap extension(std::size_t open_w, std::size_t open_w2) const;
};

/// Verdier dual: VD(F)(X∖K) = fib(F(X) -> F(U_K)) with U_K the minimal open
/// containing K (its up-closure; on finite carriers the colimit over opens
/// containing K collapses to this stage). NotStableExcisive when the input
/// fails excision.
ComplexCosheaf verdier_dual(const ComplexSheaf& sheaf);

StableExcisionReport cosheaf_stable_excisive(const ComplexCosheaf& cosheaf);

struct DoubleDualReport {
  bool ok = false;
  /// per open id: homology dimensions of F and of the double dual
  std::vector<std::pair<std::string, std::pair<std::map<int, std::size_t>,
                                               std::map<int, std::size_t>>>>
      per_open;
};

/// Applies the fiber construction and its cofiber inverse, then compares
/// homology dimensions degreewise per open.
DoubleDualReport verdier_double_dual_check(const ComplexSheaf& sheaf);

/// Seeded random stable-excisive sheaf: a pointwise diagram of truncations
/// of a small random complex, sections computed as the ordered-chain (Roos)
/// homotopy limit over the open's points; excision holds by construction.
ComplexSheaf random_stable_excisive_sheaf(PosetPtr points, std::uint64_t seed);

}  // namespace sck
