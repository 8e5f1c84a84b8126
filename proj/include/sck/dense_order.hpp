#pragma once

#include <string>
#include <vector>

#include "sck/rational.hpp"

namespace sck {

/// A countable dense linear order presented by decision procedures: exact
/// order on rationals, an enumeration, density witnesses, and endpoint
/// flags. Witnesses are chosen Stern-Brocot-style (simplest element of the
/// kind strictly inside the interval), which keeps back-and-forth runs
/// deterministic and, for the dyadic/rational pair, aligned with the
/// question-mark function.
class DenseOrderHandle {
 public:
  /// "rational[0,1]", "rational(0,1)", "dyadic[0,1]", "dyadic(0,1)".
  static DenseOrderHandle named(const std::string& name);

  const std::string& name() const { return name_; }
  bool has_min() const { return has_min_; }
  bool has_max() const { return has_max_; }
  Rat min_value() const { return Rat(0); }
  Rat max_value() const { return Rat(1); }

  /// i-th element; endpoints first when present, then breadth-first through
  /// the Stern-Brocot tree (rationals) or by dyadic depth (dyadics).
  Rat nth(std::size_t i) const;

  Rat between(const Rat& a, const Rat& b) const;
  Rat above(const Rat& a) const;  // strictly above, inside the carrier
  Rat below(const Rat& b) const;  // strictly below, inside the carrier

 private:
  std::string name_;
  bool dyadic_ = false;
  bool has_min_ = false, has_max_ = false;
};

struct PartialIso {
  std::vector<std::pair<Rat, Rat>> pairs;  // sorted, order-preserving
};

/// Cantor back-and-forth between two handles, `steps` insertions alternating
/// sides (endpoints are matched up front and not counted). EndpointMismatch
/// when the endpoint patterns differ.
PartialIso back_and_forth(const DenseOrderHandle& left,
                          const DenseOrderHandle& right, std::size_t steps);

}  // namespace sck
