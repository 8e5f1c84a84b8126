#pragma once

#include "sck/rational.hpp"

namespace sck {

/// Minkowski question-mark function on Q∩[0,1], computed from the continued
/// fraction expansion. Order-preserving bijection onto the dyadics in [0,1].
Rat minkowski_forward(const Rat& x);

/// Inverse on dyadics, computed by the Stern-Brocot walk.
/// NonDyadicInput when the denominator is not a power of two.
Rat minkowski_inverse(const Rat& y);

}  // namespace sck
