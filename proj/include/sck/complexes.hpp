#pragma once

#include <map>
#include <vector>

#include "sck/rational.hpp"

namespace sck {

/// Dense rational matrix, rows x cols.
using Matrix = std::vector<std::vector<Rat>>;

Matrix zero_matrix(std::size_t rows, std::size_t cols);
Matrix identity_matrix(std::size_t n);
Matrix matrix_product(const Matrix& a, const Matrix& b);
std::size_t matrix_rank(Matrix m);  // exact Gaussian elimination
bool matrix_is_zero(const Matrix& m);

/// Bounded cochain complex of finite-dimensional rational vector spaces;
/// differentials raise degree, d∘d = 0 enforced at construction
/// (DifferentialSquareNonzero).
class RationalComplex {
 public:
  static RationalComplex zero();
  static RationalComplex from_parts(std::map<int, std::size_t> dims,
                                    std::map<int, Matrix> differentials);

  std::size_t dim(int degree) const;
  const Matrix& differential(int degree) const;  // dim(k+1) x dim(k)
  int min_degree() const { return min_deg_; }
  int max_degree() const { return max_deg_; }
  std::size_t total_dim() const;

  /// Dimensions of cohomology per degree via rank-nullity.
  std::map<int, std::size_t> homology() const;
  bool is_acyclic() const;

 private:
  std::map<int, std::size_t> dims_;
  std::map<int, Matrix> diffs_;
  int min_deg_ = 0, max_deg_ = -1;
  mutable Matrix empty_;
};

/// Degreewise map of complexes commuting with the differentials (checked).
struct ChainMap {
  RationalComplex source;
  RationalComplex target;
  std::map<int, Matrix> mats;  // target.dim(k) x source.dim(k)

  static ChainMap make(RationalComplex source, RationalComplex target,
                       std::map<int, Matrix> mats);
  Matrix mat(int degree) const;
};

ChainMap identity_chain_map(const RationalComplex& c);
ChainMap zero_chain_map(RationalComplex source, RationalComplex target);
ChainMap compose(const ChainMap& second, const ChainMap& first);

/// fib(f)^n = X^n ⊕ Y^{n-1}, d(x, y) = (dx, f(x) - dy).
RationalComplex mapping_fiber(const ChainMap& f);
/// cofib(f)^n = X^{n+1} ⊕ Y^n, d(x, y) = (-dx, f(x) + dy).
RationalComplex mapping_cofiber(const ChainMap& f);

/// The induced map fib(a: X->Y) -> fib(b: Z->W) from a strictly commuting
/// square with legs left: X->Z and right: Y->W.
ChainMap fiber_functor_map(const ChainMap& a, const ChainMap& b,
                           const ChainMap& left, const ChainMap& right);

/// Total fiber of a strictly commuting square
///     A --> B
///     |     |
///     C --> D
/// as fib( fib(A->B) -> fib(C->D) ); acyclic iff the square is bicartesian.
RationalComplex total_fiber(const ChainMap& top, const ChainMap& bottom,
                            const ChainMap& left, const ChainMap& right);

/// Direct sum with the canonical projections kept implicit.
RationalComplex direct_sum(const RationalComplex& a, const RationalComplex& b);

}  // namespace sck
