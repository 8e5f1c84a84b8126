#include "sck/complexes.hpp"

#include <algorithm>

#include "sck/error.hpp"

namespace sck {

Matrix zero_matrix(std::size_t rows, std::size_t cols) {
  return Matrix(rows, std::vector<Rat>(cols, Rat(0)));
}

Matrix identity_matrix(std::size_t n) {
  Matrix m = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix matrix_product(const Matrix& a, const Matrix& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = a.empty() ? 0 : a[0].size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  if (inner != b.size()) fail("ParseError", "matrix dimension mismatch");
  Matrix out = zero_matrix(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

namespace {

Rat entry(const Matrix& m, std::size_t i, std::size_t j) {
  if (i < m.size() && j < m[i].size()) return m[i][j];
  return Rat(0);
}

/// Product with the shapes supplied by the caller; empty matrices stand for
/// zero blocks whose dimensions the raw representation cannot carry.
Matrix mat_mul(const Matrix& a, const Matrix& b, std::size_t rows,
               std::size_t mid, std::size_t cols) {
  Matrix out = zero_matrix(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < mid; ++k) {
      const Rat av = entry(a, i, k);
      if (av == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += av * entry(b, k, j);
    }
  return out;
}

}  // namespace

std::size_t matrix_rank(Matrix m) {
  if (m.empty() || m[0].empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rat factor = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c)
        m[r][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

bool matrix_is_zero(const Matrix& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

RationalComplex RationalComplex::zero() {
  return RationalComplex();
}

RationalComplex RationalComplex::from_parts(
    std::map<int, std::size_t> dims, std::map<int, Matrix> differentials) {
  RationalComplex c;
  for (auto it = dims.begin(); it != dims.end();) {
    if (it->second == 0)
      it = dims.erase(it);
    else
      ++it;
  }
  c.dims_ = std::move(dims);
  if (!c.dims_.empty()) {
    c.min_deg_ = c.dims_.begin()->first;
    c.max_deg_ = c.dims_.rbegin()->first;
  }
  for (auto& [deg, mat] : differentials) {
    if (mat.empty() || matrix_is_zero(mat)) continue;
    if (mat.size() != c.dim(deg + 1) ||
        (mat.empty() ? 0 : mat[0].size()) != c.dim(deg))
      fail("ParseError", "differential shape mismatch at degree " +
                             std::to_string(deg));
    c.diffs_[deg] = std::move(mat);
  }
  for (const auto& [deg, mat] : c.diffs_) {
    auto next = c.diffs_.find(deg + 1);
    if (next == c.diffs_.end()) continue;
    if (!matrix_is_zero(matrix_product(next->second, mat)))
      fail("DifferentialSquareNonzero",
           "d∘d is nonzero at degree " + std::to_string(deg));
  }
  return c;
}

std::size_t RationalComplex::dim(int degree) const {
  auto it = dims_.find(degree);
  return it == dims_.end() ? 0 : it->second;
}

const Matrix& RationalComplex::differential(int degree) const {
  auto it = diffs_.find(degree);
  if (it != diffs_.end()) return it->second;
  empty_ = zero_matrix(dim(degree + 1), dim(degree));
  return empty_;
}

std::size_t RationalComplex::total_dim() const {
  std::size_t t = 0;
  for (const auto& [deg, n] : dims_) t += n;
  return t;
}

std::map<int, std::size_t> RationalComplex::homology() const {
  std::map<int, std::size_t> out;
  for (int deg = min_deg_; deg <= max_deg_; ++deg) {
    const std::size_t n = dim(deg);
    if (n == 0) continue;
    const std::size_t rank_out = matrix_rank(differential(deg));
    const std::size_t rank_in = matrix_rank(differential(deg - 1));
    const std::size_t h = n - rank_out - rank_in;
    if (h) out[deg] = h;
  }
  return out;
}

bool RationalComplex::is_acyclic() const { return homology().empty(); }

ChainMap ChainMap::make(RationalComplex source, RationalComplex target,
                        std::map<int, Matrix> mats) {
  ChainMap f;
  f.source = std::move(source);
  f.target = std::move(target);
  for (auto& [deg, mat] : mats) {
    if (mat.size() != f.target.dim(deg) ||
        (mat.empty() ? 0 : mat[0].size()) != f.source.dim(deg))
      fail("ParseError",
           "chain map shape mismatch at degree " + std::to_string(deg));
    f.mats[deg] = std::move(mat);
  }
  const int lo = std::min(f.source.min_degree(), f.target.min_degree());
  const int hi = std::max(f.source.max_degree(), f.target.max_degree());
  for (int deg = lo; deg <= hi; ++deg) {
    // Both composites are dim_target(deg+1) x dim_source(deg).
    Matrix lhs = mat_mul(f.target.differential(deg), f.mat(deg),
                         f.target.dim(deg + 1), f.target.dim(deg),
                         f.source.dim(deg));
    Matrix rhs = mat_mul(f.mat(deg + 1), f.source.differential(deg),
                         f.target.dim(deg + 1), f.source.dim(deg + 1),
                         f.source.dim(deg));
    if (lhs != rhs)
      fail("ParseError",
           "chain map does not commute with the differentials at degree " +
               std::to_string(deg));
  }
  return f;
}

Matrix ChainMap::mat(int degree) const {
  auto it = mats.find(degree);
  if (it != mats.end()) return it->second;
  return zero_matrix(target.dim(degree), source.dim(degree));
}

ChainMap identity_chain_map(const RationalComplex& c) {
  std::map<int, Matrix> mats;
  for (int deg = c.min_degree(); deg <= c.max_degree(); ++deg)
    if (c.dim(deg)) mats[deg] = identity_matrix(c.dim(deg));
  return ChainMap::make(c, c, std::move(mats));
}

ChainMap zero_chain_map(RationalComplex source, RationalComplex target) {
  return ChainMap::make(std::move(source), std::move(target), {});
}

ChainMap compose(const ChainMap& second, const ChainMap& first) {
  std::map<int, Matrix> mats;
  const int lo = std::min(first.source.min_degree(), second.target.min_degree());
  const int hi = std::max(first.source.max_degree(), second.target.max_degree());
  for (int deg = lo; deg <= hi; ++deg) {
    if (second.target.dim(deg) == 0 || first.source.dim(deg) == 0) continue;
    mats[deg] = matrix_product(second.mat(deg), first.mat(deg));
  }
  return ChainMap::make(first.source, second.target, std::move(mats));
}

namespace {

/// Assembles the two-block complex with blocks X^{n+shift} ⊕ Y^{n-1+shift'}
/// used by both fiber and cofiber.
struct BlockLayout {
  // for degree n: x-block from X at degree n+dx, y-block from Y at n+dy
  int dx, dy;
};

RationalComplex two_block_complex(const ChainMap& f, BlockLayout lay,
                                  int sign_dx, int sign_f, int sign_dy) {
  const auto& x = f.source;
  const auto& y = f.target;
  std::map<int, std::size_t> dims;
  int lo = std::min(x.min_degree() - lay.dx, y.min_degree() - lay.dy) - 1;
  int hi = std::max(x.max_degree() - lay.dx, y.max_degree() - lay.dy) + 1;
  for (int n = lo; n <= hi; ++n) {
    std::size_t d = x.dim(n + lay.dx) + y.dim(n + lay.dy);
    if (d) dims[n] = d;
  }
  std::map<int, Matrix> diffs;
  for (int n = lo; n < hi; ++n) {
    const std::size_t xs = x.dim(n + lay.dx), ys = y.dim(n + lay.dy);
    const std::size_t xt = x.dim(n + 1 + lay.dx), yt = y.dim(n + 1 + lay.dy);
    if ((xs + ys) == 0 || (xt + yt) == 0) continue;
    Matrix m = zero_matrix(xt + yt, xs + ys);
    const Matrix dxm = x.differential(n + lay.dx);
    for (std::size_t i = 0; i < xt; ++i)
      for (std::size_t j = 0; j < xs; ++j)
        m[i][j] = Rat(sign_dx) * dxm[i][j];
    // f goes X^{n+dx} -> Y^{n+dx}; it lands in the y-block exactly when
    // n+1+dy == n+dx, i.e. dy == dx - 1, which both layouts satisfy.
    const Matrix fm = f.mat(n + lay.dx);
    for (std::size_t i = 0; i < yt; ++i)
      for (std::size_t j = 0; j < xs; ++j)
        m[xt + i][j] = Rat(sign_f) * fm[i][j];
    const Matrix dym = y.differential(n + lay.dy);
    for (std::size_t i = 0; i < yt; ++i)
      for (std::size_t j = 0; j < ys; ++j)
        m[xt + i][xs + j] = Rat(sign_dy) * dym[i][j];
    diffs[n] = std::move(m);
  }
  return RationalComplex::from_parts(std::move(dims), std::move(diffs));
}

}  // namespace

RationalComplex mapping_fiber(const ChainMap& f) {
  return two_block_complex(f, {0, -1}, +1, +1, -1);
}

RationalComplex mapping_cofiber(const ChainMap& f) {
  return two_block_complex(f, {+1, 0}, -1, +1, +1);
}

ChainMap fiber_functor_map(const ChainMap& a, const ChainMap& b,
                           const ChainMap& left, const ChainMap& right) {
  RationalComplex fib_a = mapping_fiber(a);
  RationalComplex fib_b = mapping_fiber(b);
  std::map<int, Matrix> mats;
  const int lo = std::min(fib_a.min_degree(), fib_b.min_degree());
  const int hi = std::max(fib_a.max_degree(), fib_b.max_degree());
  for (int n = lo; n <= hi; ++n) {
    const std::size_t rows = fib_b.dim(n), cols = fib_a.dim(n);
    if (rows == 0 || cols == 0) continue;
    Matrix m = zero_matrix(rows, cols);
    const std::size_t xs = a.source.dim(n), xt = b.source.dim(n);
    const Matrix lm = left.mat(n);
    for (std::size_t i = 0; i < xt; ++i)
      for (std::size_t j = 0; j < xs; ++j) m[i][j] = lm[i][j];
    const Matrix rm = right.mat(n - 1);
    for (std::size_t i = 0; i < b.target.dim(n - 1); ++i)
      for (std::size_t j = 0; j < a.target.dim(n - 1); ++j)
        m[xt + i][xs + j] = rm[i][j];
    mats[n] = std::move(m);
  }
  return ChainMap::make(fib_a, fib_b, std::move(mats));
}

RationalComplex total_fiber(const ChainMap& top, const ChainMap& bottom,
                            const ChainMap& left, const ChainMap& right) {
  return mapping_fiber(fiber_functor_map(top, bottom, left, right));
}

RationalComplex direct_sum(const RationalComplex& a,
                           const RationalComplex& b) {
  std::map<int, std::size_t> dims;
  std::map<int, Matrix> diffs;
  const int lo = std::min(a.min_degree(), b.min_degree());
  const int hi = std::max(a.max_degree(), b.max_degree());
  for (int n = lo; n <= hi; ++n) {
    std::size_t d = a.dim(n) + b.dim(n);
    if (d) dims[n] = d;
  }
  for (int n = lo; n < hi; ++n) {
    const std::size_t rows = a.dim(n + 1) + b.dim(n + 1);
    const std::size_t cols = a.dim(n) + b.dim(n);
    if (rows == 0 || cols == 0) continue;
    Matrix m = zero_matrix(rows, cols);
    const Matrix& da = a.differential(n);
    for (std::size_t i = 0; i < a.dim(n + 1); ++i)
      for (std::size_t j = 0; j < a.dim(n); ++j) m[i][j] = da[i][j];
    const Matrix& db = b.differential(n);
    for (std::size_t i = 0; i < b.dim(n + 1); ++i)
      for (std::size_t j = 0; j < b.dim(n); ++j)
        m[a.dim(n + 1) + i][a.dim(n) + j] = db[i][j];
    diffs[n] = std::move(m);
  }
  return RationalComplex::from_parts(std::move(dims), std::move(diffs));
}

}  // namespace sck
