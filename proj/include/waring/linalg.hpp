#pragma once

// Exact dense linear algebra over the scalar fields of field.hpp.
//
// Elimination is Bareiss-style (fraction-free) with the leftmost nonzero entry
// of the current column as pivot, so every output is a deterministic function
// of the input matrix.

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "waring/field.hpp"

namespace waring {

using Index = Eigen::Index;

template <class F>
using Matrix = Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic>;
template <class F>
using Vector = Eigen::Matrix<F, Eigen::Dynamic, 1>;

template <class F>
struct Echelon {
  Matrix<F> rows;
  std::vector<Index> pivots;
  int sign = 1;  // parity of row swaps
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

template <class F>
struct RankResult {
  Index rank = 0;
  std::vector<Index> pivots;
  std::vector<Vector<F>> kernel;
};

template <class F>
Echelon<F> bareiss_echelon(Matrix<F> m) {
  if constexpr (!field_traits<F>::exact) {
    throw Error(ErrorCode::InexactField, "exact elimination called on approximate scalars");
  }
  Echelon<F> out;
  const Index rows = m.rows(), cols = m.cols();
  F prev(1);
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) {
      m.row(p).swap(m.row(r));
      out.sign = -out.sign;
    }
    const F pivot = m(r, c);
    for (Index i = r + 1; i < rows; ++i) {
      const F factor = m(i, c);
      if (is_zero(factor)) {
        for (Index j = c + 1; j < cols; ++j)
          if (!is_zero(m(i, j))) m(i, j) = pivot * m(i, j) / prev;
        continue;
      }
      for (Index j = c + 1; j < cols; ++j) {
        if (is_zero(m(r, j))) {
          if (!is_zero(m(i, j))) m(i, j) = pivot * m(i, j) / prev;
        } else {
          m(i, j) = (pivot * m(i, j) - factor * m(r, j)) / prev;
        }
      }
      m(i, c) = F(0);
    }
    prev = pivot;
    out.pivots.push_back(c);
    ++r;
  }
  out.rows = std::move(m);
  return out;
}

/// Reduced row echelon form (pivots normalized to one); returns pivot columns.
template <class F>
Matrix<F> rref(const Matrix<F>& m, std::vector<Index>* pivots_out = nullptr) {
  Echelon<F> e = bareiss_echelon<F>(m);
  Matrix<F>& r = e.rows;
  const Index rank = e.rank();
  for (Index i = rank; i-- > 0;) {
    const Index pc = e.pivots[static_cast<std::size_t>(i)];
    const F inv = F(1) / r(i, pc);
    for (Index j = pc; j < r.cols(); ++j)
      if (!is_zero(r(i, j))) r(i, j) = r(i, j) * inv;
    for (Index k = 0; k < i; ++k) {
      const F factor = r(k, pc);
      if (is_zero(factor)) continue;
      for (Index j = pc; j < r.cols(); ++j)
        if (!is_zero(r(i, j))) r(k, j) = r(k, j) - factor * r(i, j);
    }
  }
  if (pivots_out) *pivots_out = e.pivots;
  return r.topRows(rank);
}

/// Rank and a kernel basis. Kernel vectors are indexed by the free columns in
/// increasing order; each has a one at its free column.
template <class F>
RankResult<F> exact_rank(const Matrix<F>& m) {
  RankResult<F> out;
  const Matrix<F> r = rref<F>(m, &out.pivots);
  out.rank = static_cast<Index>(out.pivots.size());
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index p : out.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  for (Index f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vector<F> v = Vector<F>::Constant(m.cols(), F(0));
    v(f) = F(1);
    for (Index i = 0; i < out.rank; ++i) {
      if (!is_zero(r(i, f))) v(out.pivots[static_cast<std::size_t>(i)]) = -r(i, f);
    }
    out.kernel.push_back(std::move(v));
  }
  return out;
}

template <class F>
Index rank_of(const Matrix<F>& m) {
  return bareiss_echelon<F>(m).rank();
}

template <class F>
F determinant(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  if (m.rows() == 0) return F(1);
  Echelon<F> e = bareiss_echelon<F>(m);
  if (e.rank() < m.rows()) return F(0);
  const F last = e.rows(m.rows() - 1, m.cols() - 1);
  return e.sign > 0 ? last : F(0) - last;
}

/// One solution of a x = b with free variables set to zero, or nullopt.
template <class F>
std::optional<Vector<F>> solve(const Matrix<F>& a, const Vector<F>& b) {
  Matrix<F> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  std::vector<Index> pivots;
  const Matrix<F> r = rref<F>(aug, &pivots);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vector<F> x = Vector<F>::Constant(a.cols(), F(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x(pivots[i]) = r(static_cast<Index>(i), a.cols());
  return x;
}

template <class F>
Matrix<F> stack_rows(const std::vector<Vector<F>>& rows, Index cols) {
  Matrix<F> m(static_cast<Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Index>(i)) = rows[i].transpose();
  return m;
}

template <class F>
Matrix<F> stack_columns(const std::vector<Vector<F>>& cols, Index rows) {
  Matrix<F> m(rows, static_cast<Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) m.col(static_cast<Index>(j)) = cols[j];
  return m;
}

/// Tolerance-based rank for approximate matrices (never a certificate).
Index numeric_rank(const Eigen::MatrixXcd& m, double tol);

}  // namespace waring
