#include "d2/f2_matrix.hpp"

#include <utility>

#include "d2/errors.hpp"

namespace d2 {

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

F2Matrix F2Matrix::transpose() const {
  F2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, get(r, c));
  return t;
}

bool F2Matrix::is_zero() const {
  for (auto b : bits_)
    if (b) return false;
  return true;
}

F2Matrix F2Matrix::hconcat(const F2Matrix& other) const {
  if (rows_ != other.rows_) throw DimensionMismatch("hconcat of F2 matrices with different row counts");
  F2Matrix out(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.set(r, c, get(r, c));
    for (std::size_t c = 0; c < other.cols_; ++c) out.set(r, cols_ + c, other.get(r, c));
  }
  return out;
}

F2Matrix operator*(const F2Matrix& x, const F2Matrix& y) {
  if (x.cols_ != y.rows_) throw DimensionMismatch("F2 matrix product with incompatible shapes");
  F2Matrix out(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k)
      if (x.get(i, k))
        for (std::size_t j = 0; j < y.cols_; ++j)
          if (y.get(k, j)) out.set(i, j, !out.get(i, j));
  return out;
}

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(F2Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && !a.get(p, col)) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < a.cols(); ++c) {
        bool t = a.get(p, c);
        a.set(p, c, a.get(row, c));
        a.set(row, c, t);
      }
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || !a.get(r, col)) continue;
      for (std::size_t c = col; c < a.cols(); ++c)
        if (a.get(row, c)) a.set(r, c, !a.get(r, c));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t f2_rank(const F2Matrix& m) {
  F2Matrix a = m;
  return rref(a).size();
}

F2Matrix f2_left_nullspace(const F2Matrix& m) {
  // phi M = 0  <=>  M^T phi^T = 0
  F2Matrix a = m.transpose();
  const auto pivots = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  F2Matrix out(n - pivots.size(), n);
  std::size_t k = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    out.set(k, free, true);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (a.get(i, free)) out.set(k, pivots[i], true);
    ++k;
  }
  return out;
}

}  // namespace d2
