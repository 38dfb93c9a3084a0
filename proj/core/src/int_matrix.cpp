#include "d2/int_matrix.hpp"

#include "d2/errors.hpp"

namespace d2 {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Integer> IntMatrix::column(std::size_t c) const {
  std::vector<Integer> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : data_)
    if (sgn(v) != 0) return false;
  return true;
}

IntMatrix IntMatrix::row_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw DimensionMismatch("row block out of range");
  IntMatrix out(count, cols_);
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(first + r, c);
  return out;
}

IntMatrix IntMatrix::column_block(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw DimensionMismatch("column block out of range");
  IntMatrix out(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
  return out;
}

void IntMatrix::set_block(std::size_t r, std::size_t c, const IntMatrix& block) {
  if (r + block.rows() > rows_ || c + block.cols() > cols_) throw DimensionMismatch("block out of range");
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) (*this)(r + i, c + j) = block(i, j);
}

IntMatrix IntMatrix::permuted(std::span<const std::size_t> perm) const {
  if (!is_square() || perm.size() != rows_) throw DimensionMismatch("permutation size does not match matrix");
  IntMatrix out(rows_, cols_);
  for (std::size_t p = 0; p < rows_; ++p)
    for (std::size_t q = 0; q < cols_; ++q) out(p, q) = (*this)(perm[p], perm[q]);
  return out;
}

bool operator==(const IntMatrix& x, const IntMatrix& y) {
  return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
}

IntMatrix operator+(const IntMatrix& x, const IntMatrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw DimensionMismatch("matrix sum of different shapes");
  IntMatrix out = x;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += y.data_[k];
  return out;
}

IntMatrix operator-(const IntMatrix& x, const IntMatrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw DimensionMismatch("matrix difference of different shapes");
  IntMatrix out = x;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= y.data_[k];
  return out;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols_ != y.rows_) throw DimensionMismatch("matrix product with incompatible shapes");
  IntMatrix out(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i) {
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const Integer& xik = x(i, k);
      if (sgn(xik) == 0) continue;
      for (std::size_t j = 0; j < y.cols_; ++j) {
        const Integer& ykj = y(k, j);
        if (sgn(ykj) != 0) out(i, j) += xik * ykj;
      }
    }
  }
  return out;
}

IntMatrix operator*(const Integer& s, const IntMatrix& x) {
  IntMatrix out = x;
  for (auto& v : out.data_) v *= s;
  return out;
}

IntMatrix block_diagonal(std::span<const IntMatrix> blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  IntMatrix out(rows, cols);
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    out.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

}  // namespace d2
