#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "d2/integer.hpp"

namespace d2 {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Integer> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<Integer> column(std::size_t c) const;

  IntMatrix transpose() const;
  bool is_zero() const;

  /// Rows [first, first + count).
  IntMatrix row_block(std::size_t first, std::size_t count) const;
  /// Columns [first, first + count).
  IntMatrix column_block(std::size_t first, std::size_t count) const;
  /// Copies `block` into this matrix with its top-left corner at (r, c).
  void set_block(std::size_t r, std::size_t c, const IntMatrix& block);

  /// Simultaneous row and column permutation: result(p, q) = M(perm[p], perm[q]).
  IntMatrix permuted(std::span<const std::size_t> perm) const;

  friend bool operator==(const IntMatrix& x, const IntMatrix& y);
  friend IntMatrix operator+(const IntMatrix& x, const IntMatrix& y);
  friend IntMatrix operator-(const IntMatrix& x, const IntMatrix& y);
  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend IntMatrix operator*(const Integer& s, const IntMatrix& x);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Block-diagonal matrix with the given square or rectangular blocks.
IntMatrix block_diagonal(std::span<const IntMatrix> blocks);

}  // namespace d2
