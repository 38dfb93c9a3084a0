#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace d2 {

/// Dense matrix over the field with two elements.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

  static F2Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return bits_[r * cols_ + c] != 0; }
  void set(std::size_t r, std::size_t c, bool v) { bits_[r * cols_ + c] = v ? 1 : 0; }

  F2Matrix transpose() const;
  bool is_zero() const;
  /// Horizontal concatenation [this | other].
  F2Matrix hconcat(const F2Matrix& other) const;

  friend bool operator==(const F2Matrix&, const F2Matrix&) = default;
  friend F2Matrix operator*(const F2Matrix& x, const F2Matrix& y);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

std::size_t f2_rank(const F2Matrix& m);

/// Rows form a basis of {phi : phi M = 0}; there are rows(M) - rank(M) of them.
F2Matrix f2_left_nullspace(const F2Matrix& m);

}  // namespace d2
