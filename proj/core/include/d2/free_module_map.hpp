#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "d2/group_ring.hpp"
#include "d2/int_matrix.hpp"

namespace d2 {

/// Homomorphism of free right Z[G]-modules Z[G]^dom -> Z[G]^cod.
///
/// The domain basis vector E_j maps to sum_i e_i * m(i, j): scalars act on
/// the right, so composition multiplies matrices with ring entries in the
/// written order and each block of the integer expansion is a left regular
/// representation.
class FreeModuleMap {
 public:
  FreeModuleMap(DihedralGroup group, std::size_t cod_rank, std::size_t dom_rank);
  /// Entries given row by row; throws DimensionMismatch on ragged input.
  FreeModuleMap(DihedralGroup group, std::vector<std::vector<RingElement>> rows, std::size_t dom_rank);

  static FreeModuleMap identity(const DihedralGroup& group, std::size_t rank);
  static FreeModuleMap zero(const DihedralGroup& group, std::size_t cod_rank, std::size_t dom_rank) {
    return FreeModuleMap(group, cod_rank, dom_rank);
  }
  /// Diagonal map with the given entries.
  static FreeModuleMap diagonal(const DihedralGroup& group, const std::vector<RingElement>& entries);

  const DihedralGroup& group() const noexcept { return group_; }
  std::size_t dom_rank() const noexcept { return dom_rank_; }
  std::size_t cod_rank() const noexcept { return cod_rank_; }

  const RingElement& at(std::size_t i, std::size_t j) const { return entries_[i * dom_rank_ + j]; }
  RingElement& at(std::size_t i, std::size_t j) { return entries_[i * dom_rank_ + j]; }

  bool is_zero() const;

  /// Appends zero columns (new domain generators mapping to 0).
  FreeModuleMap with_zero_columns(std::size_t count) const;
  /// Removes domain column j.
  FreeModuleMap without_column(std::size_t j) const;

  friend bool operator==(const FreeModuleMap& x, const FreeModuleMap& y);
  friend FreeModuleMap operator+(const FreeModuleMap& x, const FreeModuleMap& y);
  friend FreeModuleMap operator-(const FreeModuleMap& x);

  std::string to_string() const;

 private:
  DihedralGroup group_;
  std::size_t cod_rank_;
  std::size_t dom_rank_;
  std::vector<RingElement> entries_;
};

/// Matrix of the composite f after g. Throws DimensionMismatch unless
/// f.dom_rank() == g.cod_rank().
FreeModuleMap compose(const FreeModuleMap& f, const FreeModuleMap& g);

/// Integer expansion: (cod_rank * 4n) x (dom_rank * 4n) with block (i, j)
/// equal to regular_rep(m(i, j), order).
IntMatrix to_integer_matrix(const FreeModuleMap& f, BasisOrder order = BasisOrder::Canonical);

/// Integer matrix of the right action x -> x g on Z[G]^rank (block diagonal).
IntMatrix right_action_matrix(const DihedralGroup& group, std::size_t rank, GroupElement g,
                              BasisOrder order = BasisOrder::Canonical);

/// Integer determinant of a square map computed from its diagonal blocks when
/// the ring matrix is upper or lower triangular; empty when it is neither.
std::optional<Integer> block_triangular_det(const FreeModuleMap& f);

}  // namespace d2
