#pragma once

#include <cstddef>
#include <vector>

#include "d2/int_matrix.hpp"

namespace d2 {

/// Largest row or column count accepted by the elimination routines.
inline constexpr std::size_t kDefaultDimensionLimit = 2000;

std::size_t dimension_limit() noexcept;
void set_dimension_limit(std::size_t limit) noexcept;
/// Throws SizeGuardExceeded if either dimension of `m` exceeds dimension_limit().
void check_dimension(const IntMatrix& m, const char* operation);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer det(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Row-style Hermite normal form H = U * M.
///
/// Nonzero rows of H come first; each has a positive leading entry strictly to
/// the right of the leading entry of the row above, and the entries above a
/// leading entry lie in [0, leading entry). U is unimodular.
struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

HermiteForm hnf(const IntMatrix& m);

/// Nonzero elementary divisors d1 | d2 | ... of the Smith normal form.
std::vector<Integer> snf(const IntMatrix& m);

}  // namespace d2
