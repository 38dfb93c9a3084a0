#pragma once

#include <cstddef>
#include <vector>

#include "d2/int_matrix.hpp"

namespace d2 {

/// A sublattice of Z^N given by the linearly independent columns of a basis matrix.
class Lattice {
 public:
  /// Throws InvariantViolation unless the columns of `basis` are linearly independent.
  explicit Lattice(IntMatrix basis);
  /// Empty lattice in Z^N.
  static Lattice zero(std::size_t ambient_dimension);
  /// The lattice spanned by the (possibly dependent) columns of `generators`,
  /// with its canonical Hermite basis.
  static Lattice span(const IntMatrix& generators);

  std::size_t ambient_dimension() const noexcept { return basis_.rows(); }
  std::size_t rank() const noexcept { return basis_.cols(); }
  const IntMatrix& basis() const noexcept { return basis_; }

  /// Row Hermite form of the transposed basis: equal iff the lattices are equal.
  IntMatrix canonical_form() const;

 private:
  struct Unchecked {};
  Lattice(IntMatrix basis, Unchecked) : basis_(std::move(basis)) {}

  IntMatrix basis_;
};

/// Saturated basis of {x in Z^cols : M x = 0}, in canonical Hermite form.
Lattice kernel_basis(const IntMatrix& m);

/// Column span of `m`.
inline Lattice image_lattice(const IntMatrix& m) { return Lattice::span(m); }

/// True iff both bases span the same sublattice. Throws DimensionMismatch on
/// different ambient dimensions.
bool lattice_equal(const Lattice& x, const Lattice& y);

/// True iff the lattice equals the intersection of its rational span with Z^N.
bool is_saturated(const Lattice& l);

/// The integer matrix C with B C = vectors, B the basis of `l`.
///
/// Throws InvariantViolation if some column is outside the rational span of
/// the lattice and NonIntegral if it lies in the span but not in the lattice.
IntMatrix express_in_lattice(const IntMatrix& vectors, const Lattice& l);

/// Matrix C of the restriction of M to an invariant lattice L: M B = B C.
IntMatrix restrict_to_lattice(const IntMatrix& m, const Lattice& l);

}  // namespace d2
