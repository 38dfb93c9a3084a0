#include "d2/lattice.hpp"

#include <algorithm>

#include "d2/errors.hpp"
#include "d2/normal_form.hpp"

namespace d2 {

Lattice::Lattice(IntMatrix basis) : basis_(std::move(basis)) {
  if (d2::rank(basis_) != basis_.cols()) throw InvariantViolation("lattice basis columns are linearly dependent");
}

Lattice Lattice::zero(std::size_t ambient_dimension) { return {IntMatrix(ambient_dimension, 0), Unchecked{}}; }

Lattice Lattice::span(const IntMatrix& generators) {
  auto form = hnf(generators.transpose());
  return {form.h.row_block(0, form.rank).transpose(), Unchecked{}};
}

IntMatrix Lattice::canonical_form() const {
  auto form = hnf(basis_.transpose());
  return form.h.row_block(0, form.rank);
}

Lattice kernel_basis(const IntMatrix& m) {
  // Rows of U beyond the rank of H = U M^T annihilate M^T; they extend to a
  // unimodular basis, so their span is saturated.
  const auto form = hnf(m.transpose());
  const std::size_t n = m.cols();
  IntMatrix kernel_rows = form.u.row_block(form.rank, n - form.rank);
  auto canonical = hnf(kernel_rows);
  return Lattice(canonical.h.row_block(0, canonical.rank).transpose());
}

bool lattice_equal(const Lattice& x, const Lattice& y) {
  if (x.ambient_dimension() != y.ambient_dimension())
    throw DimensionMismatch("lattices live in different ambient dimensions");
  if (x.rank() != y.rank()) return false;
  return x.canonical_form() == y.canonical_form();
}

bool is_saturated(const Lattice& l) {
  const auto divisors = snf(l.basis());
  return std::all_of(divisors.begin(), divisors.end(), [](const Integer& d) { return d == 1; });
}

IntMatrix express_in_lattice(const IntMatrix& vectors, const Lattice& l) {
  if (vectors.rows() != l.ambient_dimension())
    throw DimensionMismatch("vectors and lattice have different ambient dimensions");
  const std::size_t r = l.rank();
  // B^T = U^{-1} H; solve z^T H = y^T by forward substitution on the pivots,
  // then c^T = z^T U.
  const auto form = hnf(l.basis().transpose());
  const IntMatrix& h = form.h;
  IntMatrix out(r, vectors.cols());
  for (std::size_t v = 0; v < vectors.cols(); ++v) {
    std::vector<mpq_class> z(r);
    for (std::size_t k = 0; k < r; ++k) {
      const std::size_t p = form.pivot_columns[k];
      mpq_class acc(vectors(p, v));
      for (std::size_t i = 0; i < k; ++i) acc -= z[i] * mpq_class(h(i, p));
      z[k] = acc / mpq_class(h(k, p));
    }
    for (std::size_t c = 0; c < vectors.rows(); ++c) {
      mpq_class acc = 0;
      for (std::size_t i = 0; i < r; ++i)
        if (sgn(h(i, c)) != 0) acc += z[i] * mpq_class(h(i, c));
      if (acc != mpq_class(vectors(c, v)))
        throw InvariantViolation("vector " + std::to_string(v) + " is not in the rational span of the lattice");
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (z[i].get_den() != 1)
        throw NonIntegral("vector " + std::to_string(v) + " has non-integral lattice coordinates");
    }
    for (std::size_t j = 0; j < r; ++j) {
      Integer acc = 0;
      for (std::size_t i = 0; i < r; ++i) acc += z[i].get_num() * form.u(i, j);
      out(j, v) = acc;
    }
  }
  return out;
}

IntMatrix restrict_to_lattice(const IntMatrix& m, const Lattice& l) {
  if (!m.is_square() || m.rows() != l.ambient_dimension())
    throw DimensionMismatch("restriction needs a square matrix on the lattice's ambient space");
  return express_in_lattice(m * l.basis(), l);
}

}  // namespace d2
