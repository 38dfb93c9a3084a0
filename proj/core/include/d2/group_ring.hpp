#pragma once

#include <string>
#include <vector>

#include "d2/group.hpp"
#include "d2/int_matrix.hpp"
#include "d2/integer.hpp"

namespace d2 {

/// Element of the integral group ring Z[D_{4n}], stored as a dense coefficient
/// vector indexed by the canonical element order.
class RingElement {
 public:
  explicit RingElement(DihedralGroup group);
  RingElement(DihedralGroup group, std::vector<Integer> coeffs);

  static RingElement zero(const DihedralGroup& group) { return RingElement(group); }
  static RingElement one(const DihedralGroup& group) { return of(group, group.identity()); }
  static RingElement of(const DihedralGroup& group, GroupElement g, const Integer& coeff = 1);
  static RingElement constant(const DihedralGroup& group, const Integer& value) {
    return of(group, group.identity(), value);
  }

  const DihedralGroup& group() const noexcept { return group_; }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  const Integer& coeff(GroupElement g) const { return coeffs_[group_.index(g)]; }

  bool is_zero() const;

  RingElement& operator+=(const RingElement& y);
  RingElement& operator-=(const RingElement& y);
  RingElement& operator*=(const Integer& s);

  friend RingElement operator+(RingElement x, const RingElement& y) { return x += y; }
  friend RingElement operator-(RingElement x, const RingElement& y) { return x -= y; }
  friend RingElement operator-(RingElement x);
  friend RingElement operator*(const Integer& s, RingElement x) { return x *= s; }
  /// Group-ring convolution: (xy)_g = sum over hk = g of x_h y_k.
  friend RingElement operator*(const RingElement& x, const RingElement& y);

  friend bool operator==(const RingElement& x, const RingElement& y);

  std::string to_string() const;

 private:
  DihedralGroup group_;
  std::vector<Integer> coeffs_;
};

inline RingElement ring_mul(const RingElement& x, const RingElement& y) { return x * y; }

/// Sum of all coefficients; a ring homomorphism Z[G] -> Z.
Integer augmentation(const RingElement& x);
/// Augmentation reduced mod 2.
bool mod2_augmentation(const RingElement& x);

/// 1 + a + ... + a^{2n-1}.
RingElement rotation_sum(const DihedralGroup& group);
/// Sum of all group elements.
RingElement norm_element(const DihedralGroup& group);

/// Integer matrix of v -> x v in the given basis: column q holds the
/// coefficients of x * basis[q].
IntMatrix regular_rep(const RingElement& x, BasisOrder order = BasisOrder::Canonical);
/// Integer matrix of v -> v x: column q holds the coefficients of basis[q] * x.
IntMatrix right_regular_rep(const RingElement& x, BasisOrder order = BasisOrder::Canonical);

}  // namespace d2
