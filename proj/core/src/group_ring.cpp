#include "d2/group_ring.hpp"

#include <numeric>

#include "d2/errors.hpp"

namespace d2 {

RingElement::RingElement(DihedralGroup group)
    : group_(std::move(group)), coeffs_(static_cast<std::size_t>(group_.order())) {}

RingElement::RingElement(DihedralGroup group, std::vector<Integer> coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != static_cast<std::size_t>(group_.order()))
    throw DimensionMismatch("coefficient vector length must equal the group order");
}

RingElement RingElement::of(const DihedralGroup& group, GroupElement g, const Integer& coeff) {
  RingElement x(group);
  x.coeffs_[group.index(g)] = coeff;
  return x;
}

bool RingElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

RingElement& RingElement::operator+=(const RingElement& y) {
  if (!(group_ == y.group_)) throw GroupMismatch();
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += y.coeffs_[k];
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& y) {
  if (!(group_ == y.group_)) throw GroupMismatch();
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= y.coeffs_[k];
  return *this;
}

RingElement& RingElement::operator*=(const Integer& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

RingElement operator-(RingElement x) {
  for (auto& c : x.coeffs_) c = -c;
  return x;
}

RingElement operator*(const RingElement& x, const RingElement& y) {
  if (!(x.group_ == y.group_)) throw GroupMismatch();
  RingElement out(x.group_);
  const std::size_t size = x.coeffs_.size();
  for (std::size_t h = 0; h < size; ++h) {
    if (sgn(x.coeffs_[h]) == 0) continue;
    for (std::size_t k = 0; k < size; ++k) {
      if (sgn(y.coeffs_[k]) == 0) continue;
      out.coeffs_[x.group_.product_index(h, k)] += x.coeffs_[h] * y.coeffs_[k];
    }
  }
  return out;
}

bool operator==(const RingElement& x, const RingElement& y) {
  return x.group_ == y.group_ && x.coeffs_ == y.coeffs_;
}

std::string RingElement::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Integer& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    const auto g = group_.element(k);
    const bool is_identity = g == group_.identity();
    Integer mag = abs(c);
    if (s.empty()) {
      if (sgn(c) < 0) s += "-";
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
    }
    if (is_identity) s += mag.get_str();
    else {
      if (mag != 1) s += mag.get_str() + "*";
      s += group_.to_string(g);
    }
  }
  return s.empty() ? "0" : s;
}

Integer augmentation(const RingElement& x) {
  return std::accumulate(x.coeffs().begin(), x.coeffs().end(), Integer(0));
}

bool mod2_augmentation(const RingElement& x) { return mpz_odd_p(augmentation(x).get_mpz_t()) != 0; }

RingElement rotation_sum(const DihedralGroup& group) {
  RingElement s(group);
  for (int i = 0; i < group.rotation_order(); ++i) s += RingElement::of(group, {i, 0});
  return s;
}

RingElement norm_element(const DihedralGroup& group) {
  return RingElement(group, std::vector<Integer>(static_cast<std::size_t>(group.order()), Integer(1)));
}

namespace {

IntMatrix multiplication_matrix(const RingElement& x, BasisOrder order, bool left) {
  const auto& group = x.group();
  const auto perm = group.basis_permutation(order);  // position -> canonical index
  const std::size_t size = perm.size();
  std::vector<std::size_t> position(size);
  for (std::size_t p = 0; p < size; ++p) position[perm[p]] = p;
  IntMatrix m(size, size);
  for (std::size_t h = 0; h < size; ++h) {
    const Integer& c = x.coeffs()[h];
    if (sgn(c) == 0) continue;
    for (std::size_t q = 0; q < size; ++q) {
      const std::size_t g = perm[q];
      const std::size_t prod = left ? group.product_index(h, g) : group.product_index(g, h);
      m(position[prod], q) += c;
    }
  }
  return m;
}

}  // namespace

IntMatrix regular_rep(const RingElement& x, BasisOrder order) { return multiplication_matrix(x, order, true); }

IntMatrix right_regular_rep(const RingElement& x, BasisOrder order) {
  return multiplication_matrix(x, order, false);
}

}  // namespace d2
