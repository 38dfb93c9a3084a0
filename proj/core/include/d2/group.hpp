#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace d2 {

/// Element a^rotation b^reflection of a dihedral group in normal form.
struct GroupElement {
  int rotation = 0;    // power of a, in [0, 2n)
  int reflection = 0;  // power of b, in {0, 1}

  friend constexpr auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Orderings of the group elements used as bases for the regular representation.
enum class BasisOrder {
  Canonical,          // index = reflection * 2n + rotation
  PowersDescending,   // a^{2n-1}, ..., a, 1, ba^{2n-1}, ..., ba, b
  Interleaved,        // 1, b, a, ba, a^2, ba^2, ...
};

std::string to_string(BasisOrder order);
BasisOrder parse_basis_order(const std::string& name);

/// The dihedral group D_{4n} = <a, b | a^{2n} = b^2 = e, aba = b> of order 4n.
///
/// Elements are kept in the normal form a^i b^j. Multiplication uses the
/// closed-form rule b a^i = a^{-i} b; a product table over canonical indices
/// is precomputed at construction and shared between copies.
class DihedralGroup {
 public:
  explicit DihedralGroup(int n);

  int n() const noexcept { return n_; }
  int order() const noexcept { return 4 * n_; }
  int rotation_order() const noexcept { return 2 * n_; }

  GroupElement identity() const noexcept { return {0, 0}; }
  GroupElement a() const noexcept { return {1 % rotation_order(), 0}; }
  GroupElement b() const noexcept { return {0, 1}; }

  bool contains(GroupElement g) const noexcept;
  GroupElement multiply(GroupElement g, GroupElement h) const;
  GroupElement inverse(GroupElement g) const;
  GroupElement power(GroupElement g, long long k) const;

  /// Canonical index reflection * 2n + rotation.
  std::size_t index(GroupElement g) const;
  GroupElement element(std::size_t index) const;
  /// All elements in canonical order.
  const std::vector<GroupElement>& elements() const noexcept { return tables_->elements; }

  /// Canonical index of the product of the elements with canonical indices i, j.
  std::size_t product_index(std::size_t i, std::size_t j) const noexcept {
    return tables_->product[i * static_cast<std::size_t>(order()) + j];
  }

  /// The elements listed in the given basis order.
  std::vector<GroupElement> basis(BasisOrder order) const;
  /// position -> canonical index for the given basis order.
  std::vector<std::size_t> basis_permutation(BasisOrder order) const;

  std::string to_string(GroupElement g) const;

  friend bool operator==(const DihedralGroup& x, const DihedralGroup& y) noexcept { return x.n_ == y.n_; }

 private:
  struct Tables {
    std::vector<GroupElement> elements;
    std::vector<std::size_t> product;
  };

  int n_;
  std::shared_ptr<const Tables> tables_;
};

/// One letter x_g^{±1} of a word in the free group on the presentation generators.
struct Letter {
  int generator = 0;
  int exponent = 1;  // +1 or -1

  friend constexpr bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Finite presentation. An empty relator is the trivial relator e.
struct Presentation {
  int generator_count = 0;
  std::vector<Word> relators;

  /// Throws InvariantViolation when a letter is out of range or has exponent other than ±1.
  void validate() const;
};

/// Evaluates a word, sending generator i to images[i].
GroupElement evaluate_word(const Word& word, const DihedralGroup& group,
                           const std::vector<GroupElement>& images);
/// Evaluates a word with generator 0 -> a and generator 1 -> b.
GroupElement evaluate_word(const Word& word, const DihedralGroup& group);

/// <a, b | a^{2n}, b^2, abab^{-1}> followed by `extra_trivial` empty relators.
Presentation d4n_presentation(int n, int extra_trivial = 0);

}  // namespace d2
