#include "d2/group.hpp"

#include <algorithm>

#include "d2/errors.hpp"

namespace d2 {

std::string to_string(BasisOrder order) {
  switch (order) {
    case BasisOrder::Canonical:
      return "canonical";
    case BasisOrder::PowersDescending:
      return "descending";
    case BasisOrder::Interleaved:
      return "interleaved";
  }
  return "canonical";
}

BasisOrder parse_basis_order(const std::string& name) {
  if (name == "canonical") return BasisOrder::Canonical;
  if (name == "descending" || name == "powers-descending") return BasisOrder::PowersDescending;
  if (name == "interleaved") return BasisOrder::Interleaved;
  throw ParseError("unknown basis order '" + name + "' (expected canonical, descending or interleaved)");
}

namespace {

int mod(long long x, int m) {
  long long r = x % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace

DihedralGroup::DihedralGroup(int n) : n_(n) {
  if (n < 1) throw RangeViolation("dihedral parameter n must be positive");
  auto tables = std::make_shared<Tables>();
  const int rot = 2 * n;
  const auto size = static_cast<std::size_t>(4 * n);
  tables->elements.reserve(size);
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < rot; ++i) tables->elements.push_back({i, j});
  tables->product.resize(size * size);
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = 0; y < size; ++y) {
      const auto g = tables->elements[x];
      const auto h = tables->elements[y];
      // (a^i b^j)(a^k b^l) = a^{i + (-1)^j k} b^{j+l}
      const int i = mod(g.rotation + (g.reflection ? -h.rotation : h.rotation), rot);
      const int j = (g.reflection + h.reflection) % 2;
      tables->product[x * size + y] = static_cast<std::size_t>(j * rot + i);
    }
  }
  tables_ = std::move(tables);
}

bool DihedralGroup::contains(GroupElement g) const noexcept {
  return g.rotation >= 0 && g.rotation < rotation_order() && (g.reflection == 0 || g.reflection == 1);
}

GroupElement DihedralGroup::multiply(GroupElement g, GroupElement h) const {
  return element(product_index(index(g), index(h)));
}

GroupElement DihedralGroup::inverse(GroupElement g) const {
  if (!contains(g)) throw InvariantViolation("element not in group");
  if (g.reflection) return g;  // reflections are involutions
  return {mod(-g.rotation, rotation_order()), 0};
}

GroupElement DihedralGroup::power(GroupElement g, long long k) const {
  if (!contains(g)) throw InvariantViolation("element not in group");
  if (g.reflection) return (mod(k, 2) == 0) ? identity() : g;
  return {mod(static_cast<long long>(g.rotation) * mod(k, rotation_order()), rotation_order()), 0};
}

std::size_t DihedralGroup::index(GroupElement g) const {
  if (!contains(g)) throw InvariantViolation("element not in group");
  return static_cast<std::size_t>(g.reflection * rotation_order() + g.rotation);
}

GroupElement DihedralGroup::element(std::size_t index) const {
  if (index >= static_cast<std::size_t>(order())) throw InvariantViolation("element index out of range");
  return tables_->elements[index];
}

std::vector<GroupElement> DihedralGroup::basis(BasisOrder order) const {
  const int rot = rotation_order();
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(this->order()));
  switch (order) {
    case BasisOrder::Canonical:
      return elements();
    case BasisOrder::PowersDescending:
      for (int p = rot - 1; p >= 0; --p) out.push_back({p, 0});
      // b a^p = a^{-p} b
      for (int p = rot - 1; p >= 0; --p) out.push_back({mod(-p, rot), 1});
      break;
    case BasisOrder::Interleaved:
      for (int p = 0; p < rot; ++p) {
        out.push_back({p, 0});
        out.push_back({mod(-p, rot), 1});
      }
      break;
  }
  return out;
}

std::vector<std::size_t> DihedralGroup::basis_permutation(BasisOrder order) const {
  std::vector<std::size_t> perm;
  for (const auto& g : basis(order)) perm.push_back(index(g));
  return perm;
}

std::string DihedralGroup::to_string(GroupElement g) const {
  if (g == identity()) return "e";
  std::string s;
  if (g.rotation == 1) s += "a";
  else if (g.rotation > 1) s += "a^" + std::to_string(g.rotation);
  if (g.reflection) s += "b";
  return s;
}

void Presentation::validate() const {
  if (generator_count < 0) throw InvariantViolation("negative generator count");
  for (const auto& word : relators) {
    for (const auto& letter : word) {
      if (letter.generator < 0 || letter.generator >= generator_count)
        throw InvariantViolation("relator letter refers to generator " + std::to_string(letter.generator));
      if (letter.exponent != 1 && letter.exponent != -1)
        throw InvariantViolation("relator letters must have exponent +1 or -1");
    }
  }
}

GroupElement evaluate_word(const Word& word, const DihedralGroup& group,
                           const std::vector<GroupElement>& images) {
  GroupElement acc = group.identity();
  for (const auto& letter : word) {
    if (letter.generator < 0 || static_cast<std::size_t>(letter.generator) >= images.size())
      throw InvariantViolation("word letter refers to generator without an image");
    const auto g = images[static_cast<std::size_t>(letter.generator)];
    acc = group.multiply(acc, letter.exponent > 0 ? g : group.inverse(g));
  }
  return acc;
}

GroupElement evaluate_word(const Word& word, const DihedralGroup& group) {
  return evaluate_word(word, group, {group.a(), group.b()});
}

Presentation d4n_presentation(int n, int extra_trivial) {
  if (n < 1) throw RangeViolation("dihedral parameter n must be positive");
  if (extra_trivial < 0) throw RangeViolation("number of trivial relators must be nonnegative");
  constexpr int a = 0;
  constexpr int b = 1;
  Presentation p;
  p.generator_count = 2;
  p.relators.push_back(Word(static_cast<std::size_t>(2 * n), Letter{a, 1}));
  p.relators.push_back({{b, 1}, {b, 1}});
  p.relators.push_back({{a, 1}, {b, 1}, {a, 1}, {b, -1}});
  for (int k = 0; k < extra_trivial; ++k) p.relators.emplace_back();
  return p;
}

}  // namespace d2
