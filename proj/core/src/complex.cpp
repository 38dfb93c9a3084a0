#include "d2/complex.hpp"

#include <algorithm>

#include "d2/errors.hpp"
#include "d2/normal_form.hpp"

namespace d2 {

AlgebraicComplex::AlgebraicComplex(FreeModuleMap d2, FreeModuleMap d1) : d2_(std::move(d2)), d1_(std::move(d1)) {
  if (!(d2_.group() == d1_.group())) throw GroupMismatch();
  if (d2_.cod_rank() != d1_.dom_rank()) throw DimensionMismatch("d2 codomain rank differs from d1 domain rank");
  if (!compose(d1_, d2_).is_zero()) throw InvariantViolation("d1 d2 is not zero");
  for (std::size_t j = 0; j < d1_.dom_rank(); ++j) {
    Integer eps = 0;
    for (std::size_t i = 0; i < d1_.cod_rank(); ++i) eps += augmentation(d1_.at(i, j));
    if (sgn(eps) != 0) throw InvariantViolation("augmentation does not vanish on the image of d1");
  }
}

namespace {

void check_images(const Word& word, const std::vector<GroupElement>& images) {
  for (const auto& letter : word)
    if (letter.generator < 0 || static_cast<std::size_t>(letter.generator) >= images.size())
      throw InvariantViolation("word letter refers to generator without an image");
}

std::vector<GroupElement> default_images(const DihedralGroup& group) { return {group.a(), group.b()}; }

}  // namespace

RingElement fox_derivative(const Word& word, int gen, const DihedralGroup& group,
                           const std::vector<GroupElement>& images) {
  check_images(word, images);
  RingElement out(group);
  GroupElement prefix = group.identity();
  for (const auto& letter : word) {
    const auto g = images[static_cast<std::size_t>(letter.generator)];
    if (letter.exponent > 0) {
      if (letter.generator == gen) out += RingElement::of(group, prefix);
      prefix = group.multiply(prefix, g);
    } else {
      prefix = group.multiply(prefix, group.inverse(g));
      if (letter.generator == gen) out -= RingElement::of(group, prefix);
    }
  }
  return out;
}

RingElement fox_derivative(const Word& word, int gen, const DihedralGroup& group) {
  return fox_derivative(word, gen, group, default_images(group));
}

RingElement right_fox_derivative(const Word& word, int gen, const DihedralGroup& group,
                                 const std::vector<GroupElement>& images) {
  check_images(word, images);
  RingElement out(group);
  GroupElement suffix = group.identity();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const auto g = images[static_cast<std::size_t>(it->generator)];
    if (it->exponent > 0) {
      if (it->generator == gen) out += RingElement::of(group, suffix);
      suffix = group.multiply(g, suffix);
    } else {
      suffix = group.multiply(group.inverse(g), suffix);
      if (it->generator == gen) out -= RingElement::of(group, suffix);
    }
  }
  return out;
}

AlgebraicComplex cayley_complex(const Presentation& p, const DihedralGroup& group,
                                const std::vector<GroupElement>& images) {
  p.validate();
  if (images.size() < static_cast<std::size_t>(p.generator_count))
    throw InvariantViolation("every generator needs an image in the group");
  for (std::size_t k = 0; k < p.relators.size(); ++k)
    if (evaluate_word(p.relators[k], group, images) != group.identity())
      throw RelatorNotSatisfied("relator " + std::to_string(k) + " is not trivial in D_" +
                                std::to_string(group.order()));
  const auto gens = static_cast<std::size_t>(p.generator_count);
  FreeModuleMap d1(group, 1, gens);
  for (std::size_t j = 0; j < gens; ++j)
    d1.at(0, j) = RingElement::of(group, images[j]) - RingElement::one(group);
  FreeModuleMap d2(group, gens, p.relators.size());
  for (std::size_t k = 0; k < p.relators.size(); ++k)
    for (std::size_t j = 0; j < gens; ++j)
      d2.at(j, k) = right_fox_derivative(p.relators[k], static_cast<int>(j), group, images);
  return AlgebraicComplex(std::move(d2), std::move(d1));
}

AlgebraicComplex cayley_complex(const Presentation& p, const DihedralGroup& group) {
  return cayley_complex(p, group, default_images(group));
}

AlgebraicComplex standard_complex(int n) {
  const DihedralGroup g(n);
  const auto one = RingElement::one(g);
  const auto a = RingElement::of(g, g.a());
  const auto b = RingElement::of(g, g.b());
  const auto zero = RingElement::zero(g);
  FreeModuleMap d2(g, {{rotation_sum(g), zero, one + b * a}, {zero, one + b, a - one}}, 3);
  FreeModuleMap d1(g, {{a - one, b - one}}, 2);
  return AlgebraicComplex(std::move(d2), std::move(d1));
}

AlgebraicComplex stabilize(const AlgebraicComplex& c, std::size_t s) {
  return AlgebraicComplex(c.d2().with_zero_columns(s), c.d1());
}

ExactnessCertificate certify_exact(const AlgebraicComplex& c) {
  ExactnessCertificate cert;
  const auto d1 = to_integer_matrix(c.d1());
  const auto d2 = to_integer_matrix(c.d2());
  const auto image = image_lattice(d2);
  const auto kernel = kernel_basis(d1);
  cert.d2_rank = image.rank();
  cert.pi2_rank = d2.cols() - image.rank();
  cert.exact_at_f1 = lattice_equal(image, kernel);
  if (!cert.exact_at_f1)
    throw NotExact("F1", "image of d2 has rank " + std::to_string(image.rank()) + ", kernel of d1 has rank " +
                             std::to_string(kernel.rank()) + (image.rank() == kernel.rank() ? " (finite index)" : ""));

  cert.d1_divisors = snf(d1);
  cert.d1_rank = cert.d1_divisors.size();
  const auto expected = static_cast<std::size_t>(c.group().order()) * c.r0() - 1;
  cert.cokernel_is_z = cert.d1_rank == expected &&
                       std::all_of(cert.d1_divisors.begin(), cert.d1_divisors.end(),
                                   [](const Integer& d) { return d == 1; });
  if (!cert.cokernel_is_z)
    throw NotExact("F0", "cokernel of d1 is not Z (rank " + std::to_string(cert.d1_rank) + ", expected " +
                             std::to_string(expected) + ")");

  // The constructor guarantees the augmentation kills im d1; it maps e_1 to 1,
  // so it induces a surjection coker d1 ~ Z -> Z, hence an isomorphism.
  cert.augmentation_realizes = c.r0() >= 1;
  if (!cert.augmentation_realizes) throw NotExact("F0", "F0 has rank zero");
  return cert;
}

Pi2Lattice pi2(const AlgebraicComplex& c) {
  const auto& g = c.group();
  auto lattice = kernel_basis(to_integer_matrix(c.d2()));
  auto action_a = restrict_to_lattice(right_action_matrix(g, c.r2(), g.a()), lattice);
  auto action_b = restrict_to_lattice(right_action_matrix(g, c.r2(), g.b()), lattice);
  return {std::move(lattice), std::move(action_a), std::move(action_b)};
}

}  // namespace d2
