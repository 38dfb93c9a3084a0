#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "d2/errors.hpp"
#include "d2/group.hpp"
#include "oracles.hpp"

using namespace d2;

TEST(DihedralGroup, MultiplicationMatchesPermutationAction) {
  for (int n = 1; n <= 6; ++n) {
    const DihedralGroup g(n);
    const auto table = oracle::product_table(n);
    for (std::size_t i = 0; i < table.size(); ++i)
      for (std::size_t j = 0; j < table.size(); ++j) {
        EXPECT_EQ(g.product_index(i, j), table[i][j]) << "n=" << n;
        EXPECT_EQ(g.index(g.multiply(g.element(i), g.element(j))), table[i][j]);
      }
  }
}

TEST(DihedralGroup, DefiningRelations) {
  for (int n = 1; n <= 5; ++n) {
    const DihedralGroup g(n);
    const auto a = g.a(), b = g.b();
    EXPECT_EQ(g.power(a, 2 * n), g.identity());
    EXPECT_EQ(g.power(b, 2), g.identity());
    EXPECT_EQ(g.multiply(g.multiply(a, b), a), b);
    EXPECT_EQ(g.order(), 4 * n);
    for (auto x : g.elements()) EXPECT_EQ(g.multiply(x, g.inverse(x)), g.identity());
  }
}

TEST(DihedralGroup, ReflectionConjugatesRotation) {
  const DihedralGroup g(3);
  for (int i = 0; i < 6; ++i)
    EXPECT_EQ(g.multiply(g.b(), GroupElement{i, 0}), g.multiply(GroupElement{(6 - i) % 6, 0}, g.b()));
}

TEST(DihedralGroup, BasisOrdersArePermutations) {
  const DihedralGroup g(4);
  for (auto order : {BasisOrder::Canonical, BasisOrder::PowersDescending, BasisOrder::Interleaved}) {
    auto perm = g.basis_permutation(order);
    std::set<std::size_t> seen(perm.begin(), perm.end());
    EXPECT_EQ(seen.size(), 16u);
    const auto basis = g.basis(order);
    for (std::size_t p = 0; p < basis.size(); ++p) EXPECT_EQ(g.index(basis[p]), perm[p]);
  }
  const auto desc = g.basis(BasisOrder::PowersDescending);
  EXPECT_EQ(desc.front(), (GroupElement{7, 0}));
  EXPECT_EQ(desc[7], g.identity());
  // ba^7 = a^{-7} b = a b
  EXPECT_EQ(desc[8], g.multiply(g.b(), g.power(g.a(), 7)));
  EXPECT_EQ(desc[15], g.b());
  const auto inter = g.basis(BasisOrder::Interleaved);
  EXPECT_EQ(inter[0], g.identity());
  EXPECT_EQ(inter[1], g.b());
  EXPECT_EQ(inter[2], g.a());
  EXPECT_EQ(inter[3], g.multiply(g.b(), g.a()));
}

TEST(DihedralGroup, ParseBasisOrder) {
  EXPECT_EQ(parse_basis_order("interleaved"), BasisOrder::Interleaved);
  EXPECT_EQ(parse_basis_order("descending"), BasisOrder::PowersDescending);
  EXPECT_EQ(parse_basis_order(to_string(BasisOrder::Canonical)), BasisOrder::Canonical);
  EXPECT_THROW(parse_basis_order("sideways"), ParseError);
}

TEST(Presentation, RelatorsAreTrivial) {
  for (int n = 1; n <= 8; ++n) {
    const DihedralGroup g(n);
    const auto p = d4n_presentation(n, 2);
    EXPECT_NO_THROW(p.validate());
    EXPECT_EQ(p.relators.size(), 5u);
    for (const auto& w : p.relators) EXPECT_EQ(evaluate_word(w, g), g.identity());
  }
}

TEST(Presentation, ValidateRejectsBadLetters) {
  Presentation p{2, {{Letter{2, 1}}}};
  EXPECT_THROW(p.validate(), InvariantViolation);
  Presentation q{2, {{Letter{0, 2}}}};
  EXPECT_THROW(q.validate(), InvariantViolation);
}

TEST(Presentation, EvaluateWithImages) {
  const DihedralGroup g(2);
  const Word w{{0, 1}, {1, -1}};
  EXPECT_EQ(evaluate_word(w, g, {g.b(), g.a()}), g.multiply(g.b(), g.inverse(g.a())));
}
