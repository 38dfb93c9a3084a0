#include <gtest/gtest.h>

#include <random>

#include "d2/errors.hpp"
#include "d2/expression.hpp"
#include "d2/group_ring.hpp"
#include "d2/normal_form.hpp"
#include "oracles.hpp"

using namespace d2;

TEST(RingElement, ConvolutionMatchesOracle) {
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 4; ++n) {
    const DihedralGroup g(n);
    for (int t = 0; t < 20; ++t) {
      const auto x = oracle::random_ring_element(rng, g);
      const auto y = oracle::random_ring_element(rng, g);
      EXPECT_EQ((x * y).coeffs(), oracle::convolve(n, x.coeffs(), y.coeffs()));
    }
  }
}

TEST(RingElement, AugmentationIsMultiplicative) {
  std::mt19937_64 rng(3);
  const DihedralGroup g(3);
  for (int t = 0; t < 30; ++t) {
    const auto x = oracle::random_ring_element(rng, g);
    const auto y = oracle::random_ring_element(rng, g);
    EXPECT_EQ(augmentation(x * y), augmentation(x) * augmentation(y));
    EXPECT_EQ(mod2_augmentation(x), augmentation(x) % 2 != 0);
  }
}

TEST(RingElement, MixedGroupsRejected) {
  EXPECT_THROW(RingElement::one(DihedralGroup(1)) + RingElement::one(DihedralGroup(2)), GroupMismatch);
}

TEST(RingElement, NormElementAbsorbs) {
  const DihedralGroup g(2);
  const auto N = norm_element(g);
  for (auto h : g.elements()) EXPECT_EQ(RingElement::of(g, h) * N, N);
  EXPECT_EQ(augmentation(rotation_sum(g)), 4);
}

// A for 1+a+b with basis a^7, ..., 1, ba^7, ..., b, as printed for n = 4.
TEST(RegularRep, FrozenDescendingMatrixForOnePlusAPlusB) {
  const IntMatrix expected{
      {1, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
      {0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
      {0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0},
      {0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1, 0}, {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1},
      {1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}, {0, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0},
      {0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0},
      {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0},
      {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0}, {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 1},
  };
  const DihedralGroup g(4);
  const auto x = RingElement::one(g) + RingElement::of(g, g.a()) + RingElement::of(g, g.b());
  EXPECT_EQ(regular_rep(x, BasisOrder::PowersDescending), expected);
  EXPECT_EQ(oracle::rational_det(expected), -3);
}

TEST(RegularRep, InterleavedTwoMinusBIsBlockDiagonal) {
  for (int n = 1; n <= 4; ++n) {
    const DihedralGroup g(n);
    const auto m = regular_rep(RingElement::constant(g, 2) - RingElement::of(g, g.b()), BasisOrder::Interleaved);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        long want = 0;
        if (i == j) want = 2;
        else if (i / 2 == j / 2) want = -1;
        EXPECT_EQ(m(i, j), want) << i << "," << j;
      }
  }
}

TEST(RegularRep, ColumnsHoldLeftProducts) {
  std::mt19937_64 rng(9);
  const DihedralGroup g(2);
  const auto x = oracle::random_ring_element(rng, g);
  const auto m = regular_rep(x);
  for (std::size_t q = 0; q < 8; ++q) {
    const auto col = (x * RingElement::of(g, g.element(q))).coeffs();
    for (std::size_t p = 0; p < 8; ++p) EXPECT_EQ(m(p, q), col[p]);
  }
  const auto r = right_regular_rep(x);
  for (std::size_t q = 0; q < 8; ++q) {
    const auto col = (RingElement::of(g, g.element(q)) * x).coeffs();
    for (std::size_t p = 0; p < 8; ++p) EXPECT_EQ(r(p, q), col[p]);
  }
}

TEST(RegularRep, DeterminantValues) {
  for (int n : {1, 2, 4, 5, 7, 8}) {
    const DihedralGroup g(n);
    EXPECT_EQ(oracle::rational_det(regular_rep(parse_ring_expression("1+a+b", g))), -3) << n;
  }
  const DihedralGroup g3(3);
  EXPECT_EQ(det(regular_rep(parse_ring_expression("1+a+b", g3))), 0);
}

TEST(Expression, Parses) {
  const DihedralGroup g(2);
  const auto a = RingElement::of(g, g.a()), b = RingElement::of(g, g.b()), one = RingElement::one(g);
  EXPECT_EQ(parse_ring_expression("1+a-ba", g), one + a - b * a);
  EXPECT_EQ(parse_ring_expression("2 - b", g), Integer(2) * one - b);
  EXPECT_EQ(parse_ring_expression("3(a^2 - b)", g), Integer(3) * (a * a - b));
  EXPECT_EQ(parse_ring_expression("a^-1", g), RingElement::of(g, g.inverse(g.a())));
  EXPECT_EQ(parse_ring_expression("a*b", g), a * b);
  EXPECT_EQ(parse_ring_expression("e", g), one);
  EXPECT_EQ(parse_ring_expression("(1+a)^2", g), (one + a) * (one + a));
}

TEST(Expression, Rejects) {
  const DihedralGroup g(2);
  for (const char* bad : {"", "1+", "c", "(1+a", "1+a)", "(1+a)^-1", "a^"}) EXPECT_THROW(parse_ring_expression(bad, g), ParseError) << bad;
}
