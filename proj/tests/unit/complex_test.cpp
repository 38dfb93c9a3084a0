#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "d2/complex.hpp"
#include "d2/errors.hpp"
#include "d2/expression.hpp"
#include "d2/normal_form.hpp"
#include "oracles.hpp"

using namespace d2;

namespace {

Word random_word(std::mt19937_64& rng, int len) {
  std::uniform_int_distribution<int> gen(0, 1), sign(0, 1);
  Word w;
  for (int i = 0; i < len; ++i) w.push_back({gen(rng), sign(rng) ? 1 : -1});
  return w;
}

RingElement ring(const DihedralGroup& g, const char* e) { return parse_ring_expression(e, g); }

}  // namespace

TEST(Fox, FundamentalFormulaLeft) {
  std::mt19937_64 rng(21);
  for (int n = 1; n <= 4; ++n) {
    const DihedralGroup g(n);
    const std::vector<RingElement> x_minus_1{ring(g, "a-1"), ring(g, "b-1")};
    for (int t = 0; t < 25; ++t) {
      const auto w = random_word(rng, 1 + t % 9);
      RingElement sum(g);
      for (int k = 0; k < 2; ++k) sum += fox_derivative(w, k, g) * x_minus_1[static_cast<std::size_t>(k)];
      EXPECT_EQ(sum, RingElement::of(g, evaluate_word(w, g)) - RingElement::one(g));
    }
  }
}

TEST(Fox, FundamentalFormulaRight) {
  std::mt19937_64 rng(22);
  for (int n = 1; n <= 4; ++n) {
    const DihedralGroup g(n);
    const std::vector<RingElement> x_minus_1{ring(g, "a-1"), ring(g, "b-1")};
    const std::vector<GroupElement> images{g.a(), g.b()};
    for (int t = 0; t < 25; ++t) {
      const auto w = random_word(rng, 1 + t % 9);
      RingElement sum(g);
      for (int k = 0; k < 2; ++k) sum += x_minus_1[static_cast<std::size_t>(k)] * right_fox_derivative(w, k, g, images);
      EXPECT_EQ(sum, RingElement::of(g, evaluate_word(w, g)) - RingElement::one(g));
    }
  }
}

TEST(Fox, KnownDerivatives) {
  const DihedralGroup g(2);
  const auto p = d4n_presentation(2);
  EXPECT_EQ(fox_derivative(p.relators[0], 0, g), rotation_sum(g));
  EXPECT_EQ(fox_derivative(p.relators[1], 1, g), ring(g, "1+b"));
  EXPECT_EQ(fox_derivative(p.relators[2], 0, g), ring(g, "1+ab"));
  EXPECT_EQ(fox_derivative(p.relators[2], 1, g), ring(g, "a-1"));
  const std::vector<GroupElement> images{g.a(), g.b()};
  EXPECT_EQ(right_fox_derivative(p.relators[2], 0, g, images), ring(g, "a^-1+b"));
  EXPECT_EQ(right_fox_derivative(p.relators[2], 1, g, images), ring(g, "ab-b"));
  EXPECT_TRUE(fox_derivative(p.relators[0], 1, g).is_zero());
}

TEST(Complex, StandardShape) {
  const auto c = standard_complex(2);
  EXPECT_EQ(c.r2(), 3u);
  EXPECT_EQ(c.r1(), 2u);
  EXPECT_EQ(c.r0(), 1u);
  EXPECT_EQ(c.euler_characteristic(), 2);
  const auto& g = c.group();
  EXPECT_EQ(c.d2().at(0, 2), ring(g, "1+ba"));
  EXPECT_EQ(c.d2().at(1, 2), ring(g, "a-1"));
  EXPECT_EQ(c.d1().at(0, 1), ring(g, "b-1"));
}

TEST(Complex, ConstructorEnforcesChainProperty) {
  const DihedralGroup g(1);
  FreeModuleMap d1(g, {{ring(g, "a-1"), ring(g, "b-1")}}, 2);
  FreeModuleMap bad(g, {{RingElement::one(g)}, {RingElement::zero(g)}}, 1);
  EXPECT_THROW(AlgebraicComplex(bad, d1), InvariantViolation);
  FreeModuleMap d1_bad(g, {{ring(g, "a"), ring(g, "b-1")}}, 2);
  FreeModuleMap zero(g, 2, 1);
  EXPECT_THROW(AlgebraicComplex(zero, d1_bad), InvariantViolation);
}

TEST(Complex, CayleyAndStandardAreExact) {
  for (int n = 1; n <= 4; ++n) {
    const DihedralGroup g(n);
    const auto cay = cayley_complex(d4n_presentation(n), g);
    const auto std_c = standard_complex(n);
    const auto a = certify_exact(cay);
    const auto b = certify_exact(std_c);
    EXPECT_EQ(a.pi2_rank, static_cast<std::size_t>(8 * n - 1));
    EXPECT_EQ(b.pi2_rank, static_cast<std::size_t>(8 * n - 1));
    EXPECT_EQ(a.d1_rank, static_cast<std::size_t>(4 * n - 1));
    for (const auto& d : a.d1_divisors) EXPECT_EQ(d, 1);
    EXPECT_TRUE(lattice_equal(image_lattice(to_integer_matrix(cay.d2())), image_lattice(to_integer_matrix(std_c.d2()))));
    EXPECT_EQ(pi2(cay).rank(), a.pi2_rank);
  }
}

TEST(Complex, MissingRelatorIsNotExact) {
  const auto c = standard_complex(2);
  const AlgebraicComplex cut(c.d2().without_column(2), c.d1());
  try {
    certify_exact(cut);
    FAIL() << "expected NotExact";
  } catch (const NotExact& e) {
    EXPECT_EQ(e.stage(), "F1");
  }
}

TEST(Complex, ScaledRelatorHasFiniteIndexImage) {
  const auto c = standard_complex(2);
  auto d2 = c.d2();
  d2.at(0, 2) = Integer(2) * d2.at(0, 2);
  d2.at(1, 2) = Integer(2) * d2.at(1, 2);
  const AlgebraicComplex scaled(d2, c.d1());
  EXPECT_THROW(certify_exact(scaled), NotExact);
  // same rank, so only the index differs
  EXPECT_EQ(rank(to_integer_matrix(scaled.d2())), rank(to_integer_matrix(c.d2())));
}

TEST(Complex, BadRelatorRejected) {
  const DihedralGroup g(2);
  Presentation p = d4n_presentation(2);
  p.relators.push_back({{0, 1}});
  EXPECT_THROW(cayley_complex(p, g), RelatorNotSatisfied);
}

TEST(Complex, StabilizationAddsFreeRank) {
  for (int n : {1, 2}) {
    for (std::size_t s : {1u, 2u}) {
      const auto c = stabilize(standard_complex(n), s);
      EXPECT_EQ(c.r2(), 3 + s);
      EXPECT_EQ(certify_exact(c).pi2_rank, static_cast<std::size_t>(8 * n - 1 + 4 * n * static_cast<int>(s)));
      const auto cay = cayley_complex(d4n_presentation(n, static_cast<int>(s)), DihedralGroup(n));
      EXPECT_EQ(certify_exact(cay).pi2_rank, certify_exact(c).pi2_rank);
    }
  }
}

TEST(Complex, Pi2ActionPreservesLattice) {
  const auto pi = pi2(standard_complex(2));
  // a acts with order 4 and b as an involution
  auto a4 = IntMatrix::identity(pi.rank());
  for (int i = 0; i < 4; ++i) a4 = a4 * pi.action_a;
  EXPECT_EQ(a4, IntMatrix::identity(pi.rank()));
  EXPECT_EQ(pi.action_b * pi.action_b, IntMatrix::identity(pi.rank()));
}

TEST(ComplexIo, RoundTrip) {
  const auto c = cayley_complex(d4n_presentation(2, 1), DihedralGroup(2));
  std::stringstream s;
  write_complex(s, c);
  EXPECT_EQ(read_complex(s), c);
  std::stringstream bad("2 3 2 1\n1 2\n");
  EXPECT_THROW(read_complex(bad), ParseError);
}
