#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "d2/errors.hpp"
#include "d2/f2_matrix.hpp"
#include "d2/lattice.hpp"
#include "d2/matrix_io.hpp"
#include "d2/normal_form.hpp"
#include "oracles.hpp"

using namespace d2;

TEST(Det, MatchesRationalElimination) {
  std::mt19937_64 rng(1);
  for (std::size_t n = 1; n <= 12; ++n)
    for (int t = 0; t < 5; ++t) {
      const auto m = oracle::random_matrix(rng, n, n, -5, 5);
      EXPECT_EQ(det(m), oracle::rational_det(m));
    }
}

TEST(Det, SmallCases) {
  EXPECT_EQ(det(IntMatrix{{2, -1}, {-1, 2}}), 3);
  EXPECT_EQ(det(IntMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(det(IntMatrix{{1, 2}, {2, 4}}), 0);
  EXPECT_EQ(det(IntMatrix(0, 0)), 1);
  EXPECT_THROW(det(IntMatrix(2, 3)), DimensionMismatch);
}

TEST(Rank, MatchesRationalRank) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    auto m = oracle::random_matrix(rng, 6, 9, -2, 2);
    if (t % 2) m = m.transpose() * m;  // square and often singular
    EXPECT_EQ(rank(m), oracle::rational_rank(m));
  }
}

TEST(Hnf, Example) {
  const auto h = hnf(IntMatrix{{2, 4}, {1, 3}});
  EXPECT_EQ(h.h, (IntMatrix{{1, 1}, {0, 2}}));
  EXPECT_EQ(h.rank, 2u);
  EXPECT_EQ(h.u * (IntMatrix{{2, 4}, {1, 3}}), h.h);
}

TEST(Hnf, ShapeAndUnimodularity) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto m = oracle::random_matrix(rng, 5 + t % 3, 4 + t % 4, -6, 6);
    const auto h = hnf(m);
    EXPECT_EQ(h.u * m, h.h);
    EXPECT_EQ(abs(det(h.u)), 1);
    EXPECT_EQ(h.rank, oracle::rational_rank(m));
    for (std::size_t r = 0; r < h.rank; ++r) {
      const auto c = h.pivot_columns[r];
      EXPECT_GT(h.h(r, c), 0);
      for (std::size_t j = 0; j < c; ++j) EXPECT_EQ(h.h(r, j), 0);
      for (std::size_t above = 0; above < r; ++above) {
        EXPECT_GE(h.h(above, c), 0);
        EXPECT_LT(h.h(above, c), h.h(r, c));
      }
      if (r > 0) EXPECT_GT(c, h.pivot_columns[r - 1]);
    }
    for (std::size_t r = h.rank; r < h.h.rows(); ++r)
      for (std::size_t j = 0; j < h.h.cols(); ++j) EXPECT_EQ(h.h(r, j), 0);
  }
}

TEST(Snf, Examples) {
  EXPECT_EQ(snf(IntMatrix{{2, 0}, {0, 3}}), (std::vector<Integer>{1, 6}));
  EXPECT_EQ(snf(IntMatrix{{2, 4}, {6, 8}}), (std::vector<Integer>{2, 4}));
  EXPECT_EQ(snf(IntMatrix{{0, 0}, {0, 0}}), std::vector<Integer>{});
}

TEST(Snf, DivisorChainAndDeterminant) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 10; ++t) {
    const auto m = oracle::random_matrix(rng, 5, 5, -4, 4);
    const auto d = snf(m);
    for (std::size_t i = 1; i < d.size(); ++i) EXPECT_EQ(d[i] % d[i - 1], 0);
    Integer prod = 1;
    for (const auto& x : d) prod *= x;
    const Integer dm = det(m);
    if (d.size() == 5)
      EXPECT_EQ(prod, abs(dm));
    else
      EXPECT_EQ(dm, 0);
  }
}

TEST(SizeGuard, Refuses) {
  const auto old = dimension_limit();
  set_dimension_limit(3);
  EXPECT_THROW(det(IntMatrix::identity(4)), SizeGuardExceeded);
  EXPECT_THROW(hnf(IntMatrix(2, 4)), SizeGuardExceeded);
  set_dimension_limit(old);
  EXPECT_EQ(det(IntMatrix::identity(4)), 1);
}

TEST(Lattice, KernelIsSaturated) {
  // x + 2y = 0 has kernel spanned by (2, -1)
  const auto k = kernel_basis(IntMatrix{{1, 2}});
  ASSERT_EQ(k.rank(), 1u);
  EXPECT_EQ(abs(k.basis()(0, 0)), 2);
  EXPECT_TRUE(is_saturated(k));
  EXPECT_FALSE(is_saturated(Lattice(IntMatrix{{2}, {0}})));
}

TEST(Lattice, Equality) {
  EXPECT_TRUE(lattice_equal(Lattice(IntMatrix{{1, 0}, {0, 1}}), Lattice(IntMatrix{{1, 1}, {0, 1}})));
  EXPECT_FALSE(lattice_equal(Lattice(IntMatrix{{1, 0}, {0, 2}}), Lattice(IntMatrix{{1, 0}, {0, 1}})));
  EXPECT_TRUE(lattice_equal(Lattice::span(IntMatrix{{2, 3, 5}}), Lattice(IntMatrix{{1}})));
  EXPECT_THROW(lattice_equal(Lattice::zero(2), Lattice::zero(3)), DimensionMismatch);
  EXPECT_THROW(Lattice(IntMatrix{{1, 2}, {2, 4}}), InvariantViolation);
}

TEST(Lattice, ExpressAndRestrict) {
  const Lattice l(IntMatrix{{1, 0}, {1, 2}, {0, 1}});
  const IntMatrix v{{3}, {7}, {2}};
  EXPECT_EQ(express_in_lattice(v, l), (IntMatrix{{3}, {2}}));
  EXPECT_THROW(express_in_lattice(IntMatrix{{1}, {0}, {0}}, l), InvariantViolation);
  EXPECT_THROW(express_in_lattice(IntMatrix{{1}, {2}, {1}}, Lattice(IntMatrix{{2}, {4}, {2}})), NonIntegral);
  // swap of coordinates 1 and 2 on span{(1,1), ...} in Z^2
  const Lattice diag(IntMatrix{{1}, {1}});
  EXPECT_EQ(restrict_to_lattice(IntMatrix{{0, 1}, {1, 0}}, diag), (IntMatrix{{1}}));
}

TEST(Lattice, KernelMatchesRank) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 15; ++t) {
    const auto m = oracle::random_matrix(rng, 4, 8, -3, 3);
    const auto k = kernel_basis(m);
    EXPECT_EQ(k.rank(), 8 - oracle::rational_rank(m));
    EXPECT_TRUE((m * k.basis()).is_zero());
    EXPECT_TRUE(is_saturated(k));
  }
}

TEST(F2, RankAndNullspace) {
  F2Matrix m(3, 3);
  m.set(0, 0, true);
  m.set(0, 1, true);
  m.set(1, 1, true);
  m.set(1, 2, true);
  m.set(2, 0, true);
  m.set(2, 2, true);  // rows sum to zero
  EXPECT_EQ(f2_rank(m), 2u);
  const auto ns = f2_left_nullspace(m);
  ASSERT_EQ(ns.rows(), 1u);
  EXPECT_TRUE((ns * m).is_zero());
  EXPECT_EQ(f2_rank(F2Matrix::identity(5)), 5u);
}

TEST(MatrixIo, RoundTrip) {
  IntMatrix m{{1, -2, 3}, {0, 5, -6}};
  m(0, 0) = Integer("123456789012345678901234567890");
  std::stringstream s;
  write_matrix(s, m);
  EXPECT_EQ(read_matrix(s), m);
}

TEST(MatrixIo, Rejects) {
  std::stringstream a("2 2\n1 2 3");
  EXPECT_THROW(read_matrix(a), ParseError);
  std::stringstream b("1 1\nx");
  EXPECT_THROW(read_matrix(b), ParseError);
  EXPECT_THROW(load_matrix("/nonexistent/matrix.txt"), Error);
}
