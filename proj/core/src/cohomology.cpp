#include "d2/cohomology.hpp"

namespace d2 {

namespace {

// v[j][i] = eps(f(i, j)) mod 2
F2Matrix dual_mod2(const FreeModuleMap& f) {
  F2Matrix v(f.dom_rank(), f.cod_rank());
  for (std::size_t i = 0; i < f.cod_rank(); ++i)
    for (std::size_t j = 0; j < f.dom_rank(); ++j) v.set(j, i, mod2_augmentation(f.at(i, j)));
  return v;
}

F2Matrix mod2(const IntMatrix& m) {
  F2Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, mpz_odd_p(m(r, c).get_mpz_t()) != 0);
  return out;
}

}  // namespace

CochainData cochain(const AlgebraicComplex& c) { return {dual_mod2(c.d1()), dual_mod2(c.d2())}; }

std::size_t h0(const AlgebraicComplex& c) {
  const auto v = cochain(c);
  return c.r0() - f2_rank(v.v1);
}

std::size_t h1(const AlgebraicComplex& c) {
  const auto v = cochain(c);
  return (c.r1() - f2_rank(v.v2)) - f2_rank(v.v1);
}

SecondCohomology second_cohomology(const AlgebraicComplex& c, const Pi2Lattice& pi) {
  SecondCohomology out;
  const auto size = static_cast<std::size_t>(c.group().order());
  const auto& basis = pi.lattice.basis();
  const std::size_t rank_j = basis.cols();

  // res[k][j] = eps(block j of the k-th basis vector of J) mod 2
  F2Matrix res(rank_j, c.r2());
  for (std::size_t k = 0; k < rank_j; ++k)
    for (std::size_t j = 0; j < c.r2(); ++j) {
      Integer eps = 0;
      for (std::size_t t = 0; t < size; ++t) eps += basis(j * size + t, k);
      res.set(k, j, mpz_odd_p(eps.get_mpz_t()) != 0);
    }
  out.restriction_rank = f2_rank(res);
  out.v2_rank = f2_rank(cochain(c).v2);
  out.h2 = c.r2() - out.restriction_rank - out.v2_rank;

  // invariant functionals: phi (C_a - I) = phi (C_b - I) = 0 over F2
  const auto identity = IntMatrix::identity(rank_j);
  const auto relations = mod2(pi.action_a - identity).hconcat(mod2(pi.action_b - identity));
  out.hom_dimension = rank_j - f2_rank(relations);
  out.restriction_invariant = (res.transpose() * relations).is_zero();
  return out;
}

SecondCohomology second_cohomology(const AlgebraicComplex& c) { return second_cohomology(c, pi2(c)); }

std::size_t h2(const AlgebraicComplex& c) { return second_cohomology(c).h2; }

CohomologyRanks cohomology_ranks(const AlgebraicComplex& c) { return {h0(c), h1(c), h2(c)}; }

EulerBoundReport euler_bound(RankTriple ranks, const CohomologyRanks& h, int n, std::optional<long> pi2_rank) {
  EulerBoundReport r;
  r.ranks = ranks;
  r.euler = ranks.r2 - ranks.r1 + ranks.r0;
  r.bound = static_cast<long>(h.h2) - static_cast<long>(h.h1) + static_cast<long>(h.h0);
  r.satisfied = r.euler >= r.bound;
  r.minimal = r.euler == r.bound;
  r.expected_pi2_rank = 4L * n * r.euler - 1;
  r.pi2_rank = pi2_rank;
  r.rank_formula_holds = !pi2_rank || *pi2_rank == r.expected_pi2_rank;
  return r;
}

EulerBoundReport euler_bound(const AlgebraicComplex& c, const CohomologyRanks& h) {
  const auto cert = certify_exact(c);
  return euler_bound({static_cast<long>(c.r2()), static_cast<long>(c.r1()), static_cast<long>(c.r0())}, h,
                     c.group().n(), static_cast<long>(cert.pi2_rank));
}

}  // namespace d2
