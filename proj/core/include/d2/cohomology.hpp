#pragma once

#include <cstddef>
#include <optional>

#include "d2/complex.hpp"
#include "d2/f2_matrix.hpp"

namespace d2 {

/// Hom_{Z[G]}(-, F2) applied to a complex: F2^{r2} <-v2- F2^{r1} <-v1- F2^{r0}.
/// Entries are mod-2 augmentations of the boundary entries (transposed).
struct CochainData {
  F2Matrix v1;  // r1 x r0
  F2Matrix v2;  // r2 x r1
};

CochainData cochain(const AlgebraicComplex& c);

/// dim ker v1
std::size_t h0(const AlgebraicComplex& c);
/// dim ker v2 - rank v1
std::size_t h1(const AlgebraicComplex& c);

/// Degree-two data computed through pi_2 = J.
///
/// A functional on F2 is a cocycle iff it vanishes on J (the image of the next
/// free module of any resolution), so H^2 = ker(res) / im(v2) where res
/// restricts Hom(F2, F2) to Hom(J, F2).
struct SecondCohomology {
  std::size_t h2 = 0;
  std::size_t restriction_rank = 0;
  std::size_t v2_rank = 0;
  /// dim Hom_{Z[G]}(J, F2): functionals on J/2J fixed by the action of a and b.
  std::size_t hom_dimension = 0;
  /// Every restricted functional is G-invariant.
  bool restriction_invariant = false;
};

SecondCohomology second_cohomology(const AlgebraicComplex& c, const Pi2Lattice& pi);
SecondCohomology second_cohomology(const AlgebraicComplex& c);
std::size_t h2(const AlgebraicComplex& c);

struct CohomologyRanks {
  std::size_t h0 = 0;
  std::size_t h1 = 0;
  std::size_t h2 = 0;

  friend bool operator==(const CohomologyRanks&, const CohomologyRanks&) = default;
};

CohomologyRanks cohomology_ranks(const AlgebraicComplex& c);

struct RankTriple {
  long r2 = 0;
  long r1 = 0;
  long r0 = 0;
};

/// The bound r2 - r1 + r0 >= h2 - h1 + h0 and the pi_2 rank count.
struct EulerBoundReport {
  RankTriple ranks;
  long euler = 0;  // r2 - r1 + r0
  long bound = 0;  // h2 - h1 + h0
  bool satisfied = false;
  bool minimal = false;  // euler == bound
  std::optional<long> pi2_rank;
  long expected_pi2_rank = 0;  // |G| * euler - 1
  bool rank_formula_holds = true;
};

/// For hypothetical ranks; `pi2_rank`, when given, is compared to |G| (r2 - r1 + r0) - 1.
EulerBoundReport euler_bound(RankTriple ranks, const CohomologyRanks& h, int n,
                             std::optional<long> pi2_rank = std::nullopt);
/// For a complex: the pi_2 rank is taken from its exactness certificate.
EulerBoundReport euler_bound(const AlgebraicComplex& c, const CohomologyRanks& h);

}  // namespace d2
