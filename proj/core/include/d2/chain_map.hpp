#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "d2/complex.hpp"

namespace d2 {

/// Chain map f = (f2, f1, f0) from `source` to `target`.
class ChainMap {
 public:
  /// Throws DimensionMismatch unless each f_i maps F_i to F_i'.
  ChainMap(AlgebraicComplex source, AlgebraicComplex target, FreeModuleMap f2, FreeModuleMap f1, FreeModuleMap f0);

  const AlgebraicComplex& source() const noexcept { return source_; }
  const AlgebraicComplex& target() const noexcept { return target_; }
  const FreeModuleMap& f2() const noexcept { return f2_; }
  const FreeModuleMap& f1() const noexcept { return f1_; }
  const FreeModuleMap& f0() const noexcept { return f0_; }

 private:
  AlgebraicComplex source_;
  AlgebraicComplex target_;
  FreeModuleMap f2_;
  FreeModuleMap f1_;
  FreeModuleMap f0_;
};

struct ChainMapCheck {
  bool ok = false;
  std::string failing_square;  // "d2" or "d1" when !ok

  explicit operator bool() const noexcept { return ok; }
};

/// Checks d2' f2 = f1 d2 and d1' f1 = f0 d1 as identities of ring matrices.
ChainMapCheck verify_chain_map(const ChainMap& m);

/// Degree k of the map induced on coker d1 ~ Z, kept both as an integer and mod |G|.
struct KInvariant {
  Integer raw;
  Integer modulus;
  Integer reduced;  // raw mod modulus, in [0, modulus)
};

KInvariant make_k_invariant(const Integer& raw, const Integer& modulus);

/// k = augmentation(f0(x)) for the generator x = e_1 of augmentation 1.
/// Throws InvariantViolation for a non-chain-map and TargetNotExact when the
/// target cokernel is not Z.
KInvariant induced_degree(const ChainMap& m);

/// Replaces f0 by f0 + ((k_target - k) / |G|) h eps, where h(1) = e_1 N and N
/// is the sum of the group elements; f2 and f1 are unchanged. Throws
/// CongruenceViolation unless k_target = k mod |G|.
ChainMap adjust_degree(const ChainMap& m, const Integer& k_target);

ChainMap identity_chain_map(const AlgebraicComplex& c);
/// -1 on every level.
ChainMap negated_identity_chain_map(const AlgebraicComplex& c);
/// outer after inner.
ChainMap compose(const ChainMap& outer, const ChainMap& inner);
/// Extends an endomorphism to the complexes stabilized by `s` trivial
/// relators, acting as the identity on the new summands of F2.
ChainMap stabilize(const ChainMap& m, std::size_t s);

/// The self-map of standard_complex(n) given by
///   f0 = 1+a+b,  f1 = [[1+a-ba, b-1], [0, 1]],  f2 = diag(1+a-ba, 1, 1).
ChainMap standard_alpha(int n);
/// Same f1, f0 with f2 = diag(2-b, 1, 1).
ChainMap standard_alpha_prime(int n);

/// Matrix of f2 restricted to pi_2, in the kernel bases of source and target.
IntMatrix restrict_to_pi2(const ChainMap& m);
/// Same with caller-supplied kernel bases.
IntMatrix restrict_to_pi2(const ChainMap& m, const Lattice& source_pi2, const Lattice& target_pi2);

/// Determinants entering k det(f2|pi2) det(f1) = det(f2) det(f0).
struct DetIdentityReport {
  KInvariant k;
  Integer det_restriction;
  Integer det_f2;
  Integer det_f1;
  Integer det_f0;
  // block-triangular shortcuts, when the ring matrix is triangular
  std::optional<Integer> block_det_f2;
  std::optional<Integer> block_det_f1;
  std::optional<Integer> block_det_f0;
  bool block_dets_agree = true;
  bool holds = false;
};

/// Requires an endomorphism-shaped map (equal ranks on both sides) between
/// exact complexes.
DetIdentityReport verify_det_identity(const ChainMap& m);

struct SwanWitness {
  std::string name;  // "alpha" or "negated-identity"
  std::size_t stabilization = 0;
  bool chain_map = false;
  KInvariant k;
  Integer det_restriction;
  bool automorphism = false;  // |det| == 1 on pi_2
};

struct SwanWitnessReport {
  int n = 0;
  Integer modulus;
  std::vector<SwanWitness> witnesses;
  /// 3 and -1 are realized by automorphisms of pi_2, unchanged under stabilization.
  bool ok = false;
};

/// Throws CoprimalityViolation when 3 divides n.
SwanWitnessReport swan_witnesses(int n, const std::vector<std::size_t>& stabilizations = {1, 2});

}  // namespace d2
