#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "d2/free_module_map.hpp"
#include "d2/group.hpp"
#include "d2/lattice.hpp"

namespace d2 {

/// F2 --d2--> F1 --d1--> F0 of free Z[G]-modules with the augmentation on F0.
///
/// Construction enforces d1 d2 = 0 and augmentation o d1 = 0; exactness is a
/// separate certificate (see certify_exact).
class AlgebraicComplex {
 public:
  AlgebraicComplex(FreeModuleMap d2, FreeModuleMap d1);

  const DihedralGroup& group() const noexcept { return d1_.group(); }
  const FreeModuleMap& d2() const noexcept { return d2_; }
  const FreeModuleMap& d1() const noexcept { return d1_; }
  std::size_t r2() const noexcept { return d2_.dom_rank(); }
  std::size_t r1() const noexcept { return d1_.dom_rank(); }
  std::size_t r0() const noexcept { return d1_.cod_rank(); }
  /// r2 - r1 + r0
  long euler_characteristic() const noexcept {
    return static_cast<long>(r2()) - static_cast<long>(r1()) + static_cast<long>(r0());
  }

  friend bool operator==(const AlgebraicComplex&, const AlgebraicComplex&) = default;

 private:
  FreeModuleMap d2_;
  FreeModuleMap d1_;
};

/// Left Fox derivative d(word)/d(x_gen) in Z[G], generators sent to `images`:
/// d(uv) = du + u dv, dx/dx = 1, d(x^{-1})/dx = -x^{-1}.
RingElement fox_derivative(const Word& word, int gen, const DihedralGroup& group,
                           const std::vector<GroupElement>& images);
RingElement fox_derivative(const Word& word, int gen, const DihedralGroup& group);

/// Fox derivative read from the right end of the word:
/// d(uv) = du v + dv, dx/dx = 1, d(x^{-1})/dx = -x^{-1}.
/// Satisfies sum_x (x - 1) d(w)/dx = w - 1, the identity needed for right modules.
RingElement right_fox_derivative(const Word& word, int gen, const DihedralGroup& group,
                                 const std::vector<GroupElement>& images);

/// Algebraic complex of the Cayley complex of a presentation of the group.
///
/// r0 = 1, r1 = generators, r2 = relators; d1 sends the j-th generator to
/// (g_j - 1) and column k of d2 holds the right Fox derivatives of relator k,
/// so that d1 d2 = 0 for right modules. Throws RelatorNotSatisfied when a
/// relator is not trivial in the group.
AlgebraicComplex cayley_complex(const Presentation& p, const DihedralGroup& group,
                                const std::vector<GroupElement>& images);
/// Generators 0 and 1 sent to a and b.
AlgebraicComplex cayley_complex(const Presentation& p, const DihedralGroup& group);

/// The hand-written complex over D_{4n}:
///   d2 = [[Sigma, 0, 1+ba], [0, 1+b, a-1]],  d1 = [a-1, b-1],
/// with Sigma = 1 + a + ... + a^{2n-1}.
AlgebraicComplex standard_complex(int n);

/// Appends `s` zero columns to d2 (trivial relators).
AlgebraicComplex stabilize(const AlgebraicComplex& c, std::size_t s);

struct ExactnessCertificate {
  bool exact_at_f1 = false;             // im d2 == ker d1 as lattices
  bool cokernel_is_z = false;           // d1 has rank 4n r0 - 1 with unit divisors
  bool augmentation_realizes = false;   // augmentation kills im d1 and hits 1
  std::size_t d1_rank = 0;
  std::size_t d2_rank = 0;
  std::size_t pi2_rank = 0;
  std::vector<Integer> d1_divisors;
};

/// Throws NotExact naming the failing stage ("F1" or "F0").
ExactnessCertificate certify_exact(const AlgebraicComplex& c);

/// ker d2 together with the right action of a and b restricted to it.
struct Pi2Lattice {
  Lattice lattice;
  IntMatrix action_a;
  IntMatrix action_b;

  std::size_t rank() const noexcept { return lattice.rank(); }
};

/// Kernel lattice of d2 and its G-action. Expects an exact complex.
Pi2Lattice pi2(const AlgebraicComplex& c);

// Text format: a header line "n r2 r1 r0", then the r1*r2 entries of d2 and
// the r0*r1 entries of d1 in row-major order, one coefficient vector of
// length 4n (canonical order) per line. Lines starting with '#' are ignored.
void write_complex(std::ostream& out, const AlgebraicComplex& c);
AlgebraicComplex read_complex(std::istream& in);
void save_complex(const std::string& path, const AlgebraicComplex& c);
AlgebraicComplex load_complex(const std::string& path);

}  // namespace d2
