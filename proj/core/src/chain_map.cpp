#include "d2/chain_map.hpp"

#include "d2/errors.hpp"
#include "d2/normal_form.hpp"

namespace d2 {

ChainMap::ChainMap(AlgebraicComplex source, AlgebraicComplex target, FreeModuleMap f2, FreeModuleMap f1,
                   FreeModuleMap f0)
    : source_(std::move(source)), target_(std::move(target)), f2_(std::move(f2)), f1_(std::move(f1)), f0_(std::move(f0)) {
  const auto fits = [](const FreeModuleMap& f, std::size_t dom, std::size_t cod) {
    return f.dom_rank() == dom && f.cod_rank() == cod;
  };
  if (!fits(f2_, source_.r2(), target_.r2()) || !fits(f1_, source_.r1(), target_.r1()) ||
      !fits(f0_, source_.r0(), target_.r0()))
    throw DimensionMismatch("chain map components do not match the complex ranks");
  if (!(source_.group() == target_.group()) || !(f2_.group() == source_.group())) throw GroupMismatch();
}

ChainMapCheck verify_chain_map(const ChainMap& m) {
  if (!(compose(m.target().d2(), m.f2()) == compose(m.f1(), m.source().d2()))) return {false, "d2"};
  if (!(compose(m.target().d1(), m.f1()) == compose(m.f0(), m.source().d1()))) return {false, "d1"};
  return {true, {}};
}

KInvariant make_k_invariant(const Integer& raw, const Integer& modulus) {
  Integer reduced;
  mpz_fdiv_r(reduced.get_mpz_t(), raw.get_mpz_t(), modulus.get_mpz_t());
  return {raw, modulus, reduced};
}

namespace {

Integer raw_degree(const ChainMap& m) {
  Integer k = 0;
  for (std::size_t i = 0; i < m.f0().cod_rank(); ++i) k += augmentation(m.f0().at(i, 0));
  return k;
}

}  // namespace

KInvariant induced_degree(const ChainMap& m) {
  if (const auto check = verify_chain_map(m); !check)
    throw InvariantViolation("not a chain map: square at " + check.failing_square + " does not commute");
  if (m.source().r0() == 0) throw InvariantViolation("source F0 has rank zero");
  try {
    certify_exact(m.target());
  } catch (const NotExact& e) {
    throw TargetNotExact(e.what());
  }
  return make_k_invariant(raw_degree(m), m.target().group().order());
}

ChainMap adjust_degree(const ChainMap& m, const Integer& k_target) {
  const auto current = induced_degree(m);
  const Integer diff = k_target - current.raw;
  if (!mpz_divisible_p(diff.get_mpz_t(), current.modulus.get_mpz_t()))
    throw CongruenceViolation("target degree " + k_target.get_str() + " is not congruent to " + current.raw.get_str() +
                              " mod " + current.modulus.get_str());
  const Integer t = diff / current.modulus;
  const auto& g = m.target().group();
  // h eps sends every basis vector E_j of F0 to e_1 N.
  FreeModuleMap h_eps(g, m.f0().cod_rank(), m.f0().dom_rank());
  for (std::size_t j = 0; j < h_eps.dom_rank(); ++j) h_eps.at(0, j) = t * norm_element(g);
  return ChainMap(m.source(), m.target(), m.f2(), m.f1(), m.f0() + h_eps);
}

ChainMap identity_chain_map(const AlgebraicComplex& c) {
  const auto& g = c.group();
  return ChainMap(c, c, FreeModuleMap::identity(g, c.r2()), FreeModuleMap::identity(g, c.r1()),
                  FreeModuleMap::identity(g, c.r0()));
}

ChainMap negated_identity_chain_map(const AlgebraicComplex& c) {
  const auto& g = c.group();
  return ChainMap(c, c, -FreeModuleMap::identity(g, c.r2()), -FreeModuleMap::identity(g, c.r1()),
                  -FreeModuleMap::identity(g, c.r0()));
}

ChainMap compose(const ChainMap& outer, const ChainMap& inner) {
  if (!(outer.source() == inner.target())) throw DimensionMismatch("chain maps are not composable");
  return ChainMap(inner.source(), outer.target(), compose(outer.f2(), inner.f2()), compose(outer.f1(), inner.f1()),
                  compose(outer.f0(), inner.f0()));
}

ChainMap stabilize(const ChainMap& m, std::size_t s) {
  const auto& g = m.source().group();
  FreeModuleMap f2(g, m.f2().cod_rank() + s, m.f2().dom_rank() + s);
  for (std::size_t i = 0; i < m.f2().cod_rank(); ++i)
    for (std::size_t j = 0; j < m.f2().dom_rank(); ++j) f2.at(i, j) = m.f2().at(i, j);
  for (std::size_t k = 0; k < s; ++k) f2.at(m.f2().cod_rank() + k, m.f2().dom_rank() + k) = RingElement::one(g);
  return ChainMap(stabilize(m.source(), s), stabilize(m.target(), s), std::move(f2), m.f1(), m.f0());
}

namespace {

ChainMap alpha_with_top(int n, const RingElement& top) {
  auto c = standard_complex(n);
  const auto& g = c.group();
  const auto one = RingElement::one(g);
  const auto a = RingElement::of(g, g.a());
  const auto b = RingElement::of(g, g.b());
  const auto ba = b * a;
  FreeModuleMap f0(g, {{one + a + b}}, 1);
  FreeModuleMap f1(g, {{one + a - ba, b - one}, {RingElement::zero(g), one}}, 2);
  auto f2 = FreeModuleMap::diagonal(g, {top, one, one});
  return ChainMap(c, c, std::move(f2), std::move(f1), std::move(f0));
}

}  // namespace

ChainMap standard_alpha(int n) {
  const DihedralGroup g(n);
  const auto one = RingElement::one(g);
  const auto a = RingElement::of(g, g.a());
  const auto b = RingElement::of(g, g.b());
  return alpha_with_top(n, one + a - b * a);
}

ChainMap standard_alpha_prime(int n) {
  const DihedralGroup g(n);
  return alpha_with_top(n, RingElement::constant(g, 2) - RingElement::of(g, g.b()));
}

IntMatrix restrict_to_pi2(const ChainMap& m, const Lattice& source_pi2, const Lattice& target_pi2) {
  return express_in_lattice(to_integer_matrix(m.f2()) * source_pi2.basis(), target_pi2);
}

IntMatrix restrict_to_pi2(const ChainMap& m) {
  const auto source = kernel_basis(to_integer_matrix(m.source().d2()));
  if (m.source() == m.target()) return restrict_to_pi2(m, source, source);
  return restrict_to_pi2(m, source, kernel_basis(to_integer_matrix(m.target().d2())));
}

DetIdentityReport verify_det_identity(const ChainMap& m) {
  if (m.f2().dom_rank() != m.f2().cod_rank() || m.f1().dom_rank() != m.f1().cod_rank() ||
      m.f0().dom_rank() != m.f0().cod_rank())
    throw DimensionMismatch("determinant identity needs square components");
  DetIdentityReport r;
  r.k = induced_degree(m);
  certify_exact(m.source());
  r.det_restriction = det(restrict_to_pi2(m));
  r.det_f2 = det(to_integer_matrix(m.f2()));
  r.det_f1 = det(to_integer_matrix(m.f1()));
  r.det_f0 = det(to_integer_matrix(m.f0()));
  r.block_det_f2 = block_triangular_det(m.f2());
  r.block_det_f1 = block_triangular_det(m.f1());
  r.block_det_f0 = block_triangular_det(m.f0());
  const auto agrees = [](const std::optional<Integer>& block, const Integer& direct) {
    return !block || *block == direct;
  };
  r.block_dets_agree =
      agrees(r.block_det_f2, r.det_f2) && agrees(r.block_det_f1, r.det_f1) && agrees(r.block_det_f0, r.det_f0);
  r.holds = r.k.raw * r.det_restriction * r.det_f1 == r.det_f2 * r.det_f0;
  return r;
}

namespace {

SwanWitness witness(std::string name, std::size_t s, const ChainMap& m) {
  SwanWitness w;
  w.name = std::move(name);
  w.stabilization = s;
  w.chain_map = static_cast<bool>(verify_chain_map(m));
  if (!w.chain_map) return w;
  w.k = induced_degree(m);
  w.det_restriction = det(restrict_to_pi2(m));
  w.automorphism = abs(w.det_restriction) == 1;
  return w;
}

}  // namespace

SwanWitnessReport swan_witnesses(int n, const std::vector<std::size_t>& stabilizations) {
  if (n % 3 == 0)
    throw CoprimalityViolation("3 is not a unit mod " + std::to_string(4 * n) + "; the alpha witness needs 3 coprime to n");
  SwanWitnessReport report;
  report.n = n;
  report.modulus = 4 * n;
  const auto alpha = standard_alpha(n);
  const auto minus = negated_identity_chain_map(alpha.source());
  report.witnesses.push_back(witness("alpha", 0, alpha));
  report.witnesses.push_back(witness("negated-identity", 0, minus));
  for (auto s : stabilizations) {
    report.witnesses.push_back(witness("alpha", s, stabilize(alpha, s)));
    report.witnesses.push_back(witness("negated-identity", s, stabilize(minus, s)));
  }
  const auto three = make_k_invariant(3, report.modulus).reduced;
  const auto minus_one = make_k_invariant(-1, report.modulus).reduced;
  bool ok = true;
  for (const auto& w : report.witnesses) {
    const auto& expected = w.name == "alpha" ? three : minus_one;
    ok = ok && w.chain_map && w.automorphism && w.k.reduced == expected;
  }
  report.ok = ok;
  return report;
}

}  // namespace d2
