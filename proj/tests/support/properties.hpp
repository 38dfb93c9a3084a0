#pragma once

// Randomized property suites with fixed seeds. Each returns the number of
// cases tried and how many failed, so the same code feeds the unit tests and
// the acceptance run.

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "d2/d2.hpp"
#include "oracles.hpp"

namespace d2::props {

struct Result {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures++ == 0) first_failure = what;
  }
};

inline Result det_basis_order_invariance(std::size_t samples = 100, std::uint64_t seed = 0x5eed) {
  Result r{"det basis-order invariance"};
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < samples; ++t) {
    const int n = 1 + static_cast<int>(t % 3);
    const DihedralGroup g(n);
    const auto x = oracle::random_ring_element(rng, g);
    const auto reference = oracle::rational_det(regular_rep(x, BasisOrder::Canonical));
    bool ok = true;
    for (auto order : {BasisOrder::Canonical, BasisOrder::PowersDescending, BasisOrder::Interleaved})
      ok = ok && det(regular_rep(x, order)) == reference;
    r.check(ok, "sample " + std::to_string(t) + ": " + x.to_string());
  }
  return r;
}

inline Result det_multiplicativity(std::size_t samples = 30, std::uint64_t seed = 0xde7) {
  Result r{"det multiplicativity"};
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < samples; ++t) {
    const std::size_t n = 1 + t % 30;
    const auto a = oracle::random_matrix(rng, n, n, -3, 3);
    const auto b = oracle::random_matrix(rng, n, n, -3, 3);
    const Integer prod = det(a) * det(b);
    r.check(det(a * b) == prod, "size " + std::to_string(n));
  }
  return r;
}

inline FreeModuleMap random_map(std::mt19937_64& rng, const DihedralGroup& g, std::size_t rows, std::size_t cols) {
  std::vector<std::vector<RingElement>> m(rows);
  for (auto& row : m)
    for (std::size_t j = 0; j < cols; ++j) row.push_back(oracle::random_ring_element(rng, g, -2, 2));
  return FreeModuleMap(g, std::move(m), cols);
}

inline Result integer_matrix_functoriality(std::size_t samples = 30, std::uint64_t seed = 0xf00) {
  Result r{"to_integer_matrix functoriality"};
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < samples; ++t) {
    const DihedralGroup g(1 + static_cast<int>(t % 3));
    const std::size_t p = 1 + t % 3, q = 1 + (t / 3) % 3, s = 1 + (t / 9) % 3;
    const auto f = random_map(rng, g, p, q);
    const auto h = random_map(rng, g, q, s);
    bool ok = true;
    for (auto order : {BasisOrder::Canonical, BasisOrder::PowersDescending, BasisOrder::Interleaved})
      ok = ok && to_integer_matrix(compose(f, h), order) == to_integer_matrix(f, order) * to_integer_matrix(h, order);
    ok = ok && to_integer_matrix(FreeModuleMap::identity(g, p)) == IntMatrix::identity(p * static_cast<std::size_t>(g.order()));
    r.check(ok, "sample " + std::to_string(t));
  }
  return r;
}

inline Result k_multiplicativity(const std::vector<int>& ns = {1, 2, 4, 5}) {
  Result r{"k-invariant multiplicativity"};
  for (int n : ns) {
    const auto alpha = standard_alpha(n);
    const auto& c = alpha.source();
    std::vector<ChainMap> maps{identity_chain_map(c), negated_identity_chain_map(c), alpha,
                               adjust_degree(alpha, 3 + 4 * n), adjust_degree(negated_identity_chain_map(c), -1 - 8 * n)};
    const Integer mod = 4 * n;
    for (const auto& f : maps)
      for (const auto& h : maps) {
        const auto kf = induced_degree(f), kh = induced_degree(h);
        const auto kfh = induced_degree(compose(f, h));
        const Integer expected = make_k_invariant(kf.raw * kh.raw, mod).reduced;
        r.check(kfh.reduced == expected, "n=" + std::to_string(n));
      }
  }
  return r;
}

inline Result kernel_saturation(std::size_t samples = 30, std::uint64_t seed = 0x5a7) {
  Result r{"kernel saturation"};
  auto unit_divisors = [](const Lattice& l) {
    for (const auto& d : snf(l.basis()))
      if (d != 1) return false;
    return true;
  };
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < samples; ++t) {
    // multiply by 2 to make saturation non-trivial
    auto m = oracle::random_matrix(rng, 3 + t % 4, 7, -4, 4);
    for (std::size_t j = 0; j < m.cols(); j += 2) m(0, j) *= 2;
    const auto k = kernel_basis(m);
    r.check(unit_divisors(k) && (m * k.basis()).is_zero(), "random " + std::to_string(t));
  }
  for (int n : {1, 2, 3, 4}) {
    const DihedralGroup g(n);
    for (const auto& c : {standard_complex(n), cayley_complex(d4n_presentation(n), g), stabilize(standard_complex(n), 2)}) {
      r.check(unit_divisors(kernel_basis(to_integer_matrix(c.d2()))), "pi2 n=" + std::to_string(n));
      r.check(unit_divisors(kernel_basis(to_integer_matrix(c.d1()))), "ker d1 n=" + std::to_string(n));
    }
  }
  return r;
}

inline Result chain_property(const std::vector<int>& ns = {1, 2, 3, 4, 5}) {
  Result r{"chain property"};
  auto holds = [](const AlgebraicComplex& c) {
    const auto d1 = to_integer_matrix(c.d1());
    const auto d2 = to_integer_matrix(c.d2());
    if (!(d1 * d2).is_zero()) return false;
    // augmentation is the all-ones row on F0
    for (std::size_t j = 0; j < d1.cols(); ++j) {
      Integer s = 0;
      for (std::size_t i = 0; i < d1.rows(); ++i) s += d1(i, j);
      if (s != 0) return false;
    }
    return true;
  };
  for (int n : ns) {
    const DihedralGroup g(n);
    for (int s = 0; s <= 2; ++s) {
      const auto cay = cayley_complex(d4n_presentation(n, s), g);
      const auto st = stabilize(standard_complex(n), static_cast<std::size_t>(s));
      r.check(holds(cay), "cayley n=" + std::to_string(n) + " s=" + std::to_string(s));
      r.check(holds(st), "standard n=" + std::to_string(n) + " s=" + std::to_string(s));
    }
    const auto alpha = standard_alpha(n);
    r.check(holds(alpha.source()) && holds(standard_alpha_prime(n).target()), "alpha n=" + std::to_string(n));
  }
  return r;
}

inline Result restriction_basis_independence(std::size_t samples = 10, std::uint64_t seed = 0xba5) {
  Result r{"restriction basis independence"};
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < samples; ++t) {
    const int n = t % 2 ? 1 : 2;
    const auto alpha = standard_alpha(n);
    const auto base = pi2(alpha.source()).lattice;
    const auto u = oracle::random_unimodular(rng, base.rank());
    const Lattice other(base.basis() * u);
    const auto theta = restrict_to_pi2(alpha, base, base);
    const auto theta2 = restrict_to_pi2(alpha, other, other);
    r.check(det(theta2) == det(theta) && u * theta2 == theta * u, "sample " + std::to_string(t));
  }
  return r;
}

}  // namespace d2::props
