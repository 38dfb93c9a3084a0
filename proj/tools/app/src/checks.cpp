#include "d2app/checks.hpp"

#include "d2/d2.hpp"

namespace d2app {

using d2::Integer;
using nlohmann::ordered_json;

namespace {

ordered_json n_param(int n) { return {{"n", n}}; }

Integer pow3(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, e);
  return r;
}

Integer expr_det(const d2::DihedralGroup& g, std::string_view expr) {
  return d2::det(d2::regular_rep(d2::parse_ring_expression(expr, g)));
}

void require(CheckRecord& r, bool ok, const std::string& why) {
  if (!ok) {
    r.status = Status::Fail;
    if (r.note.empty()) r.note = why;
  }
}

ordered_json ranks_json(const d2::CohomologyRanks& h) { return ordered_json::array({h.h0, h.h1, h.h2}); }

}  // namespace

void add_complex_checks(Report& report, int n, const std::vector<std::size_t>& stabilizations) {
  const d2::DihedralGroup g(n);
  const auto p = d2::d4n_presentation(n);

  report.run("presentation.relators", n_param(n), [&](CheckRecord& r) {
    p.validate();
    std::size_t trivial = 0;
    for (const auto& w : p.relators) trivial += d2::evaluate_word(w, g) == g.identity();
    r.values["relators"] = p.relators.size();
    r.values["trivial"] = trivial;
    require(r, trivial == p.relators.size(), "a relator is not trivial in the group");
  });

  report.run("complex.chain_property", n_param(n), [&](CheckRecord& r) {
    // construction enforces d1 d2 = 0 and augmentation o d1 = 0
    const auto cay = d2::cayley_complex(p, g);
    const auto std_c = d2::standard_complex(n);
    std::size_t built = 2;
    for (auto s : stabilizations) {
      d2::cayley_complex(d2::d4n_presentation(n, static_cast<int>(s)), g);
      d2::stabilize(std_c, s);
      built += 2;
    }
    r.values["complexes"] = built;
    r.values["cayley_ranks"] = ordered_json::array({cay.r2(), cay.r1(), cay.r0()});
  });

  report.run("complex.exact", n_param(n), [&](CheckRecord& r) {
    const auto a = d2::certify_exact(d2::cayley_complex(p, g));
    const auto b = d2::certify_exact(d2::standard_complex(n));
    r.values["cayley_d1_rank"] = a.d1_rank;
    r.values["cayley_d2_rank"] = a.d2_rank;
    r.values["standard_d1_rank"] = b.d1_rank;
    r.values["standard_d2_rank"] = b.d2_rank;
    require(r, a.exact_at_f1 && a.cokernel_is_z && a.augmentation_realizes, "cayley complex not certified");
    require(r, b.exact_at_f1 && b.cokernel_is_z && b.augmentation_realizes, "standard complex not certified");
  });

  report.run("complex.images_agree", n_param(n), [&](CheckRecord& r) {
    const auto x = d2::image_lattice(d2::to_integer_matrix(d2::cayley_complex(p, g).d2()));
    const auto y = d2::image_lattice(d2::to_integer_matrix(d2::standard_complex(n).d2()));
    const bool eq = d2::lattice_equal(x, y);
    r.values["equal"] = eq;
    require(r, eq, "images of d2 differ");
  });

  report.run("pi2.rank", n_param(n), [&](CheckRecord& r) {
    const auto a = d2::pi2(d2::cayley_complex(p, g));
    const auto b = d2::pi2(d2::standard_complex(n));
    const auto expected = static_cast<std::size_t>(8 * n - 1);
    r.values["cayley"] = a.rank();
    r.values["standard"] = b.rank();
    r.values["expected"] = expected;
    r.values["saturated"] = d2::is_saturated(a.lattice) && d2::is_saturated(b.lattice);
    require(r, a.rank() == expected && b.rank() == expected, "pi_2 rank differs from 8n-1");
    require(r, r.values["saturated"].get<bool>(), "kernel basis not saturated");
  });
}

void add_determinant_checks(Report& report, int n) {
  const d2::DihedralGroup g(n);
  const bool coprime = n % 3 != 0;

  report.run("alpha.commutes", n_param(n), [&](CheckRecord& r) {
    const auto a = d2::verify_chain_map(d2::standard_alpha(n));
    const auto b = d2::verify_chain_map(d2::standard_alpha_prime(n));
    r.values["alpha"] = a.ok;
    r.values["alpha_prime"] = b.ok;
    require(r, a.ok, "alpha fails at square " + a.failing_square);
    require(r, b.ok, "alpha' fails at square " + b.failing_square);
  });

  report.run("det.one_plus_a_plus_b", n_param(n), [&](CheckRecord& r) {
    const auto d = expr_det(g, "1+a+b");
    r.values["det"] = to_json(d);
    if (!coprime) {
      r.status = Status::Skipped;
      r.note = "3 divides n; value not compared";
      return;
    }
    r.values["expected"] = -3;
    require(r, d == -3, "det(1+a+b) != -3");
  });

  report.run("det.two_minus_b", n_param(n), [&](CheckRecord& r) {
    const auto d = expr_det(g, "2-b");
    const auto expected = pow3(2UL * static_cast<unsigned long>(n));
    r.values["det"] = to_json(d);
    r.values["expected"] = to_json(expected);
    require(r, d == expected, "det(2-b) != 3^{2n}");
  });

  report.run("det.one_plus_a_minus_ba", n_param(n), [&](CheckRecord& r) {
    const auto d = expr_det(g, "1+a-ba");
    r.values["det"] = to_json(d);
    r.values["nonzero"] = d != 0;
    if (!coprime) {
      r.status = Status::Skipped;
      r.note = "3 divides n; nonzeroness not required";
      return;
    }
    require(r, d != 0, "det(1+a-ba) = 0");
  });

  report.run("det.eta_identity", n_param(n), [&](CheckRecord& r) {
    if (!coprime) {
      r.status = Status::Skipped;
      r.note = "3 divides n";
      return;
    }
    const auto rep = d2::verify_det_identity(d2::standard_alpha_prime(n));
    const Integer lhs = 3 * rep.det_restriction * rep.det_f1;
    const Integer rhs = pow3(2UL * static_cast<unsigned long>(n)) * -3;
    r.values["det_eta"] = to_json(rep.det_restriction);
    r.values["det_f1"] = to_json(rep.det_f1);
    r.values["lhs"] = to_json(lhs);
    r.values["rhs"] = to_json(rhs);
    require(r, rep.holds, "k det(f2|pi2) det(f1) != det(f2) det(f0)");
    require(r, lhs == rhs, "3 det(eta) det(1+a-ba) != 3^{2n} (-3)");
  });

  report.run("theta.isomorphism", n_param(n), [&](CheckRecord& r) {
    if (!coprime) {
      r.status = Status::Skipped;
      r.note = "3 divides n; witness needs 3 coprime to n";
      return;
    }
    const auto rep = d2::verify_det_identity(d2::standard_alpha(n));
    r.values["k"] = to_json(rep.k.raw);
    r.values["det_theta"] = to_json(rep.det_restriction);
    r.values["det_f2"] = to_json(rep.det_f2);
    r.values["det_f1"] = to_json(rep.det_f1);
    r.values["det_f0"] = to_json(rep.det_f0);
    r.values["block_dets_agree"] = rep.block_dets_agree;
    require(r, rep.holds, "determinant identity fails");
    require(r, rep.block_dets_agree, "block determinants disagree");
    require(r, abs(rep.det_restriction) == 1, "|det theta| != 1");
    require(r, rep.k.raw == 3, "k != 3");
  });
}

void add_swan_checks(Report& report, int n, const std::vector<std::size_t>& stabilizations) {
  ordered_json params = n_param(n);
  params["s"] = stabilizations;
  report.run("swan.witnesses", params, [&](CheckRecord& r) {
    if (n % 3 == 0) {
      r.status = Status::Skipped;
      r.note = "3 divides n; 3 is not a unit mod 4n";
      return;
    }
    const auto rep = d2::swan_witnesses(n, stabilizations);
    r.values["modulus"] = to_json(rep.modulus);
    auto& ws = r.values["witnesses"] = ordered_json::array();
    for (const auto& w : rep.witnesses) {
      ws.push_back({{"name", w.name},
                    {"s", w.stabilization},
                    {"chain_map", w.chain_map},
                    {"k", to_json(w.k.reduced)},
                    {"det_restriction", to_json(w.det_restriction)},
                    {"automorphism", w.automorphism}});
    }
    require(r, rep.ok, "a witness does not realize 3 or -1");
  });
}

void add_cohomology_checks(Report& report, int n, const std::vector<std::size_t>& stabilizations) {
  const d2::DihedralGroup g(n);
  const auto cay = d2::cayley_complex(d2::d4n_presentation(n), g);

  report.run("cohomology.ranks", n_param(n), [&](CheckRecord& r) {
    const auto sc = d2::second_cohomology(cay);
    const d2::CohomologyRanks h{d2::h0(cay), d2::h1(cay), sc.h2};
    const auto hs = d2::cohomology_ranks(d2::standard_complex(n));
    r.values["h"] = ranks_json(h);
    r.values["standard_h"] = ranks_json(hs);
    r.values["hom_dimension"] = sc.hom_dimension;
    r.values["restriction_rank"] = sc.restriction_rank;
    const d2::CohomologyRanks expected{1, 2, 3};
    require(r, h == expected && hs == expected, "cohomology ranks differ from (1, 2, 3)");
    require(r, sc.restriction_invariant, "restricted functionals not invariant");
    require(r, sc.hom_dimension >= sc.h2, "dim Hom(J, F2) < h2");
  });

  report.run("euler.bound", [&] {
    auto p = n_param(n);
    p["s"] = stabilizations;
    return p;
  }(), [&](CheckRecord& r) {
    const auto h = d2::cohomology_ranks(cay);
    const auto base = d2::euler_bound(cay, h);
    r.values["euler"] = base.euler;
    r.values["bound"] = base.bound;
    r.values["pi2_rank"] = base.pi2_rank.value_or(-1);
    require(r, base.satisfied && base.minimal && base.euler == 2, "cayley complex not minimal with euler 2");
    require(r, base.rank_formula_holds, "pi_2 rank formula fails");
    auto& st = r.values["stabilized"] = ordered_json::array();
    for (auto s : stabilizations) {
      const auto c = d2::cayley_complex(d2::d4n_presentation(n, static_cast<int>(s)), g);
      const auto e = d2::euler_bound(c, h);
      st.push_back({{"s", s}, {"euler", e.euler}, {"pi2_rank", e.pi2_rank.value_or(-1)}});
      require(r, e.satisfied && e.euler >= 2, "stabilized complex violates the bound");
      require(r, e.rank_formula_holds, "pi_2 rank formula fails after stabilization");
    }
  });
}

void add_group_checks(Report& report, int n, const std::vector<std::size_t>& stabilizations) {
  add_complex_checks(report, n, stabilizations);
  add_determinant_checks(report, n);
  add_swan_checks(report, n, stabilizations);
  add_cohomology_checks(report, n, stabilizations);
}

void add_unit_checks(Report& report, int m, const Config& config) {
  const auto params = ordered_json{{"m", m}};

  report.run("units.lemma_divisibility", params, [&](CheckRecord& r) {
    if (m < 4) {
      r.status = Status::Skipped;
      r.note = "needs m >= 4";
      return;
    }
    const bool ok = d2::lemma_divisibility(m);
    r.values["holds"] = ok;
    require(r, ok, "2^m does not divide 3^{2^{m-3}} - 1 + 2^{m-1}");
  });

  report.run("units.order_of_three", params, [&](CheckRecord& r) {
    const auto ord = d2::order_of_three(m);
    Integer expected = 2;
    if (m >= 3) mpz_ui_pow_ui(expected.get_mpz_t(), 2, static_cast<unsigned long>(m - 2));
    r.values["order"] = to_json(ord);
    r.values["expected"] = to_json(expected);
    require(r, ord == expected, "unexpected order of 3");
  });

  report.run("units.minus_one_not_power_of_three", params, [&](CheckRecord& r) {
    if (m < 3) {
      r.status = Status::Skipped;
      r.note = "needs m >= 3";
      return;
    }
    const bool ok = d2::minus_one_not_power_of_three(m);
    r.values["holds"] = ok;
    require(r, ok, "-1 is a power of 3");
  });

  report.run("units.generation", params, [&](CheckRecord& r) {
    const auto res = d2::generates_units({Integer(3), Integer(-1)}, m, config.exhaustive_limit);
    r.values["generates"] = res.generates;
    r.values["subgroup_size"] = to_json(res.subgroup_size);
    r.values["method"] = d2::to_string(res.method);
    require(r, res.generates, "{3, -1} does not generate the units");
  });

  report.run("swan.surjectivity", params, [&](CheckRecord& r) {
    const auto rep = d2::swan_surjectivity_report(m, config.witness_limit, config.exhaustive_limit);
    r.values["n"] = rep.n;
    r.values["witness_computed"] = rep.witness_computed;
    r.values["full_certificate"] = rep.full_certificate;
    r.note = rep.witness_note;
    require(r, rep.ok, "surjectivity not established");
  });
}

void add_expression_check(Report& report, const std::string& expr, int n, d2::BasisOrder order) {
  report.run("det.expression", {{"n", n}, {"expr", expr}, {"order", d2::to_string(order)}}, [&](CheckRecord& r) {
    const d2::DihedralGroup g(n);
    const auto d = d2::det(d2::regular_rep(d2::parse_ring_expression(expr, g), order));
    r.values["det"] = to_json(d);
    r.values["nonzero"] = d != 0;
  });
}

Report verify_all(const Config& config) {
  d2::set_dimension_limit(config.guard);
  Report report("verify-all");
  for (int n : config.n_list) {
    if (n < 1) throw d2::ParseError("n must be positive");
    add_group_checks(report, n, config.stabilizations);
  }
  for (int m : config.m_list) {
    if (m < 2 || m > 64) throw d2::ParseError("m must lie in 2..64");
    add_unit_checks(report, m, config);
  }
  return report;
}

}  // namespace d2app
