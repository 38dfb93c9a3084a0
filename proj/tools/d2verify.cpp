#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "d2/d2.hpp"
#include "d2app/checks.hpp"
#include "d2app/config.hpp"
#include "d2app/report.hpp"

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kGuard = 3 };

struct Options {
  std::string n;
  std::string m;
  std::string s;
  std::string order = "canonical";
  std::string out;
  std::string load;
  std::size_t guard = 0;
  bool json = false;
  std::string expr;
  std::string object;
};

void write_output(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw d2::ParseError("cannot write " + o.out);
  f << text;
}

int emit(const Options& o, const d2app::Report& report) {
  std::ostringstream s;
  if (o.json)
    s << report.to_json().dump(2) << '\n';
  else
    report.write_text(s);
  write_output(o, s.str());
  return report.passed() ? kPass : kFail;
}

std::vector<std::size_t> to_sizes(const std::vector<int>& v) {
  std::vector<std::size_t> out;
  for (int x : v) {
    if (x < 0) throw d2::ParseError("stabilization must be non-negative");
    out.push_back(static_cast<std::size_t>(x));
  }
  return out;
}

int single_n(const Options& o, const d2app::Config& c) {
  const auto ns = o.n.empty() ? c.n_list : d2app::parse_int_list(o.n);
  if (ns.size() != 1) throw d2::ParseError("expected a single value for --n");
  if (ns.front() < 1) throw d2::ParseError("n must be positive");
  return ns.front();
}

d2::IntMatrix dump_object(const std::string& object, int n, d2::BasisOrder order, const std::string& expr) {
  const d2::DihedralGroup g(n);
  if (object == "d1") return d2::to_integer_matrix(d2::standard_complex(n).d1(), order);
  if (object == "d2") return d2::to_integer_matrix(d2::standard_complex(n).d2(), order);
  if (object == "cayley-d1") return d2::to_integer_matrix(d2::cayley_complex(d2::d4n_presentation(n), g).d1(), order);
  if (object == "cayley-d2") return d2::to_integer_matrix(d2::cayley_complex(d2::d4n_presentation(n), g).d2(), order);
  if (object == "pi2") return d2::pi2(d2::standard_complex(n)).lattice.basis();
  if (object == "theta") return d2::restrict_to_pi2(d2::standard_alpha(n));
  if (object == "eta") return d2::restrict_to_pi2(d2::standard_alpha_prime(n));
  if (object == "regular") {
    if (expr.empty()) throw d2::ParseError("dump regular needs --expr");
    return d2::regular_rep(d2::parse_ring_expression(expr, g), order);
  }
  throw d2::ParseError("unknown object '" + object + "'");
}

int run(CLI::App& app, const Options& o, d2app::Config config) {
  if (o.guard != 0) config.guard = o.guard;
  if (!o.n.empty()) config.n_list = d2app::parse_int_list(o.n);
  if (!o.m.empty()) config.m_list = d2app::parse_int_list(o.m);
  if (!o.s.empty()) config.stabilizations = to_sizes(d2app::parse_int_list(o.s));
  d2::set_dimension_limit(config.guard);
  const auto order = d2::parse_basis_order(o.order);

  if (app.got_subcommand("verify-all")) {
    // a bare --n or --m restricts the run to that family
    if (!o.n.empty() && o.m.empty()) config.m_list.clear();
    if (!o.m.empty() && o.n.empty()) config.n_list.clear();
    return emit(o, d2app::verify_all(config));
  }
  if (app.got_subcommand("det")) {
    d2app::Report report("det");
    if (!o.load.empty()) {
      report.run("det.matrix", {{"path", o.load}}, [&](d2app::CheckRecord& r) {
        const auto m = d2::load_matrix(o.load);
        if (!m.is_square()) throw d2::DimensionMismatch("matrix is not square");
        r.values["det"] = d2app::to_json(d2::det(m));
      });
    } else {
      if (o.expr.empty()) throw d2::ParseError("det needs an expression or --load");
      d2app::add_expression_check(report, o.expr, single_n(o, config), order);
    }
    if (!o.json && o.out.empty() && report.passed()) {
      const auto& v = report.checks().back().values["det"];
      std::cout << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      return kPass;
    }
    return emit(o, report);
  }
  if (app.got_subcommand("cayley")) {
    d2app::Report report("cayley");
    if (!o.load.empty()) {
      report.run("complex.exact", {{"path", o.load}}, [&](d2app::CheckRecord& r) {
        const auto c = d2::load_complex(o.load);
        const auto cert = d2::certify_exact(c);
        r.values["n"] = c.group().n();
        r.values["ranks"] = nlohmann::ordered_json::array({c.r2(), c.r1(), c.r0()});
        r.values["pi2_rank"] = cert.pi2_rank;
      });
    } else {
      d2app::add_complex_checks(report, single_n(o, config), config.stabilizations);
    }
    return emit(o, report);
  }
  if (app.got_subcommand("swan")) {
    d2app::Report report("swan");
    if (!o.m.empty()) {
      for (int m : config.m_list) {
        if (m < 2 || m > 64) throw d2::ParseError("m must lie in 2..64");
        d2app::add_unit_checks(report, m, config);
      }
    } else {
      const int n = single_n(o, config);
      d2app::add_determinant_checks(report, n);
      d2app::add_swan_checks(report, n, config.stabilizations);
    }
    return emit(o, report);
  }
  if (app.got_subcommand("cohomology")) {
    d2app::Report report("cohomology");
    d2app::add_cohomology_checks(report, single_n(o, config), config.stabilizations);
    return emit(o, report);
  }
  if (app.got_subcommand("units")) {
    d2app::Report report("units");
    for (int m : config.m_list) {
      if (m < 2 || m > 64) throw d2::ParseError("m must lie in 2..64");
      d2app::add_unit_checks(report, m, config);
    }
    return emit(o, report);
  }
  if (app.got_subcommand("dump")) {
    std::ostringstream s;
    if (o.object == "complex" || o.object == "cayley-complex") {
      const int n = single_n(o, config);
      if (o.object == "complex")
        d2::write_complex(s, d2::standard_complex(n));
      else
        d2::write_complex(s, d2::cayley_complex(d2::d4n_presentation(n), d2::DihedralGroup(n)));
    } else {
      d2::write_matrix(s, dump_object(o.object, single_n(o, config), order, o.expr));
    }
    write_output(o, s.str());
    return kPass;
  }
  throw d2::ParseError("no subcommand");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the D(2) computations for dihedral groups D_4n"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "n or list of n (e.g. 1,2,4 or 4..8)");
    sub->add_option("--s", o.s, "stabilizations (e.g. 1,2)");
    sub->add_option("--guard", o.guard, "largest matrix dimension");
    sub->add_flag("--json", o.json, "JSON output");
    sub->add_option("--out", o.out, "write output to a file");
  };

  auto* verify = app.add_subcommand("verify-all", "run every check");
  common(verify);
  verify->add_option("--m", o.m, "exponents m for the unit-group checks (e.g. 2..16)");

  auto* cayley = app.add_subcommand("cayley", "build and certify the Cayley complex");
  common(cayley);
  cayley->add_option("--load", o.load, "certify a complex read from a file instead");

  auto* det = app.add_subcommand("det", "determinant of the regular representation");
  common(det);
  det->add_option("expr", o.expr, "group-ring expression such as 1+a+b");
  det->add_option("--order", o.order, "basis order: canonical, descending, interleaved");
  det->add_option("--load", o.load, "determinant of a matrix file instead");

  auto* swan = app.add_subcommand("swan", "k-invariant witnesses, or surjectivity with --m");
  common(swan);
  swan->add_option("--m", o.m, "exponents m");

  auto* coh = app.add_subcommand("cohomology", "H^i(-; F2) and the Euler bound");
  common(coh);

  auto* units = app.add_subcommand("units", "unit group of Z/2^m");
  common(units);
  units->add_option("--m", o.m, "exponents m");

  auto* dump = app.add_subcommand("dump", "write a matrix or complex in text form");
  common(dump);
  dump->add_option("object", o.object, "d1, d2, cayley-d1, cayley-d2, pi2, theta, eta, regular, complex, cayley-complex")
      ->required();
  dump->add_option("--order", o.order, "basis order");
  dump->add_option("--expr", o.expr, "expression for 'regular'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    return run(app, o, d2app::load_config_from_env());
  } catch (const d2::SizeGuardExceeded& e) {
    std::cerr << "size guard: " << e.what() << '\n';
    return kGuard;
  } catch (const d2::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const d2::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
}
