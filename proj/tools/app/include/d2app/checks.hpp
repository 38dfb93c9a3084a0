#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "d2/group.hpp"
#include "d2app/config.hpp"
#include "d2app/report.hpp"

namespace d2app {

/// Relators, complexes, exactness, pi_2, chain maps, determinants,
/// witnesses, cohomology and the Euler bound for D_{4n}.
void add_group_checks(Report& report, int n, const std::vector<std::size_t>& stabilizations);

/// Divisibility, order of 3, generation of the units and surjectivity for D_{2^m}.
void add_unit_checks(Report& report, int m, const Config& config);

void add_complex_checks(Report& report, int n, const std::vector<std::size_t>& stabilizations);
void add_determinant_checks(Report& report, int n);
void add_swan_checks(Report& report, int n, const std::vector<std::size_t>& stabilizations);
void add_cohomology_checks(Report& report, int n, const std::vector<std::size_t>& stabilizations);

/// Determinant of the regular representation of a parsed expression.
void add_expression_check(Report& report, const std::string& expr, int n, d2::BasisOrder order);

Report verify_all(const Config& config);

}  // namespace d2app
