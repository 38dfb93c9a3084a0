#include "d2/normal_form.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <utility>

#include "d2/errors.hpp"

namespace d2 {

namespace {

std::atomic<std::size_t> g_dimension_limit{kDefaultDimensionLimit};

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  auto ra = m.row(a);
  auto rb = m.row(b);
  for (std::size_t c = 0; c < m.cols(); ++c) swap(ra[c], rb[c]);
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) swap(m(r, a), m(r, b));
}

// row[target] -= q * row[source], restricted to columns >= first.
void sub_row(IntMatrix& m, std::size_t target, std::size_t source, const Integer& q, std::size_t first = 0) {
  auto rt = m.row(target);
  auto rs = m.row(source);
  for (std::size_t c = first; c < m.cols(); ++c)
    if (sgn(rs[c]) != 0) rt[c] -= q * rs[c];
}

int cmpabs(const Integer& x, const Integer& y) { return mpz_cmpabs(x.get_mpz_t(), y.get_mpz_t()); }

void negate_row(IntMatrix& m, std::size_t r) {
  for (auto& v : m.row(r)) v = -v;
}

}  // namespace

std::size_t dimension_limit() noexcept { return g_dimension_limit.load(std::memory_order_relaxed); }

void set_dimension_limit(std::size_t limit) noexcept { g_dimension_limit.store(limit, std::memory_order_relaxed); }

void check_dimension(const IntMatrix& m, const char* operation) {
  const auto limit = dimension_limit();
  if (m.rows() > limit || m.cols() > limit)
    throw SizeGuardExceeded(std::string(operation) + ": " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + " matrix exceeds dimension limit " + std::to_string(limit));
}

Integer det(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  check_dimension(m, "det");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      swap_rows(a, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) {
  check_dimension(m, "rank");
  IntMatrix a = m;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    swap_rows(a, r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        Integer t = a(i, j) * a(r, c) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

HermiteForm hnf(const IntMatrix& m) {
  check_dimension(m, "hnf");
  HermiteForm out{m, IntMatrix::identity(m.rows()), 0, {}};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  const std::size_t rows = h.rows();
  std::size_t row = 0;
  for (std::size_t col = 0; col < h.cols() && row < rows; ++col) {
    // Euclid on rows: bring the gcd of column `col` (rows >= row) into position.
    bool found = false;
    while (true) {
      std::size_t best = rows;
      for (std::size_t r = row; r < rows; ++r) {
        if (sgn(h(r, col)) == 0) continue;
        if (best == rows || cmpabs(h(r, col), h(best, col)) < 0) best = r;
      }
      if (best == rows) break;
      found = true;
      swap_rows(h, row, best);
      swap_rows(u, row, best);
      bool clean = true;
      for (std::size_t r = row + 1; r < rows; ++r) {
        if (sgn(h(r, col)) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), h(r, col).get_mpz_t(), h(row, col).get_mpz_t());
        sub_row(h, r, row, q, col);
        sub_row(u, r, row, q);
        if (sgn(h(r, col)) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!found) continue;
    if (sgn(h(row, col)) < 0) {
      negate_row(h, row);
      negate_row(u, row);
    }
    for (std::size_t r = 0; r < row; ++r) {
      if (sgn(h(r, col)) == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(r, col).get_mpz_t(), h(row, col).get_mpz_t());
      sub_row(h, r, row, q, col);
      sub_row(u, r, row, q);
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

std::vector<Integer> snf(const IntMatrix& m) {
  check_dimension(m, "snf");
  IntMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<Integer> divisors;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (sgn(a(i, j)) != 0 && (pr == rows || cmpabs(a(i, j), a(pr, pc)) < 0)) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    swap_rows(a, t, pr);
    swap_cols(a, t, pc);
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(a(i, t)) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        sub_row(a, i, t, q, t);
        if (sgn(a(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(a(t, j)) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        for (std::size_t i = t; i < rows; ++i)
          if (sgn(a(i, t)) != 0) a(i, j) -= q * a(i, t);
        if (sgn(a(t, j)) != 0) clean = false;
      }
      if (!clean) {
        // move the smallest remaining entry of row/column t onto the diagonal
        std::size_t br = t, bc = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (sgn(a(i, t)) != 0 && cmpabs(a(i, t), a(br, bc)) < 0) {
            br = i;
            bc = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (sgn(a(t, j)) != 0 && cmpabs(a(t, j), a(br, bc)) < 0) {
            br = t;
            bc = j;
          }
        swap_rows(a, t, br);
        swap_cols(a, t, bc);
        continue;
      }
      // divisibility chain: every remaining entry must be a multiple of the pivot
      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (bad_row == rows) break;
      sub_row(a, t, bad_row, Integer(-1), t);
    }
    divisors.push_back(abs(a(t, t)));
  }
  return divisors;
}

}  // namespace d2
