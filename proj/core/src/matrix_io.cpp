#include "d2/matrix_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "d2/errors.hpp"

namespace d2 {

void write_matrix(std::ostream& out, const IntMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << m(r, c);
    }
    out << '\n';
  }
}

IntMatrix read_matrix(std::istream& in) {
  long long rows = -1, cols = -1;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0) throw ParseError("matrix header must be 'rows cols'");
  IntMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      std::string token;
      if (!(in >> token)) throw ParseError("matrix ends early at entry (" + std::to_string(r) + ", " + std::to_string(c) + ")");
      if (m(r, c).set_str(token, 10) != 0) throw ParseError("bad integer '" + token + "'");
    }
  }
  std::string extra;
  if (in >> extra) throw ParseError("trailing data after matrix: '" + extra + "'");
  return m;
}

void save_matrix(const std::string& path, const IntMatrix& m) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  write_matrix(out, m);
}

IntMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_matrix(in);
}

}  // namespace d2
