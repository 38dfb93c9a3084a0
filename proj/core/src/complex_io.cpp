#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "d2/complex.hpp"
#include "d2/errors.hpp"

namespace d2 {

namespace {

void write_entries(std::ostream& out, const FreeModuleMap& f) {
  for (std::size_t i = 0; i < f.cod_rank(); ++i)
    for (std::size_t j = 0; j < f.dom_rank(); ++j) {
      const auto& coeffs = f.at(i, j).coeffs();
      for (std::size_t k = 0; k < coeffs.size(); ++k) out << (k ? " " : "") << coeffs[k];
      out << '\n';
    }
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-empty, non-comment line.
  std::string next(const char* what) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return line;
    }
    throw ParseError(std::string("complex file ends before ") + what);
  }

  std::size_t line_no() const noexcept { return line_no_; }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

FreeModuleMap read_entries(LineReader& reader, const DihedralGroup& g, std::size_t cod, std::size_t dom,
                           const char* name) {
  FreeModuleMap f(g, cod, dom);
  const auto size = static_cast<std::size_t>(g.order());
  for (std::size_t i = 0; i < cod; ++i)
    for (std::size_t j = 0; j < dom; ++j) {
      std::istringstream line(reader.next(name));
      std::vector<Integer> coeffs(size);
      for (std::size_t k = 0; k < size; ++k) {
        std::string token;
        if (!(line >> token) || coeffs[k].set_str(token, 10) != 0)
          throw ParseError("line " + std::to_string(reader.line_no()) + ": expected " + std::to_string(size) +
                           " integer coefficients for " + name);
      }
      std::string extra;
      if (line >> extra) throw ParseError("line " + std::to_string(reader.line_no()) + ": too many coefficients");
      f.at(i, j) = RingElement(g, std::move(coeffs));
    }
  return f;
}

}  // namespace

void write_complex(std::ostream& out, const AlgebraicComplex& c) {
  out << c.group().n() << ' ' << c.r2() << ' ' << c.r1() << ' ' << c.r0() << '\n';
  out << "# d2\n";
  write_entries(out, c.d2());
  out << "# d1\n";
  write_entries(out, c.d1());
}

AlgebraicComplex read_complex(std::istream& in) {
  LineReader reader(in);
  std::istringstream header(reader.next("header"));
  long n = 0, r2 = -1, r1 = -1, r0 = -1;
  if (!(header >> n >> r2 >> r1 >> r0) || n < 1 || r2 < 0 || r1 < 0 || r0 < 0)
    throw ParseError("complex header must be 'n r2 r1 r0' with n >= 1");
  const DihedralGroup g(static_cast<int>(n));
  auto d2 = read_entries(reader, g, static_cast<std::size_t>(r1), static_cast<std::size_t>(r2), "d2");
  auto d1 = read_entries(reader, g, static_cast<std::size_t>(r0), static_cast<std::size_t>(r1), "d1");
  return AlgebraicComplex(std::move(d2), std::move(d1));
}

void save_complex(const std::string& path, const AlgebraicComplex& c) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  write_complex(out, c);
}

AlgebraicComplex load_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_complex(in);
}

}  // namespace d2
