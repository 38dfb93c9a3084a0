#pragma once

#include <iosfwd>
#include <string>

#include "d2/int_matrix.hpp"

namespace d2 {

// Plain-text exchange format: a first line "rows cols", then the entries in
// row-major order separated by whitespace.
void write_matrix(std::ostream& out, const IntMatrix& m);
IntMatrix read_matrix(std::istream& in);

void save_matrix(const std::string& path, const IntMatrix& m);
IntMatrix load_matrix(const std::string& path);

}  // namespace d2
