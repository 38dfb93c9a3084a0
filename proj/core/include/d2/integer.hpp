#pragma once

#include <gmpxx.h>

#include <string>

namespace d2 {

/// Arbitrary-precision integer used for every exact computation.
using Integer = mpz_class;

inline std::string to_string(const Integer& x) { return x.get_str(); }

}  // namespace d2
