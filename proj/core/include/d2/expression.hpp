#pragma once

#include <string_view>

#include "d2/group_ring.hpp"

namespace d2 {

/// Parses a group-ring expression such as "1+a-ba", "2-b" or "3(a^2 - b)".
///
/// Grammar: sums and differences of products; factors are integers, the
/// generators a and b, the identity e, or parenthesized expressions, each
/// optionally raised to an integer power (negative powers only for group
/// elements). Products are written with '*', the middle dot, or juxtaposition.
/// Throws ParseError on malformed input.
RingElement parse_ring_expression(std::string_view text, const DihedralGroup& group);

}  // namespace d2
