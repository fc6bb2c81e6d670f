#pragma once

// Plain-text polytope files:
//
//   # comment
//   d n
//   x_1 ... x_d      (n vertex lines)
//
// Blank lines and text after '#' are ignored.

#include <istream>
#include <string>
#include <string_view>

#include "reflex/polytope.hpp"

namespace reflex {

/// Throws Error(Parse) with "line L, column C" in the message.
Polytope parse_polytope(std::string_view text);
/// Reads a file; "-" reads standard input.
Polytope read_polytope_file(const std::string& path);
/// Vertices in canonical order.
std::string format_polytope(const Polytope& p);

/// "1,0,-2" -> (1,0,-2). Throws Error(Parse).
IntVector parse_vector(std::string_view text);

}  // namespace reflex
