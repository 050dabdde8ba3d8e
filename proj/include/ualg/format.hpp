#pragma once

#include <string>
#include <string_view>

#include "ualg/algebra.hpp"
#include "ualg/congruence.hpp"

namespace ualg {

/// Text format:
///
///   algebra <name>
///   size <n>
///   op <name> <arity>
///   <n^arity integers, row-major, last argument fastest>
///   ...
///   end
///
/// '#' starts a comment running to the end of the line. Errors are
/// ParseError with the line and column of the offending token.
FiniteAlgebra parse_algebra(std::string_view text);
/// Canonical form: n entries per line for operations of positive arity, one
/// line for constants.
std::string print_algebra(const FiniteAlgebra& a);

FiniteAlgebra read_algebra_file(const std::string& path);

/// Hasse diagram of the lattice, bottom to top, nodes labelled by blocks.
std::string export_dot(const CongruenceLattice& lattice);

}  // namespace ualg
