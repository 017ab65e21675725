#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "symtorsion/novikov.hpp"

// Text literals for Novikov elements:
//
//   literal := ["+"|"-"] term {("+"|"-") term} ["@cutoff=" rational] | "0" ["@cutoff=" rational]
//   term    := rational ["*" element] | element
//   element := "g(" int {"," int} ")"
//
// A bare rational is a multiple of the identity. Repeated elements are
// summed. Whitespace is allowed between tokens.
namespace symt {

// Canonical form: terms ordered by (weight, coordinates), the identity term
// printed as a bare coefficient, e.g. "1 - 1*g(1)" or "2 + 1/3*g(1,-2) @cutoff=20".
std::string format_literal(const NovikovElement& x);

// Throws ParseError; `line` and `column` locate the first character of
// `text` in the enclosing document.
NovikovElement parse_literal(std::string_view text, const LatticePtr& lattice, std::size_t line = 1,
                             std::size_t column = 1);

}  // namespace symt
