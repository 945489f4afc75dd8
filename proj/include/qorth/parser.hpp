// Expression grammar shared by the CLI and the canonical printers.
//
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/')? factor)*        (juxtaposition multiplies)
//   factor := atom ['^' ['-'] integer]
//   atom   := integer | 'i' | 'r' | 'w' | generator | '(' expr ')'
//
// Whitespace-insensitive. 'i', 'r', 'w' are reserved scalar atoms; every
// other identifier must be a generator of the supplied alphabet. Division
// requires a scalar divisor; negative powers require a scalar base.

#pragma once

#include <stdexcept>
#include <string>

#include "qorth/freealg.hpp"
#include "qorth/scalar.hpp"

namespace qorth {

struct ParseError : std::runtime_error {
    ParseError(const std::string& message, size_t position)
        : std::runtime_error(message + " at offset " + std::to_string(position)),
          pos(position) {}
    size_t pos;
};

// Parse against an alphabet; plain scalars come back as multiples of the
// empty word.
NcPoly parse_poly(const std::string& text, const Alphabet& alphabet);

// Parse a pure coefficient expression (no generators allowed).
Scalar parse_scalar(const std::string& text);

}  // namespace qorth
