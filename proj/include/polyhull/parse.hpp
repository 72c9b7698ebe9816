#pragma once

#include <stdexcept>
#include <string>

#include "polyhull/bipoly.hpp"

namespace polyhull {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& what, size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

// Grammar:
//   expr     := term (("+" | "-") term)*
//   term     := ("-")? factor ("*"? factor)*
//   factor   := base ("^" uint)?
//   base     := "z1" | "z2" | "w1" | "w2" | "i" | rational | "(" expr ")"
//   rational := uint ("/" uint)?
// Whitespace-insensitive. z1/w1 map to variable 1, z2/w2 to variable 2; the
// z and w alphabets may not be mixed in one expression.
BiPoly parse_polynomial(const std::string& text);

// Alphabet actually used by the expression: 'z', 'w', or 0 for constants.
char polynomial_alphabet(const std::string& text);

}  // namespace polyhull
