#pragma once

// Text grammar for polynomials (whitespace insignificant):
//
//   expression := ['+'|'-'] term (('+'|'-') term)*
//   term       := factor (('*'|'/') factor | factor)*     -- '/' by a nonzero constant
//   factor     := atom ('^' nonneg-integer)*
//   atom       := integer | 'i' | variable | '(' expression ')'
//
// Juxtaposition acts as multiplication, so coefficient forms like "2i",
// "3/4i" and "z^2/2" read naturally. Variables are x1..xn, y1..yn or u, v, z
// depending on the frame.

#include <stdexcept>
#include <string>
#include <string_view>

#include "apolab/poly.hpp"

namespace apolab {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

Poly parse_poly(std::string_view text, const VariableFrame& frame);

}  // namespace apolab
