#pragma once

#include <string>

#include "sharelab/function_model.hpp"

namespace sharelab {

// Parses an expression over decimal/rational literals, "i", "z", the
// operators + - * / ^ (integer exponents), "exp", and parentheses.
// Precedence: ^ over unary minus over * / over + -, left-associative at
// equal precedence, ^ right-associative.
//
// Throws ParseError (with byte offset and the expected token classes) on
// malformed input and NonEntire when a non-constant denominator or a
// non-integer exponent appears.
ExprFunction parse_expr(const std::string& source);

}  // namespace sharelab
