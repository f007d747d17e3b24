#pragma once

#include <string>
#include <string_view>

#include "deltalab/stream.hpp"

namespace deltalab {

// Surface syntax for stream expressions (whitespace-insensitive):
//
//   expr := NAME | "point(" NAT ")" | "evp(" BITS? "," BITS ")"
//         | "inv(" expr ")" | "tail" ("^" NAT)? "(" expr ")"
//         | "cons(" BITS "," expr ")" | "xor(" expr "," expr ")"
//         | "zip(" NAT "," NAT "," expr "," expr ")"
//         | "diff" ("_" NAT)? ("^" NAT)? "(" expr ")"
//
// NAME is one of the built-in streams; diff defaults to d=1, n=1.
// Throws parse_error with line/column and the expected tokens.
ExprPtr parse_expr(std::string_view text);

// Canonical text for an expression; parse_expr(print_expr(e)) is
// structurally equal to e for every parseable expression.
std::string print_expr(const ExprPtr& e);

}  // namespace deltalab
