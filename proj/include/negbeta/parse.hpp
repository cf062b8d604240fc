#pragma once

// Text syntax for bases and numbers.
//
//   base    := "phi" | "golden" | "tribonacci"
//            | "root(" poly-in-x "," rational "," rational ")"
//            | rational          e.g. 7/4, 2.8
//   element := arithmetic expression in b (or beta) over the rationals,
//              e.g. -1/2, b - 1, (1 - 3b)/4, b^2 + b + 1

#include "negbeta/field.hpp"
#include "negbeta/poly.hpp"

#include <stdexcept>
#include <string_view>

namespace negbeta {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "3", "-7/4", "2.8", "1/2 + 1/3" (no variable).
Rational parse_rational(std::string_view text);
/// Polynomial in `var` with rational coefficients.
Poly parse_poly(std::string_view text, char var = 'x');
/// Builds the field; FieldError for an unusable base.
FieldContext parse_base(std::string_view text);
/// Exact element of Q(beta); ParseError for syntax errors, FieldError for
/// division by zero.
Element parse_element(std::string_view text, const FieldContext& ctx);

}  // namespace negbeta
