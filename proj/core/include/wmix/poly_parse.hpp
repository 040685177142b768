#ifndef WMIX_POLY_PARSE_HPP
#define WMIX_POLY_PARSE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "wmix/bivariate_polynomial.hpp"
#include "wmix/int_polynomial.hpp"

namespace wmix {

/// Variable names accepted by the parser.  `second` may be empty to
/// restrict the grammar to univariate input.
struct PolyVars {
  std::string primary = "x";
  std::string second = "N";
};

/// Exact parser for the text syntax: integer coefficients, the two
/// variables, operators + - * ^ and parentheses.  Throws ParseError.
BivariatePolynomial parse_polynomial(std::string_view text, const PolyVars& vars = {});

/// Univariate convenience: rejects input mentioning the second variable.
IntPolynomial parse_int_polynomial(std::string_view text, const PolyVars& vars = {});

/// Splits a comma-separated family, respecting parentheses, and parses
/// each element.
std::vector<BivariatePolynomial> parse_family(std::string_view text, const PolyVars& vars = {});
std::vector<IntPolynomial> parse_int_family(std::string_view text, const PolyVars& vars = {});

}  // namespace wmix

#endif
