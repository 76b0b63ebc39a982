#pragma once

#include "eqloc/fraction.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eqloc {

/// Parse failure with a 1-based line/column position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

/// Parses sums/products/powers of rationals and variable names, with
/// parentheses and division by constants, e.g. "3/2*X^2 - (X - Y1)*Y2".
Polynomial parse_polynomial(std::string_view text, const Variables& vars, int line = 1);

/// Parses a product of linear factors, e.g. "(X - Y1)^3 * X * 2".
/// Constant factors are returned through `constant`.
std::vector<std::pair<LinearForm, int>> parse_denominator(std::string_view text, const Variables& vars,
                                                          Rational& constant, int line = 1);

/// Contents of a residue expression file:
///
///   # comment
///   variables: X Y1 Y2
///   variable: X            (optional, defaults to the first variable)
///   numerator: X^2
///   denominator: (X - Y1)^3
struct ResidueProblem {
  Variables variables;
  std::size_t residue_variable = 0;
  Fraction expression;
  std::string numerator_text, denominator_text;
};

ResidueProblem parse_residue_problem(std::string_view text);

}  // namespace eqloc
