#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "folia/error.hpp"
#include "folia/exterior/graded.hpp"

namespace folia::cli {

// Value of a parsed expression: a function, a form or a polyvector.
using Expression = std::variant<RatFunc, Form, MultiVector>;

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

// Grammar:
//   expr   := wedge (('+' | '-') wedge)*
//   wedge  := term ('/\' term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | factor
//   factor := base ('^' integer)?
//   base   := integer | name | 'd(' variable ')' | 'D(' variable ')' | '(' expr ')'
// A name is a chart variable or a key of `definitions`.
// Throws ParseError for syntax errors, unknown names, sums of
// different degrees and products that are not defined.
Expression parse_expression(std::string_view text, const Chart& chart,
                            const std::map<std::string, Expression>* definitions = nullptr);

std::string render(const Expression& e, const Chart& chart);

// "function", "form" or "multivector".
std::string kind_name(const Expression& e);
int degree(const Expression& e);

}  // namespace folia::cli
