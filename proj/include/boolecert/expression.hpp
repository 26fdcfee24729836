#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace boolecert {

// Integrand expressions in one variable t. Grammar (whitespace allowed
// between tokens):
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := base ('^' integer)?
//   base   := number | 't' | '(' expr ')' | func '(' expr ')' | '-' base
//   func   := sin | cos | exp | log
// Note '^' binds to a base, so "-t^2" is (-t)^2.
enum class ExprKind { number, variable, add, sub, mul, div, pow, neg, call };
enum class ExprFunc { sin, cos, exp, log };

struct Expression;
using ExpressionPtr = std::shared_ptr<const Expression>;

struct Expression {
  ExprKind kind;
  double number = 0.0;               // kind == number
  int exponent = 0;                  // kind == pow
  ExprFunc func = ExprFunc::sin;     // kind == call
  ExpressionPtr lhs;                 // operand / left operand
  ExpressionPtr rhs;                 // right operand of binary nodes
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset);
  // Byte offset into the source text where parsing failed.
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

ExpressionPtr parse_expression(std::string_view source);

// Canonical text: parse_expression(render(e)) rebuilds e node for node
// for every tree parse_expression produces. (Hand-built trees holding
// negative number literals render as a negation instead.)
std::string render(const ExpressionPtr& expression);

// Throws std::domain_error naming the offending subexpression and t when
// any subterm is non-finite (log of a nonpositive value, division by
// zero, overflow).
double evaluate(const ExpressionPtr& expression, double t);

bool structurally_equal(const ExpressionPtr& lhs, const ExpressionPtr& rhs);

}  // namespace boolecert
