#include "boolecert/expression.hpp"

#include "boolecert/rational.hpp"

#include <charconv>
#include <cmath>

namespace boolecert {

namespace {

ExpressionPtr make_node(Expression node) {
  return std::make_shared<const Expression>(std::move(node));
}

ExpressionPtr make_binary(ExprKind kind, ExpressionPtr lhs, ExpressionPtr rhs) {
  return make_node({kind, 0.0, 0, ExprFunc::sin, std::move(lhs), std::move(rhs)});
}

constexpr std::string_view function_name(ExprFunc func) {
  switch (func) {
    case ExprFunc::sin:
      return "sin";
    case ExprFunc::cos:
      return "cos";
    case ExprFunc::exp:
      return "exp";
    default:
      return "log";
  }
}

class Parser {
 public:
  explicit Parser(std::string_view source) : source_(source) {}

  ExpressionPtr parse() {
    ExpressionPtr expression = parse_expr();
    skip_spaces();
    if (pos_ != source_.size()) fail("unexpected trailing input");
    return expression;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_spaces() {
    while (pos_ < source_.size() && (source_[pos_] == ' ' || source_[pos_] == '\t' ||
                                     source_[pos_] == '\n' || source_[pos_] == '\r'))
      ++pos_;
  }

  char peek() {
    skip_spaces();
    return pos_ < source_.size() ? source_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  ExpressionPtr parse_expr() {
    ExpressionPtr lhs = parse_term();
    while (true) {
      if (consume('+'))
        lhs = make_binary(ExprKind::add, std::move(lhs), parse_term());
      else if (consume('-'))
        lhs = make_binary(ExprKind::sub, std::move(lhs), parse_term());
      else
        return lhs;
    }
  }

  ExpressionPtr parse_term() {
    ExpressionPtr lhs = parse_factor();
    while (true) {
      if (consume('*'))
        lhs = make_binary(ExprKind::mul, std::move(lhs), parse_factor());
      else if (consume('/'))
        lhs = make_binary(ExprKind::div, std::move(lhs), parse_factor());
      else
        return lhs;
    }
  }

  ExpressionPtr parse_factor() {
    ExpressionPtr base = parse_base();
    if (!consume('^')) return base;
    return make_node({ExprKind::pow, 0.0, parse_exponent(), ExprFunc::sin, std::move(base), {}});
  }

  int parse_exponent() {
    skip_spaces();
    const std::size_t start = pos_;
    if (pos_ < source_.size() && source_[pos_] == '-') ++pos_;
    while (pos_ < source_.size() && source_[pos_] >= '0' && source_[pos_] <= '9') ++pos_;
    int value = 0;
    const auto result = std::from_chars(source_.data() + start, source_.data() + pos_, value);
    if (result.ec != std::errc() || result.ptr != source_.data() + pos_ || pos_ == start) {
      pos_ = start;
      fail("exponent must be an integer");
    }
    if (pos_ < source_.size() && source_[pos_] == '.') {
      pos_ = start;
      fail("exponent must be an integer");
    }
    return value;
  }

  ExpressionPtr parse_base() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return make_node({ExprKind::neg, 0.0, 0, ExprFunc::sin, parse_base(), {}});
    }
    if (c == '(') {
      ++pos_;
      ExpressionPtr inner = parse_expr();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    if ((c >= '0' && c <= '9') || c == '.') return parse_number();
    if (c >= 'a' && c <= 'z') return parse_identifier();
    fail(pos_ == source_.size() ? "unexpected end of input" : "unexpected character");
  }

  ExpressionPtr parse_number() {
    double value = 0.0;
    const auto result = std::from_chars(source_.data() + pos_, source_.data() + source_.size(), value);
    if (result.ec != std::errc()) fail("malformed number");
    pos_ = static_cast<std::size_t>(result.ptr - source_.data());
    return make_node({ExprKind::number, value, 0, ExprFunc::sin, {}, {}});
  }

  ExpressionPtr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < source_.size() && source_[pos_] >= 'a' && source_[pos_] <= 'z') ++pos_;
    const std::string_view name = source_.substr(start, pos_ - start);
    if (name == "t") return make_node({ExprKind::variable, 0.0, 0, ExprFunc::sin, {}, {}});
    ExprFunc func;
    if (name == "sin")
      func = ExprFunc::sin;
    else if (name == "cos")
      func = ExprFunc::cos;
    else if (name == "exp")
      func = ExprFunc::exp;
    else if (name == "log")
      func = ExprFunc::log;
    else {
      pos_ = start;
      fail("unknown function \"" + std::string(name) + "\"");
    }
    if (!consume('(')) fail("expected '(' after function name");
    ExpressionPtr argument = parse_expr();
    if (!consume(')')) fail("expected ')'");
    return make_node({ExprKind::call, 0.0, 0, func, std::move(argument), {}});
  }

  std::string_view source_;
  std::size_t pos_ = 0;
};

// Precedence levels used for minimal parenthesisation: additive 1,
// multiplicative 2, everything that parses as a factor or base 3.
int precedence(const ExpressionPtr& e) {
  switch (e->kind) {
    case ExprKind::add:
    case ExprKind::sub:
      return 1;
    case ExprKind::mul:
    case ExprKind::div:
      return 2;
    default:
      return 3;
  }
}

void render_into(const ExpressionPtr& e, std::string& out);

// Wraps the operand in parentheses when printing it bare would bind
// differently on re-parse.
void render_operand(const ExpressionPtr& e, int min_precedence, std::string& out) {
  if (precedence(e) < min_precedence) {
    out += '(';
    render_into(e, out);
    out += ')';
  } else {
    render_into(e, out);
  }
}

// Operands of '^' and '-' must re-parse as a single base: a variable, a
// number, a call, or another negation.
bool is_base(const ExpressionPtr& e) {
  return e->kind == ExprKind::number || e->kind == ExprKind::variable ||
         e->kind == ExprKind::call || e->kind == ExprKind::neg;
}

void render_base(const ExpressionPtr& e, std::string& out) {
  if (is_base(e)) {
    render_into(e, out);
  } else {
    out += '(';
    render_into(e, out);
    out += ')';
  }
}

void render_into(const ExpressionPtr& e, std::string& out) {
  switch (e->kind) {
    case ExprKind::number:
      out += format_double(e->number);
      return;
    case ExprKind::variable:
      out += 't';
      return;
    case ExprKind::add:
    case ExprKind::sub:
      render_operand(e->lhs, 1, out);
      out += e->kind == ExprKind::add ? " + " : " - ";
      // The right operand of '-' must not re-parse as a continuation of
      // the additive chain; both operands of the same level need wrapping
      // on the right to preserve left associativity.
      render_operand(e->rhs, 2, out);
      return;
    case ExprKind::mul:
    case ExprKind::div:
      render_operand(e->lhs, 2, out);
      out += e->kind == ExprKind::mul ? " * " : " / ";
      render_operand(e->rhs, 3, out);
      return;
    case ExprKind::pow:
      render_base(e->lhs, out);
      out += '^';
      out += std::to_string(e->exponent);
      return;
    case ExprKind::neg:
      out += '-';
      render_base(e->lhs, out);
      return;
    case ExprKind::call:
      out += function_name(e->func);
      out += '(';
      render_into(e->lhs, out);
      out += ')';
      return;
  }
}

[[noreturn]] void evaluation_failure(const ExpressionPtr& e, double t) {
  throw std::domain_error("expression \"" + render(e) + "\" is not finite at t = " +
                          format_double(t));
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": " + message),
      offset_(offset) {}

ExpressionPtr parse_expression(std::string_view source) { return Parser(source).parse(); }

std::string render(const ExpressionPtr& expression) {
  std::string out;
  render_into(expression, out);
  return out;
}

double evaluate(const ExpressionPtr& expression, double t) {
  double value = 0.0;
  switch (expression->kind) {
    case ExprKind::number:
      value = expression->number;
      break;
    case ExprKind::variable:
      value = t;
      break;
    case ExprKind::add:
      value = evaluate(expression->lhs, t) + evaluate(expression->rhs, t);
      break;
    case ExprKind::sub:
      value = evaluate(expression->lhs, t) - evaluate(expression->rhs, t);
      break;
    case ExprKind::mul:
      value = evaluate(expression->lhs, t) * evaluate(expression->rhs, t);
      break;
    case ExprKind::div:
      value = evaluate(expression->lhs, t) / evaluate(expression->rhs, t);
      break;
    case ExprKind::pow:
      value = std::pow(evaluate(expression->lhs, t), expression->exponent);
      break;
    case ExprKind::neg:
      value = -evaluate(expression->lhs, t);
      break;
    case ExprKind::call:
      switch (expression->func) {
        case ExprFunc::sin:
          value = std::sin(evaluate(expression->lhs, t));
          break;
        case ExprFunc::cos:
          value = std::cos(evaluate(expression->lhs, t));
          break;
        case ExprFunc::exp:
          value = std::exp(evaluate(expression->lhs, t));
          break;
        default:
          value = std::log(evaluate(expression->lhs, t));
          break;
      }
      break;
  }
  if (!std::isfinite(value)) evaluation_failure(expression, t);
  return value;
}

bool structurally_equal(const ExpressionPtr& lhs, const ExpressionPtr& rhs) {
  if (lhs == rhs) return true;
  if (!lhs || !rhs || lhs->kind != rhs->kind) return false;
  switch (lhs->kind) {
    case ExprKind::number:
      return lhs->number == rhs->number;
    case ExprKind::variable:
      return true;
    case ExprKind::pow:
      return lhs->exponent == rhs->exponent && structurally_equal(lhs->lhs, rhs->lhs);
    case ExprKind::neg:
      return structurally_equal(lhs->lhs, rhs->lhs);
    case ExprKind::call:
      return lhs->func == rhs->func && structurally_equal(lhs->lhs, rhs->lhs);
    default:
      return structurally_equal(lhs->lhs, rhs->lhs) && structurally_equal(lhs->rhs, rhs->rhs);
  }
}

}  // namespace boolecert
