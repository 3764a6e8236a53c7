#include "folia/cli/parser.hpp"

#include <cctype>

namespace folia::cli {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : InputError(message + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
      line_(line),
      column_(column) {}

namespace {

struct Position {
  std::size_t line = 1, column = 1;
};

class Parser {
 public:
  Parser(std::string_view text, const Chart& chart, const std::map<std::string, Expression>* definitions)
      : text_(text), chart_(chart), definitions_(definitions) {}

  Expression parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Expression e = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  std::string_view text_;
  const Chart& chart_;
  const std::map<std::string, Expression>* definitions_;
  std::size_t pos_ = 0;
  Position where_;

  bool at_end() const { return pos_ >= text_.size(); }

  void advance() {
    if (text_[pos_] == '\n') {
      ++where_.line;
      where_.column = 1;
    } else {
      ++where_.column;
    }
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  [[noreturn]] void fail(const std::string& message, Position at) const { throw ParseError(message, at.line, at.column); }
  [[noreturn]] void fail(const std::string& message) const { fail(message, where_); }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    for (std::size_t i = 0; i < token.size(); ++i) advance();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  std::size_t n() const { return chart_.size(); }

  Expression expr() {
    Expression left = wedge_level();
    for (;;) {
      const Position at = (skip_space(), where_);
      if (accept("+")) {
        left = add(left, wedge_level(), 1, at);
      } else if (accept("-")) {
        left = add(left, wedge_level(), -1, at);
      } else {
        return left;
      }
    }
  }

  Expression wedge_level() {
    Expression left = term();
    for (;;) {
      const Position at = (skip_space(), where_);
      if (!accept("/\\")) return left;
      left = wedge_of(left, term(), at);
    }
  }

  Expression term() {
    Expression left = unary();
    for (;;) {
      skip_space();
      const Position at = where_;
      // "/\" is the wedge, not a division
      if (text_.substr(pos_, 2) == "/\\") return left;
      if (accept("*")) {
        left = multiply(left, unary(), at);
      } else if (accept("/")) {
        left = divide(left, unary(), at);
      } else {
        return left;
      }
    }
  }

  Expression unary() {
    if (accept("-")) return negate(unary());
    return factor();
  }

  Expression factor() {
    Expression b = base();
    const Position at = (skip_space(), where_);
    if (!accept("^")) return b;
    skip_space();
    const Position digits = where_;
    const std::string exponent = read_while([](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
    if (exponent.empty()) fail("expected a nonnegative integer exponent", digits);
    if (exponent.size() > 4) fail("exponent too large", digits);
    if (!std::holds_alternative<RatFunc>(b)) fail("only functions can be raised to a power", at);
    return std::get<RatFunc>(b).pow(std::stoi(exponent));
  }

  template <typename Pred>
  std::string read_while(Pred pred) {
    std::string out;
    while (!at_end() && pred(text_[pos_])) {
      out += text_[pos_];
      advance();
    }
    return out;
  }

  std::size_t variable_index() {
    skip_space();
    const Position at = where_;
    const std::string name = read_while([](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; });
    if (name.empty()) fail("expected a variable name", at);
    const auto idx = chart_.index_of(name);
    if (!idx) fail("unknown variable '" + name + "'", at);
    return *idx;
  }

  Expression base() {
    skip_space();
    if (at_end()) fail("unexpected end of expression");
    const Position at = where_;
    const char c = text_[pos_];
    if (c == '(') {
      advance();
      Expression e = expr();
      expect(")");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::string digits = read_while([](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; });
      return RatFunc(n(), Rational(Integer(digits)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t next = text_.find_first_not_of(" \t\r\n", pos_ + 1);
      if ((c == 'd' || c == 'D') && next != std::string_view::npos && text_[next] == '(') {
        advance();
        expect("(");
        const std::size_t idx = variable_index();
        expect(")");
        if (c == 'd') return Form::coordinate(chart_, idx);
        return MultiVector::coordinate(chart_, idx);
      }
      const std::string name = read_while([](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) != 0 || ch == '_'; });
      if (const auto idx = chart_.index_of(name)) return RatFunc::variable(n(), *idx);
      if (definitions_ != nullptr) {
        if (const auto it = definitions_->find(name); it != definitions_->end()) return it->second;
      }
      fail("unknown name '" + name + "'", at);
    }
    fail(std::string("unexpected '") + c + "'", at);
  }

  Expression negate(const Expression& e) {
    return std::visit([](const auto& v) -> Expression { return -v; }, e);
  }

  Expression add(const Expression& a, const Expression& b, int sign, Position at) {
    if (a.index() != b.index()) fail("cannot add a " + kind_name(a) + " and a " + kind_name(b), at);
    if (degree(a) != degree(b)) {
      fail("cannot add elements of degree " + std::to_string(degree(a)) + " and " + std::to_string(degree(b)), at);
    }
    return std::visit(
        [&](const auto& x) -> Expression {
          using T = std::decay_t<decltype(x)>;
          const T& y = std::get<T>(b);
          if (sign > 0) return x + y;
          return x - y;
        },
        a);
  }

  Expression multiply(const Expression& a, const Expression& b, Position at) {
    if (const auto* f = std::get_if<RatFunc>(&a)) {
      return std::visit([&](const auto& y) -> Expression { return *f * y; }, b);
    }
    if (const auto* g = std::get_if<RatFunc>(&b)) {
      return std::visit([&](const auto& x) -> Expression { return x * *g; }, a);
    }
    fail("'*' needs a function factor; use /\\ for the wedge product", at);
  }

  Expression divide(const Expression& a, const Expression& b, Position at) {
    const auto* g = std::get_if<RatFunc>(&b);
    if (g == nullptr) fail("can only divide by a function", at);
    if (g->is_zero()) fail("division by zero", at);
    const RatFunc inv = g->inverse();
    return std::visit([&](const auto& x) -> Expression { return x * inv; }, a);
  }

  Expression wedge_of(const Expression& a, const Expression& b, Position at) {
    if (std::holds_alternative<RatFunc>(a) || std::holds_alternative<RatFunc>(b)) return multiply(a, b, at);
    if (a.index() != b.index()) fail("cannot wedge a form with a multivector", at);
    if (const auto* x = std::get_if<Form>(&a)) return wedge(*x, std::get<Form>(b));
    return wedge(std::get<MultiVector>(a), std::get<MultiVector>(b));
  }
};

}  // namespace

Expression parse_expression(std::string_view text, const Chart& chart,
                            const std::map<std::string, Expression>* definitions) {
  return Parser(text, chart, definitions).parse();
}

std::string render(const Expression& e, const Chart& chart) {
  if (const auto* f = std::get_if<RatFunc>(&e)) return f->to_string(chart.names());
  if (const auto* w = std::get_if<Form>(&e)) return w->to_string();
  return std::get<MultiVector>(e).to_string();
}

std::string kind_name(const Expression& e) {
  switch (e.index()) {
    case 0: return "function";
    case 1: return "form";
    default: return "multivector";
  }
}

int degree(const Expression& e) {
  if (const auto* w = std::get_if<Form>(&e)) return w->degree();
  if (const auto* p = std::get_if<MultiVector>(&e)) return p->degree();
  return 0;
}

}  // namespace folia::cli
