#include "revolve/expr.hpp"

#include <charconv>
#include <cmath>
#include <cstring>

#include "revolve/numfmt.hpp"

namespace revolve {

namespace {

bool is_ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::vector<Token> tokenize(std::string_view source) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = source.size();
  while (i < n) {
    const char c = source[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (is_digit(c) || (c == '.' && i + 1 < n && is_digit(source[i + 1]))) {
      std::size_t start = i;
      while (i < n && is_digit(source[i])) ++i;
      if (i < n && source[i] == '.') {
        ++i;
        while (i < n && is_digit(source[i])) ++i;
      }
      if (i < n && (source[i] == 'e' || source[i] == 'E')) {
        std::size_t mark = i;
        ++i;
        if (i < n && (source[i] == '+' || source[i] == '-')) ++i;
        if (i < n && is_digit(source[i])) {
          while (i < n && is_digit(source[i])) ++i;
        } else {
          i = mark;  // 'e' belongs to a following identifier, not the number
        }
      }
      out.push_back({TokenKind::Number, std::string(source.substr(start, i - start)), start});
      continue;
    }
    if (is_ident_start(c)) {
      std::size_t start = i;
      while (i < n && (is_ident_start(source[i]) || is_digit(source[i]))) ++i;
      out.push_back({TokenKind::Identifier, std::string(source.substr(start, i - start)), start});
      continue;
    }
    if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^') {
      out.push_back({TokenKind::Operator, std::string(1, c), i});
      ++i;
      continue;
    }
    if (c == '(' || c == ')') {
      out.push_back({TokenKind::Paren, std::string(1, c), i});
      ++i;
      continue;
    }
    if (c == ',') {
      out.push_back({TokenKind::Comma, ",", i});
      ++i;
      continue;
    }
    throw LexError(i, c);
  }
  return out;
}

ExprPtr Expr::constant(double value) {
  auto e = std::shared_ptr<Expr>(new Expr());
  e->kind_ = Kind::Constant;
  e->value_ = value;
  return e;
}

ExprPtr Expr::variable() {
  auto e = std::shared_ptr<Expr>(new Expr());
  e->kind_ = Kind::Variable;
  return e;
}

ExprPtr Expr::unary(UnaryOp op, ExprPtr child) {
  auto e = std::shared_ptr<Expr>(new Expr());
  e->kind_ = Kind::Unary;
  e->unary_op_ = op;
  e->left_ = std::move(child);
  return e;
}

ExprPtr Expr::binary(BinaryOp op, ExprPtr left, ExprPtr right) {
  auto e = std::shared_ptr<Expr>(new Expr());
  e->kind_ = Kind::Binary;
  e->binary_op_ = op;
  e->left_ = std::move(left);
  e->right_ = std::move(right);
  return e;
}

bool Expr::contains_variable() const {
  switch (kind_) {
    case Kind::Constant:
      return false;
    case Kind::Variable:
      return true;
    case Kind::Unary:
      return left_->contains_variable();
    case Kind::Binary:
      return left_->contains_variable() || right_->contains_variable();
  }
  return false;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

  ExprPtr run() {
    ExprPtr e = parse_expr();
    if (pos_ < tokens_.size()) {
      throw ParseError(tokens_[pos_].position, "end of input");
    }
    return e;
  }

 private:
  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;

  const Token* peek() const { return pos_ < tokens_.size() ? &tokens_[pos_] : nullptr; }

  std::size_t here() const {
    return pos_ < tokens_.size() ? tokens_[pos_].position
           : tokens_.empty()     ? 0
                                 : tokens_.back().position + tokens_.back().lexeme.size();
  }

  bool accept_op(const char* lexeme) {
    const Token* t = peek();
    if (t && t->kind == TokenKind::Operator && t->lexeme == lexeme) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_paren(char which) {
    const Token* t = peek();
    if (!t || t->kind != TokenKind::Paren || t->lexeme[0] != which) {
      throw ParseError(here(), std::string("'") + which + "'");
    }
    ++pos_;
  }

  ExprPtr parse_expr() {
    ExprPtr left = parse_term();
    for (;;) {
      if (accept_op("+")) {
        left = Expr::binary(BinaryOp::Add, left, parse_term());
      } else if (accept_op("-")) {
        left = Expr::binary(BinaryOp::Sub, left, parse_term());
      } else {
        return left;
      }
    }
  }

  ExprPtr parse_term() {
    ExprPtr left = parse_factor();
    for (;;) {
      if (accept_op("*")) {
        left = Expr::binary(BinaryOp::Mul, left, parse_factor());
      } else if (accept_op("/")) {
        left = Expr::binary(BinaryOp::Div, left, parse_factor());
      } else {
        return left;
      }
    }
  }

  ExprPtr parse_factor() {
    ExprPtr base = parse_unary();
    std::size_t caret = here();
    if (accept_op("^")) {
      ExprPtr exponent = parse_factor();  // right-associative
      if (exponent->contains_variable()) {
        throw ParseError(caret, "constant exponent");
      }
      return Expr::binary(BinaryOp::Pow, base, exponent);
    }
    return base;
  }

  ExprPtr parse_unary() {
    if (accept_op("-")) {
      return Expr::unary(UnaryOp::Neg, parse_unary());
    }
    return parse_atom();
  }

  ExprPtr parse_atom() {
    const Token* t = peek();
    if (!t) throw ParseError(here(), "number, 't', function, or '('");
    if (t->kind == TokenKind::Number) {
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(t->lexeme.data(), t->lexeme.data() + t->lexeme.size(), v);
      if (ec != std::errc{} || ptr != t->lexeme.data() + t->lexeme.size() || !std::isfinite(v)) {
        throw ParseError(t->position, "finite number");
      }
      ++pos_;
      return Expr::constant(v);
    }
    if (t->kind == TokenKind::Identifier) {
      if (t->lexeme == "t") {
        ++pos_;
        return Expr::variable();
      }
      UnaryOp op;
      if (t->lexeme == "sin") op = UnaryOp::Sin;
      else if (t->lexeme == "cos") op = UnaryOp::Cos;
      else if (t->lexeme == "tan") op = UnaryOp::Tan;
      else if (t->lexeme == "exp") op = UnaryOp::Exp;
      else if (t->lexeme == "ln") op = UnaryOp::Ln;
      else if (t->lexeme == "sqrt") op = UnaryOp::Sqrt;
      else if (t->lexeme == "abs") op = UnaryOp::Abs;
      else if (t->lexeme == "atan") op = UnaryOp::Atan;
      else throw ParseError(t->position, "'t' or a builtin function name");
      ++pos_;
      expect_paren('(');
      ExprPtr arg = parse_expr();
      expect_paren(')');
      return Expr::unary(op, arg);
    }
    if (t->kind == TokenKind::Paren && t->lexeme == "(") {
      ++pos_;
      ExprPtr inner = parse_expr();
      expect_paren(')');
      return inner;
    }
    throw ParseError(t->position, "number, 't', function, or '('");
  }
};

}  // namespace

ExprPtr parse(const std::vector<Token>& tokens) { return Parser(tokens).run(); }

ExprPtr parse(std::string_view source) { return parse(tokenize(source)); }

double eval(const Expr& e, double t) {
  switch (e.kind()) {
    case Expr::Kind::Constant:
      return e.value();
    case Expr::Kind::Variable:
      return t;
    case Expr::Kind::Unary: {
      const double u = eval(*e.child(), t);
      double r;
      switch (e.unary_op()) {
        case UnaryOp::Neg: r = -u; break;
        case UnaryOp::Sin: r = std::sin(u); break;
        case UnaryOp::Cos: r = std::cos(u); break;
        case UnaryOp::Tan: r = std::tan(u); break;
        case UnaryOp::Exp: r = std::exp(u); break;
        case UnaryOp::Ln:
          if (u <= 0.0) throw EvalError("ln of non-positive value", t);
          r = std::log(u);
          break;
        case UnaryOp::Sqrt:
          if (u < 0.0) throw EvalError("sqrt of negative value", t);
          r = std::sqrt(u);
          break;
        case UnaryOp::Abs: r = std::fabs(u); break;
        case UnaryOp::Atan: r = std::atan(u); break;
        default: throw EvalError("unsupported unary operation", t);
      }
      if (!std::isfinite(r)) throw EvalError("non-finite result", t);
      return r;
    }
    case Expr::Kind::Binary: {
      const double a = eval(*e.left(), t);
      const double b = eval(*e.right(), t);
      double r;
      switch (e.binary_op()) {
        case BinaryOp::Add: r = a + b; break;
        case BinaryOp::Sub: r = a - b; break;
        case BinaryOp::Mul: r = a * b; break;
        case BinaryOp::Div:
          if (b == 0.0) throw EvalError("division by zero", t);
          r = a / b;
          break;
        case BinaryOp::Pow: r = std::pow(a, b); break;
        default: throw EvalError("unsupported binary operation", t);
      }
      if (!std::isfinite(r)) throw EvalError("non-finite result", t);
      return r;
    }
  }
  throw EvalError("corrupt expression node", t);
}

namespace {

ExprPtr add(ExprPtr a, ExprPtr b) { return Expr::binary(BinaryOp::Add, std::move(a), std::move(b)); }
ExprPtr sub(ExprPtr a, ExprPtr b) { return Expr::binary(BinaryOp::Sub, std::move(a), std::move(b)); }
ExprPtr mul(ExprPtr a, ExprPtr b) { return Expr::binary(BinaryOp::Mul, std::move(a), std::move(b)); }
ExprPtr divide(ExprPtr a, ExprPtr b) { return Expr::binary(BinaryOp::Div, std::move(a), std::move(b)); }

}  // namespace

ExprPtr differentiate(const ExprPtr& e) {
  switch (e->kind()) {
    case Expr::Kind::Constant:
      return Expr::constant(0.0);
    case Expr::Kind::Variable:
      return Expr::constant(1.0);
    case Expr::Kind::Unary: {
      const ExprPtr& u = e->child();
      ExprPtr du = differentiate(u);
      switch (e->unary_op()) {
        case UnaryOp::Neg:
          return Expr::unary(UnaryOp::Neg, du);
        case UnaryOp::Sin:
          return mul(Expr::unary(UnaryOp::Cos, u), du);
        case UnaryOp::Cos:
          return Expr::unary(UnaryOp::Neg, mul(Expr::unary(UnaryOp::Sin, u), du));
        case UnaryOp::Tan: {
          ExprPtr sec2 = divide(Expr::constant(1.0),
                                Expr::binary(BinaryOp::Pow, Expr::unary(UnaryOp::Cos, u),
                                             Expr::constant(2.0)));
          return mul(sec2, du);
        }
        case UnaryOp::Exp:
          return mul(Expr::unary(UnaryOp::Exp, u), du);
        case UnaryOp::Ln:
          return divide(du, u);
        case UnaryOp::Sqrt:
          return divide(du, mul(Expr::constant(2.0), Expr::unary(UnaryOp::Sqrt, u)));
        case UnaryOp::Abs:
          // sign(u) * u', written as (u / abs(u)) * u'; EvalError exactly at u = 0
          return mul(divide(u, Expr::unary(UnaryOp::Abs, u)), du);
        case UnaryOp::Atan:
          return divide(du, add(Expr::constant(1.0),
                                Expr::binary(BinaryOp::Pow, u, Expr::constant(2.0))));
      }
      throw DiffError("unsupported unary operation");
    }
    case Expr::Kind::Binary: {
      const ExprPtr& a = e->left();
      const ExprPtr& b = e->right();
      switch (e->binary_op()) {
        case BinaryOp::Add:
          return add(differentiate(a), differentiate(b));
        case BinaryOp::Sub:
          return sub(differentiate(a), differentiate(b));
        case BinaryOp::Mul:
          return add(mul(differentiate(a), b), mul(a, differentiate(b)));
        case BinaryOp::Div:
          return divide(sub(mul(differentiate(a), b), mul(a, differentiate(b))),
                        Expr::binary(BinaryOp::Pow, b, Expr::constant(2.0)));
        case BinaryOp::Pow: {
          // Exponent is constant by parser guarantee; power rule k * u^(k-1) * u'.
          if (b->contains_variable()) {
            throw DiffError("pow with non-constant exponent");
          }
          const double k = eval(*b, 0.0);
          if (k == 0.0) return Expr::constant(0.0);
          return mul(mul(Expr::constant(k),
                         Expr::binary(BinaryOp::Pow, a, Expr::constant(k - 1.0))),
                     differentiate(a));
        }
      }
      throw DiffError("unsupported binary operation");
    }
  }
  throw DiffError("corrupt expression node");
}

namespace {

bool is_const(const ExprPtr& e, double v) {
  return e->kind() == Expr::Kind::Constant && e->value() == v;
}

}  // namespace

ExprPtr simplify(const ExprPtr& e) {
  switch (e->kind()) {
    case Expr::Kind::Constant:
    case Expr::Kind::Variable:
      return e;
    case Expr::Kind::Unary: {
      ExprPtr c = simplify(e->child());
      if (e->unary_op() == UnaryOp::Neg) {
        if (c->kind() == Expr::Kind::Constant) return Expr::constant(-c->value());
        if (c->kind() == Expr::Kind::Unary && c->unary_op() == UnaryOp::Neg) return c->child();
      }
      if (c->kind() == Expr::Kind::Constant) {
        try {
          return Expr::constant(eval(*Expr::unary(e->unary_op(), c), 0.0));
        } catch (const EvalError&) {
          // leave domain errors to evaluation time
        }
      }
      return c == e->child() ? e : Expr::unary(e->unary_op(), c);
    }
    case Expr::Kind::Binary: {
      ExprPtr a = simplify(e->left());
      ExprPtr b = simplify(e->right());
      const BinaryOp op = e->binary_op();
      switch (op) {
        case BinaryOp::Add:
          if (is_const(a, 0.0)) return b;
          if (is_const(b, 0.0)) return a;
          break;
        case BinaryOp::Sub:
          if (is_const(b, 0.0)) return a;
          break;
        case BinaryOp::Mul:
          if (is_const(a, 0.0) || is_const(b, 0.0)) return Expr::constant(0.0);
          if (is_const(a, 1.0)) return b;
          if (is_const(b, 1.0)) return a;
          break;
        case BinaryOp::Div:
          if (is_const(b, 1.0)) return a;
          break;
        case BinaryOp::Pow:
          if (is_const(b, 1.0)) return a;
          break;
      }
      if (a->kind() == Expr::Kind::Constant && b->kind() == Expr::Kind::Constant) {
        try {
          return Expr::constant(eval(*Expr::binary(op, a, b), 0.0));
        } catch (const EvalError&) {
        }
      }
      return (a == e->left() && b == e->right()) ? e : Expr::binary(op, a, b);
    }
  }
  return e;
}

std::string to_string(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Constant:
      return format_double(e.value());
    case Expr::Kind::Variable:
      return "t";
    case Expr::Kind::Unary: {
      const std::string inner = to_string(*e.child());
      switch (e.unary_op()) {
        case UnaryOp::Neg: return "(-" + inner + ")";
        case UnaryOp::Sin: return "sin(" + inner + ")";
        case UnaryOp::Cos: return "cos(" + inner + ")";
        case UnaryOp::Tan: return "tan(" + inner + ")";
        case UnaryOp::Exp: return "exp(" + inner + ")";
        case UnaryOp::Ln: return "ln(" + inner + ")";
        case UnaryOp::Sqrt: return "sqrt(" + inner + ")";
        case UnaryOp::Abs: return "abs(" + inner + ")";
        case UnaryOp::Atan: return "atan(" + inner + ")";
      }
      return inner;
    }
    case Expr::Kind::Binary: {
      const char* op = "+";
      switch (e.binary_op()) {
        case BinaryOp::Add: op = "+"; break;
        case BinaryOp::Sub: op = "-"; break;
        case BinaryOp::Mul: op = "*"; break;
        case BinaryOp::Div: op = "/"; break;
        case BinaryOp::Pow: op = "^"; break;
      }
      return "(" + to_string(*e.left()) + op + to_string(*e.right()) + ")";
    }
  }
  return "?";
}

}  // namespace revolve
