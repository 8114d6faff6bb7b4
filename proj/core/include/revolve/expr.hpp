#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "revolve/errors.hpp"

namespace revolve {

enum class TokenKind { Number, Identifier, Operator, Paren, Comma };

struct Token {
  TokenKind kind;
  std::string lexeme;
  std::size_t position;  // 0-based character offset
};

/// Splits source into tokens. Whitespace is insignificant; anything outside
/// the grammar raises LexError.
std::vector<Token> tokenize(std::string_view source);

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class UnaryOp { Neg, Sin, Cos, Tan, Exp, Ln, Sqrt, Abs, Atan };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };

/// Immutable AST node for a real-valued function of the single variable t.
class Expr {
 public:
  enum class Kind { Constant, Variable, Unary, Binary };

  static ExprPtr constant(double value);
  static ExprPtr variable();
  static ExprPtr unary(UnaryOp op, ExprPtr child);
  static ExprPtr binary(BinaryOp op, ExprPtr left, ExprPtr right);

  Kind kind() const { return kind_; }
  double value() const { return value_; }
  UnaryOp unary_op() const { return unary_op_; }
  BinaryOp binary_op() const { return binary_op_; }
  const ExprPtr& child() const { return left_; }
  const ExprPtr& left() const { return left_; }
  const ExprPtr& right() const { return right_; }

  bool contains_variable() const;

 private:
  Expr() = default;
  Kind kind_ = Kind::Constant;
  double value_ = 0.0;
  UnaryOp unary_op_ = UnaryOp::Neg;
  BinaryOp binary_op_ = BinaryOp::Add;
  ExprPtr left_;
  ExprPtr right_;
};

/// Grammar:
///   expr   := term (("+"|"-") term)*
///   term   := factor (("*"|"/") factor)*
///   factor := unary ("^" factor)?
///   unary  := "-" unary | atom
///   atom   := NUMBER | "t" | FUNC "(" expr ")" | "(" expr ")"
///   FUNC   := sin|cos|tan|exp|ln|sqrt|abs|atan
/// "^" with a non-constant exponent is rejected here.
ExprPtr parse(const std::vector<Token>& tokens);
ExprPtr parse(std::string_view source);

double eval(const Expr& e, double t);
inline double eval(const ExprPtr& e, double t) { return eval(*e, t); }

/// Exact symbolic derivative with respect to t. The derivative of abs(u)
/// is represented as (u / abs(u)) * u', which evaluates to sign(u) * u'
/// away from zero and raises EvalError exactly at u = 0.
ExprPtr differentiate(const ExprPtr& e);

/// Safe rewrites only: constant folding, 0*x, 1*x, x+0, x-0, x/1, --x.
ExprPtr simplify(const ExprPtr& e);

std::string to_string(const Expr& e);
inline std::string to_string(const ExprPtr& e) { return to_string(*e); }

}  // namespace revolve
