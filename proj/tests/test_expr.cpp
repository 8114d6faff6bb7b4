#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "revolve/expr.hpp"
#include "test_util.hpp"

using namespace revolve;
using testutil::central_diff;
using testutil::random_expr;

TEST_CASE("tokenize segments the grammar characters") {
  auto tokens = tokenize("t^2-3*t+12");
  std::vector<std::string> lexemes;
  for (const auto& t : tokens) lexemes.push_back(t.lexeme);
  CHECK(lexemes == std::vector<std::string>{"t", "^", "2", "-", "3", "*", "t", "+", "12"});

  auto fn = tokenize("sin(t)");
  REQUIRE(fn.size() == 4);
  CHECK(fn[0].lexeme == "sin");
  CHECK(fn[0].kind == TokenKind::Identifier);
  CHECK(fn[1].lexeme == "(");
  CHECK(fn[3].lexeme == ")");
}

TEST_CASE("tokenize positions are strictly increasing") {
  auto tokens = tokenize("  sqrt( t ) + 1.5e2 ");
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    CHECK(tokens[i].position > tokens[i - 1].position);
  }
}

TEST_CASE("tokenize rejects characters outside the grammar") {
  try {
    tokenize("t $ 2");
    FAIL("expected LexError");
  } catch (const LexError& e) {
    CHECK(e.position == 2);
    CHECK(e.character == '$');
  }
}

TEST_CASE("parse respects precedence and associativity") {
  ExprPtr e = parse("t^2-3*t+12");
  // add(sub(pow(t,2), mul(3,t)), 12)
  REQUIRE(e->kind() == Expr::Kind::Binary);
  CHECK(e->binary_op() == BinaryOp::Add);
  CHECK(e->right()->value() == 12.0);
  const auto& sub = e->left();
  CHECK(sub->binary_op() == BinaryOp::Sub);
  CHECK(sub->left()->binary_op() == BinaryOp::Pow);
  CHECK(sub->right()->binary_op() == BinaryOp::Mul);

  CHECK(eval(parse("2^3^2"), 0.0) == 512.0);  // right-associative, not 64
}

TEST_CASE("parse reports malformed input") {
  CHECK_THROWS_AS(parse("(t"), ParseError);
  CHECK_THROWS_AS(parse("t t"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("sin t"), ParseError);
  CHECK_THROWS_AS(parse("3t"), ParseError);  // no implicit multiplication
}

TEST_CASE("parse rejects pow with non-constant exponent") {
  CHECK_THROWS_AS(parse("t^t"), ParseError);
  CHECK_THROWS_AS(parse("2^sin(t)"), ParseError);
  CHECK_NOTHROW(parse("t^(2+1)"));  // constant expression exponent is fine
}

TEST_CASE("eval basics") {
  CHECK(eval(parse("t^2-3*t+12"), 0.0) == 12.0);
  CHECK(eval(parse("sin(t)"), 0.0) == 0.0);
  CHECK_THROWS_AS(eval(parse("1/t"), 0.0), EvalError);
  CHECK_THROWS_AS(eval(parse("ln(t)"), -1.0), EvalError);
  CHECK_THROWS_AS(eval(parse("sqrt(t)"), -1.0), EvalError);
  CHECK_THROWS_AS(eval(parse("exp(t)"), 1e6), EvalError);  // overflow reported
}

TEST_CASE("differentiate uses the standard rules") {
  ExprPtr d_poly = differentiate(parse("t^2-3*t+12"));
  for (double t : {-2.0, 0.0, 0.5, 3.0}) {
    CHECK(eval(d_poly, t) == doctest::Approx(2.0 * t - 3.0).epsilon(1e-14));
  }

  ExprPtr d_sin = simplify(differentiate(parse("sin(t)")));
  REQUIRE(d_sin->kind() == Expr::Kind::Unary);
  CHECK(d_sin->unary_op() == UnaryOp::Cos);

  // d/dt (t * exp(t)) at 1 is 2e
  ExprPtr e = parse("t*exp(t)");
  const double expected = 5.43656365691809;
  const double fd = central_diff(e, 1.0);
  CHECK(std::fabs(fd - expected) <= 1e-8 * expected);
  CHECK(eval(differentiate(e), 1.0) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("abs derivative is piecewise sign at evaluation time") {
  ExprPtr d = differentiate(parse("abs(t)"));
  CHECK(eval(d, 2.0) == 1.0);
  CHECK(eval(d, -3.0) == -1.0);
  CHECK_THROWS_AS(eval(d, 0.0), EvalError);
}

TEST_CASE("derivative matches central differences on random expressions") {
  std::mt19937 rng(20240811);
  std::uniform_real_distribution<double> ts(-2.0, 2.0);
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    ExprPtr e = random_expr(rng, 5);
    ExprPtr d = differentiate(e);
    for (int j = 0; j < 100; ++j) {
      const double t = ts(rng);
      double fd, sym;
      try {
        if (!testutil::central_diff_reliable(e, t)) continue;
        fd = central_diff(e, t);
        sym = eval(d, t);
      } catch (const EvalError&) {
        continue;  // overflow in a nested exp; skip the sample
      }
      REQUIRE(std::fabs(sym - fd) <= 1e-6 * (1.0 + std::fabs(fd)));
      ++checked;
    }
  }
  CHECK(checked > 5000);
}

TEST_CASE("simplify applies identity rewrites and constant folding") {
  ExprPtr e = simplify(parse("0*sin(t)+t"));
  CHECK(e->kind() == Expr::Kind::Variable);
  ExprPtr c = simplify(parse("2+3"));
  REQUIRE(c->kind() == Expr::Kind::Constant);
  CHECK(c->value() == 5.0);
}

TEST_CASE("simplify never changes the value") {
  std::mt19937 rng(987654321);
  std::uniform_real_distribution<double> ts(-3.0, 3.0);
  for (int i = 0; i < 1000; ++i) {
    ExprPtr e = random_expr(rng, 4);
    ExprPtr s = simplify(e);
    const double t = ts(rng);
    double before;
    try {
      before = eval(e, t);
    } catch (const EvalError&) {
      continue;
    }
    const double after = eval(s, t);
    REQUIRE(testutil::rel_close(after, before, 1e-12));
  }
}

TEST_CASE("evaluation is deterministic across repeated calls") {
  ExprPtr e = parse("sin(t)*exp(cos(t))-t^3/7");
  const double v = eval(e, 0.8125);
  for (int i = 0; i < 10; ++i) CHECK(eval(e, 0.8125) == v);
}
