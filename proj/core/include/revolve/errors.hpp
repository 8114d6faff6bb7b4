#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace revolve {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LexError : Error {
  std::size_t position;
  char character;
  LexError(std::size_t pos, char c)
      : Error("unexpected character '" + std::string(1, c) + "' at offset " +
              std::to_string(pos)),
        position(pos),
        character(c) {}
};

struct ParseError : Error {
  std::size_t position;
  std::string expected;
  ParseError(std::size_t pos, std::string what_expected)
      : Error("parse error at offset " + std::to_string(pos) + ": expected " +
              what_expected),
        position(pos),
        expected(std::move(what_expected)) {}
};

struct EvalError : Error {
  std::string reason;
  double t;
  EvalError(std::string why, double at)
      : Error(why + " at t = " + std::to_string(at)),
        reason(std::move(why)),
        t(at) {}
};

struct DiffError : Error {
  using Error::Error;
};

struct BadInterval : Error {
  double t0, t1;
  BadInterval(double lo, double hi)
      : Error("bad interval [" + std::to_string(lo) + ", " +
              std::to_string(hi) + "]: lower bound must be strictly smaller"),
        t0(lo),
        t1(hi) {}
};

struct OutOfDomain : Error {
  double t;
  OutOfDomain(double at, double lo, double hi)
      : Error("parameter " + std::to_string(at) + " outside domain [" +
              std::to_string(lo) + ", " + std::to_string(hi) + "]"),
        t(at) {}
};

struct DegenerateLine : Error {
  DegenerateLine() : Error("degenerate line: A and B are both zero") {}
};

struct MaxSubdivisions : Error {
  double a, b;
  MaxSubdivisions(double lo, double hi)
      : Error("adaptive quadrature exceeded its depth budget on [" +
              std::to_string(lo) + ", " + std::to_string(hi) + "]"),
        a(lo),
        b(hi) {}
};

}  // namespace revolve
