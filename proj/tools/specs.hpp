#pragma once

#include <string>
#include <string_view>

#include "revolve/curve.hpp"
#include "revolve/geometry.hpp"

namespace revolve::cli {

/// Parses the CLI line mini-format: general linear forms ("3x+4y=0",
/// "x=0", "2y=7") and slope form ("y=2x+1"). Everything becomes (A, B, C).
Line parse_line_spec(std::string_view text);

/// Rewrites every standalone occurrence of the given variable letter to
/// "t", leaving function names like "exp" untouched.
std::string map_symbol_to_t(std::string_view source, char symbol);

enum class CurveMode { Parametric, Graph, InverseGraph };

struct CurveSpec {
  CurveMode mode = CurveMode::Parametric;
  std::string first;   // x(t), f(x), or g(y) source
  std::string second;  // y(t) source (parametric only)
  double t0 = 0.0;
  double t1 = 1.0;
};

ParametricCurve build_curve(const CurveSpec& spec);

}  // namespace revolve::cli
