#pragma once

#include <string_view>

#include "revolve/expr.hpp"
#include "revolve/geometry.hpp"

namespace revolve {

/// A plane curve (x(t), y(t)) on [t0, t1] with cached symbolic derivatives.
struct ParametricCurve {
  ExprPtr x;
  ExprPtr y;
  ExprPtr dx;
  ExprPtr dy;
  double t0 = 0.0;
  double t1 = 1.0;
};

ParametricCurve make_curve(std::string_view x_source, std::string_view y_source,
                           double t0, double t1);

/// The graph y = f(x) as (t, f(t)) on [a, b]. The source must already use
/// the variable t (the CLI maps "x" to "t" textually).
ParametricCurve from_graph(std::string_view f_source, double a, double b);

/// The graph x = g(y) as (g(t), t) on [c, d].
ParametricCurve from_inverse_graph(std::string_view g_source, double c, double d);

Point2 eval_point(const ParametricCurve& c, double t);

/// sqrt(x'(t)^2 + y'(t)^2), overflow-safe.
double arc_speed(const ParametricCurve& c, double t);

}  // namespace revolve
