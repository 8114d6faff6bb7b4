#include "revolve/curve.hpp"

#include <cmath>

namespace revolve {

namespace {

ParametricCurve build(ExprPtr x, ExprPtr y, double t0, double t1) {
  if (!(t0 < t1)) throw BadInterval(t0, t1);
  ParametricCurve c;
  c.dx = differentiate(x);
  c.dy = differentiate(y);
  c.x = std::move(x);
  c.y = std::move(y);
  c.t0 = t0;
  c.t1 = t1;
  return c;
}

}  // namespace

ParametricCurve make_curve(std::string_view x_source, std::string_view y_source,
                           double t0, double t1) {
  return build(parse(x_source), parse(y_source), t0, t1);
}

ParametricCurve from_graph(std::string_view f_source, double a, double b) {
  return build(Expr::variable(), parse(f_source), a, b);
}

ParametricCurve from_inverse_graph(std::string_view g_source, double c, double d) {
  return build(parse(g_source), Expr::variable(), c, d);
}

namespace {

void check_domain(const ParametricCurve& c, double t) {
  // Tiny slack for parameters produced by floating-point subdivision.
  const double eps = 1e-12 * (1.0 + std::fabs(c.t0) + std::fabs(c.t1));
  if (t < c.t0 - eps || t > c.t1 + eps) throw OutOfDomain(t, c.t0, c.t1);
}

}  // namespace

Point2 eval_point(const ParametricCurve& c, double t) {
  check_domain(c, t);
  return {eval(c.x, t), eval(c.y, t)};
}

double arc_speed(const ParametricCurve& c, double t) {
  check_domain(c, t);
  return std::hypot(eval(c.dx, t), eval(c.dy, t));
}

}  // namespace revolve
