#include "revolve/area.hpp"

#include <cmath>
#include <numbers>

namespace revolve {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kAbsTol = 1e-12;

AreaResult integrate_segments(const std::function<double(double)>& integrand,
                              double t0, double t1,
                              std::vector<double> crossings, double rel_tol) {
  AreaResult result;
  result.crossings = std::move(crossings);
  result.segments = result.crossings.size() + 1;
  double lo = t0;
  for (std::size_t i = 0; i <= result.crossings.size(); ++i) {
    const double hi = i < result.crossings.size() ? result.crossings[i] : t1;
    QuadratureResult q = integrate(integrand, lo, hi, rel_tol, kAbsTol);
    result.area += q.value;
    result.error_estimate += q.error_estimate;
    result.evaluations += q.evaluations;
    lo = hi;
  }
  if (result.area < 0.0) result.area = 0.0;  // clip quadrature noise
  return result;
}

}  // namespace

double area_integrand(const ParametricCurve& c, const Line& line, double t) {
  return kTwoPi * distance_to_line(eval_point(c, t), line) * arc_speed(c, t);
}

AreaResult surface_area(const ParametricCurve& c, const Line& line,
                        double rel_tol, std::size_t crossing_grid) {
  auto signed_radius = [&](double t) {
    const Point2 p = eval_point(c, t);
    return line.A * p.x + line.B * p.y - line.C;
  };
  std::vector<double> crossings =
      find_sign_changes(signed_radius, c.t0, c.t1, crossing_grid);
  auto integrand = [&](double t) { return area_integrand(c, line, t); };
  return integrate_segments(integrand, c.t0, c.t1, std::move(crossings), rel_tol);
}

AreaResult surface_area_x_axis(const ParametricCurve& c, double rel_tol) {
  return surface_area(c, make_line(0.0, 1.0, 0.0), rel_tol);
}

AreaResult surface_area_y_axis(const ParametricCurve& c, double rel_tol) {
  return surface_area(c, make_line(1.0, 0.0, 0.0), rel_tol);
}

AreaResult surface_area_graph_slant(std::string_view f_source, double a,
                                    double b, double m, double k,
                                    double rel_tol) {
  if (!(a < b)) throw BadInterval(a, b);
  const ExprPtr f = parse(f_source);
  const ExprPtr df = differentiate(f);
  const double inv_norm = 1.0 / std::hypot(m, 1.0);
  auto offset = [&](double x) { return eval(f, x) - m * x - k; };
  std::vector<double> crossings = find_sign_changes(offset, a, b);
  auto integrand = [&](double x) {
    return kTwoPi * std::fabs(offset(x)) * inv_norm * std::hypot(1.0, eval(df, x));
  };
  return integrate_segments(integrand, a, b, std::move(crossings), rel_tol);
}

}  // namespace revolve
