#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "revolve/curve.hpp"
#include "revolve/geometry.hpp"
#include "revolve/quadrature.hpp"

namespace revolve {

struct AreaResult {
  double area = 0.0;
  double error_estimate = 0.0;
  /// Parameters in (t0, t1) where A*x(t) + B*y(t) = C, strictly increasing.
  std::vector<double> crossings;
  std::size_t segments = 1;
  std::int64_t evaluations = 0;
};

inline constexpr double kDefaultRelTol = 1e-10;
inline constexpr std::size_t kDefaultCrossingGrid = 1024;

/// 2*pi * distance(curve(t), line) * arc_speed(t), the cylindrical-shell
/// area differential per unit parameter.
double area_integrand(const ParametricCurve& c, const Line& line, double t);

/// Area of the surface swept by revolving the curve about the line. The
/// integral is split at axis crossings so every piece is smooth; curves
/// crossing the axis contribute with multiplicity.
AreaResult surface_area(const ParametricCurve& c, const Line& line,
                        double rel_tol = kDefaultRelTol,
                        std::size_t crossing_grid = kDefaultCrossingGrid);

AreaResult surface_area_x_axis(const ParametricCurve& c,
                               double rel_tol = kDefaultRelTol);

AreaResult surface_area_y_axis(const ParametricCurve& c,
                               double rel_tol = kDefaultRelTol);

/// Area of the graph y = f(x) on [a, b] revolved about y = m*x + k,
/// integrating 2*pi*|f(x) - m*x - k|*sqrt((1 + f'(x)^2) / (1 + m^2))
/// directly. Agrees with surface_area over line_from_slope(m, k).
AreaResult surface_area_graph_slant(std::string_view f_source, double a,
                                    double b, double m, double k,
                                    double rel_tol = kDefaultRelTol);

}  // namespace revolve
