#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "revolve/errors.hpp"

namespace revolve {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // absolute
  std::int64_t evaluations = 0;
};

/// Adaptive Gauss-Kronrod (G7, K15) integration of f over [a, b].
/// Recursion depth is capped at 60 subdivisions; exceeding it raises
/// MaxSubdivisions, which signals a non-smooth or singular integrand.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double rel_tol = 1e-10,
                           double abs_tol = 1e-12);

/// Scans a uniform grid of grid_size intervals for strict sign changes of g
/// and refines each bracket by bisection to width <= 1e-13 * (1 + |a| + |b|).
/// An exact zero at an interior grid point flanked by opposite signs counts
/// as a crossing; tangential zeros (no sign change) are not reported.
std::vector<double> find_sign_changes(const std::function<double(double)>& g,
                                      double a, double b,
                                      std::size_t grid_size = 1024);

}  // namespace revolve
