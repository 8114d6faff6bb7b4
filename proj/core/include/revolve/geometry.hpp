#pragma once

#include "revolve/errors.hpp"

namespace revolve {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// The axis of revolution, coefficients of A*x + B*y = C.
struct Line {
  double A = 0.0;
  double B = 1.0;
  double C = 0.0;

  /// sqrt(A^2 + B^2), always positive for a valid line.
  double norm() const;
};

Line make_line(double A, double B, double C);

/// The line y = m*x + k, i.e. (A, B, C) = (-m, 1, k).
Line line_from_slope(double m, double k);

/// Origin on the line plus orthonormal direction pair: tangent along the
/// line, normal perpendicular to it.
struct Frame {
  Point2 origin;
  Point2 tangent;
  Point2 normal;
};

Frame frame_of(const Line& line);

/// Coordinates of a point in the line's frame: along the tangent, signed
/// offset along the normal, and the foot of the perpendicular on the line.
struct Decomposition {
  double along = 0.0;
  double signed_offset = 0.0;
  Point2 foot;
};

Decomposition decompose(const Point2& p, const Line& line);

double distance_to_line(const Point2& p, const Line& line);

}  // namespace revolve
