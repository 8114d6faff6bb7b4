#include "revolve/geometry.hpp"

#include <cmath>

namespace revolve {

double Line::norm() const { return std::hypot(A, B); }

Line make_line(double A, double B, double C) {
  if (A == 0.0 && B == 0.0) throw DegenerateLine();
  return Line{A, B, C};
}

Line line_from_slope(double m, double k) { return Line{-m, 1.0, k}; }

Frame frame_of(const Line& line) {
  const double n2 = line.A * line.A + line.B * line.B;
  const double n = std::sqrt(n2);
  Frame f;
  f.origin = {line.A * line.C / n2, line.B * line.C / n2};
  f.tangent = {-line.B / n, line.A / n};
  f.normal = {line.A / n, line.B / n};
  return f;
}

Decomposition decompose(const Point2& p, const Line& line) {
  const Frame f = frame_of(line);
  const double n = line.norm();
  Decomposition d;
  d.along = (-line.B * p.x + line.A * p.y) / n;
  d.signed_offset = (line.A * p.x + line.B * p.y - line.C) / n;
  d.foot = {f.origin.x + d.along * f.tangent.x, f.origin.y + d.along * f.tangent.y};
  return d;
}

double distance_to_line(const Point2& p, const Line& line) {
  return std::fabs(line.A * p.x + line.B * p.y - line.C) / line.norm();
}

}  // namespace revolve
