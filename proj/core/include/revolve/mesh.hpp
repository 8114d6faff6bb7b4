#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <vector>

#include "revolve/curve.hpp"
#include "revolve/geometry.hpp"

namespace revolve {

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Indexed triangle mesh from revolving a curve. Vertices are stored
/// ring-major: vertex(ring i, segment j) = i * segments + j. The revolution
/// is closed; seam vertices are shared, not duplicated.
struct Mesh {
  std::vector<Point3> vertices;
  std::vector<std::array<std::uint32_t, 3>> triangles;
  std::size_t rings = 0;     // samples along t
  std::size_t segments = 0;  // samples around the revolution
};

/// Rotates p about the line by theta, with the curve plane embedded at
/// z = 0: the signed offset turns through the (normal, e_z) plane while
/// the foot stays fixed. theta = 0 reproduces (p.x, p.y, 0).
Point3 revolve_point(const Point2& p, const Line& line, double theta);

Mesh revolve_mesh(const ParametricCurve& c, const Line& line,
                  std::size_t rings, std::size_t segments);

/// Sum of triangle areas; the brute-force oracle for the revolution area.
double mesh_area(const Mesh& m);

/// Wavefront OBJ: "v x y z" per vertex (shortest round-trip decimals),
/// "f i j k" per triangle, 1-based indices. Deterministic byte output.
void export_obj(const Mesh& m, std::ostream& sink);

/// Binary STL: 80-byte zero header, little-endian uint32 triangle count,
/// then per triangle 12 little-endian floats (normal, 3 vertices) and
/// 2 zero attribute bytes.
void export_stl(const Mesh& m, std::ostream& sink);

}  // namespace revolve
