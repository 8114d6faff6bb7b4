#include "revolve/mesh.hpp"

#include <cmath>
#include <cstring>
#include <numbers>

#include "revolve/numfmt.hpp"

namespace revolve {

namespace {

Point3 ring_vertex(const Decomposition& d, const Point2& normal, double theta) {
  const double cos_part = d.signed_offset * std::cos(theta);
  const double z = d.signed_offset * std::sin(theta);
  return {d.foot.x + cos_part * normal.x, d.foot.y + cos_part * normal.y, z};
}

}  // namespace

Point3 revolve_point(const Point2& p, const Line& line, double theta) {
  return ring_vertex(decompose(p, line), frame_of(line).normal, theta);
}

Mesh revolve_mesh(const ParametricCurve& c, const Line& line,
                  std::size_t rings, std::size_t segments) {
  if (rings < 2) throw Error("revolve_mesh needs at least 2 rings");
  if (segments < 3) throw Error("revolve_mesh needs at least 3 segments");
  const Point2 normal = frame_of(line).normal;
  Mesh m;
  m.rings = rings;
  m.segments = segments;
  m.vertices.reserve(rings * segments);
  for (std::size_t i = 0; i < rings; ++i) {
    const double t = c.t0 + (c.t1 - c.t0) * static_cast<double>(i) /
                                static_cast<double>(rings - 1);
    const Decomposition d = decompose(eval_point(c, t), line);
    for (std::size_t j = 0; j < segments; ++j) {
      const double theta =
          2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(segments);
      m.vertices.push_back(ring_vertex(d, normal, theta));
    }
  }
  m.triangles.reserve((rings - 1) * segments * 2);
  for (std::size_t i = 0; i + 1 < rings; ++i) {
    for (std::size_t j = 0; j < segments; ++j) {
      const std::size_t j1 = (j + 1) % segments;
      const auto a = static_cast<std::uint32_t>(i * segments + j);
      const auto b = static_cast<std::uint32_t>((i + 1) * segments + j);
      const auto c2 = static_cast<std::uint32_t>((i + 1) * segments + j1);
      const auto d2 = static_cast<std::uint32_t>(i * segments + j1);
      m.triangles.push_back({a, b, c2});
      m.triangles.push_back({a, c2, d2});
    }
  }
  return m;
}

double mesh_area(const Mesh& m) {
  double area = 0.0;
  for (const auto& tri : m.triangles) {
    const Point3& a = m.vertices[tri[0]];
    const Point3& b = m.vertices[tri[1]];
    const Point3& c = m.vertices[tri[2]];
    const double ux = b.x - a.x, uy = b.y - a.y, uz = b.z - a.z;
    const double vx = c.x - a.x, vy = c.y - a.y, vz = c.z - a.z;
    const double cx = uy * vz - uz * vy;
    const double cy = uz * vx - ux * vz;
    const double cz = ux * vy - uy * vx;
    area += 0.5 * std::sqrt(cx * cx + cy * cy + cz * cz);
  }
  return area;
}

void export_obj(const Mesh& m, std::ostream& sink) {
  for (const Point3& v : m.vertices) {
    sink << "v " << format_double(v.x) << ' ' << format_double(v.y) << ' '
         << format_double(v.z) << '\n';
  }
  for (const auto& tri : m.triangles) {
    sink << "f " << tri[0] + 1 << ' ' << tri[1] + 1 << ' ' << tri[2] + 1 << '\n';
  }
  if (!sink) throw Error("OBJ export: write failure");
}

namespace {

void put_f32(std::ostream& sink, float v) {
  static_assert(sizeof(float) == 4);
  char bytes[4];
  std::memcpy(bytes, &v, 4);  // host is little-endian
  sink.write(bytes, 4);
}

void put_u32(std::ostream& sink, std::uint32_t v) {
  char bytes[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                   static_cast<char>((v >> 16) & 0xff),
                   static_cast<char>((v >> 24) & 0xff)};
  sink.write(bytes, 4);
}

}  // namespace

void export_stl(const Mesh& m, std::ostream& sink) {
  const char header[80] = {};
  sink.write(header, 80);
  put_u32(sink, static_cast<std::uint32_t>(m.triangles.size()));
  for (const auto& tri : m.triangles) {
    const Point3& a = m.vertices[tri[0]];
    const Point3& b = m.vertices[tri[1]];
    const Point3& c = m.vertices[tri[2]];
    const double ux = b.x - a.x, uy = b.y - a.y, uz = b.z - a.z;
    const double vx = c.x - a.x, vy = c.y - a.y, vz = c.z - a.z;
    double nx = uy * vz - uz * vy;
    double ny = uz * vx - ux * vz;
    double nz = ux * vy - uy * vx;
    const double len = std::sqrt(nx * nx + ny * ny + nz * nz);
    if (len > 0.0) {
      nx /= len;
      ny /= len;
      nz /= len;
    } else {
      nx = ny = nz = 0.0;
    }
    put_f32(sink, static_cast<float>(nx));
    put_f32(sink, static_cast<float>(ny));
    put_f32(sink, static_cast<float>(nz));
    for (const Point3* p : {&a, &b, &c}) {
      put_f32(sink, static_cast<float>(p->x));
      put_f32(sink, static_cast<float>(p->y));
      put_f32(sink, static_cast<float>(p->z));
    }
    const char attr[2] = {};
    sink.write(attr, 2);
  }
  if (!sink) throw Error("STL export: write failure");
}

}  // namespace revolve
