#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "revolve/area.hpp"
#include "revolve/mesh.hpp"
#include "revolve/numfmt.hpp"
#include "specs.hpp"

namespace revolve::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSpecError = 2;
constexpr int kExitNumericalError = 3;
constexpr int kExitIoError = 4;
constexpr int kExitCheckFailed = 5;

struct Options {
  std::vector<std::string> parametric;
  std::string graph;
  std::string inverse_graph;
  double from = 0.0;
  double to = 1.0;
  std::string line_text;
  double tol = kDefaultRelTol;
  bool json = false;
  std::size_t samples = 100;
  std::size_t rings = 256;
  std::size_t segments = 256;
  std::string format = "obj";
  std::string out_path;
};

void add_curve_and_line_options(CLI::App* cmd, Options& o) {
  auto* par = cmd->add_option("--parametric", o.parametric,
                              "x(t) and y(t) expressions")
                  ->expected(2);
  auto* gr = cmd->add_option("--graph", o.graph, "f(x) expression");
  auto* inv = cmd->add_option("--inverse-graph", o.inverse_graph,
                              "g(y) expression");
  par->excludes(gr)->excludes(inv);
  gr->excludes(inv);
  cmd->add_option("--from", o.from, "interval start")->required();
  cmd->add_option("--to", o.to, "interval end")->required();
  cmd->add_option("--line", o.line_text, "axis line, e.g. \"3x+4y=25\" or \"y=2x+1\"")
      ->required();
  cmd->add_option("--tol", o.tol, "relative quadrature tolerance");
}

CurveSpec curve_spec_of(const Options& o) {
  CurveSpec spec;
  spec.t0 = o.from;
  spec.t1 = o.to;
  if (!o.parametric.empty()) {
    spec.mode = CurveMode::Parametric;
    spec.first = o.parametric[0];
    spec.second = o.parametric[1];
  } else if (!o.graph.empty()) {
    spec.mode = CurveMode::Graph;
    spec.first = o.graph;
  } else if (!o.inverse_graph.empty()) {
    spec.mode = CurveMode::InverseGraph;
    spec.first = o.inverse_graph;
  } else {
    throw Error("one of --parametric, --graph, --inverse-graph is required");
  }
  return spec;
}

int cmd_area(const Options& o, std::ostream& out) {
  const ParametricCurve curve = build_curve(curve_spec_of(o));
  const Line line = parse_line_spec(o.line_text);
  const AreaResult result = surface_area(curve, line, o.tol);
  if (o.json) {
    nlohmann::json j;
    j["area"] = result.area;
    j["errorEstimate"] = result.error_estimate;
    j["crossings"] = result.crossings;
    j["segments"] = result.segments;
    out << j.dump() << '\n';
  } else {
    out << "area: " << format_double(result.area) << '\n';
    out << "errorEstimate: " << format_double(result.error_estimate) << '\n';
    out << "crossings: [";
    for (std::size_t i = 0; i < result.crossings.size(); ++i) {
      if (i) out << ", ";
      out << format_double(result.crossings[i]);
    }
    out << "]\n";
    out << "segments: " << result.segments << '\n';
  }
  return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  const ParametricCurve curve = build_curve(curve_spec_of(o));
  const Line line = parse_line_spec(o.line_text);
  if (o.samples < 2) throw Error("--samples must be at least 2");
  out << "t,x,y,r,arc_speed,integrand\n";
  for (std::size_t i = 0; i < o.samples; ++i) {
    const double t = curve.t0 + (curve.t1 - curve.t0) * static_cast<double>(i) /
                                    static_cast<double>(o.samples - 1);
    const Point2 p = eval_point(curve, t);
    const double r = distance_to_line(p, line);
    const double speed = arc_speed(curve, t);
    const double integrand = 2.0 * std::numbers::pi * r * speed;
    out << format_double(t) << ',' << format_double(p.x) << ','
        << format_double(p.y) << ',' << format_double(r) << ','
        << format_double(speed) << ',' << format_double(integrand) << '\n';
  }
  return kExitOk;
}

int cmd_mesh(const Options& o, std::ostream& out, std::ostream& err) {
  const ParametricCurve curve = build_curve(curve_spec_of(o));
  const Line line = parse_line_spec(o.line_text);
  if (o.format != "obj" && o.format != "stl") {
    throw Error("--format must be obj or stl");
  }
  const Mesh mesh = revolve_mesh(curve, line, o.rings, o.segments);
  std::ofstream file(o.out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "cannot open output file: " << o.out_path << '\n';
    return kExitIoError;
  }
  try {
    if (o.format == "obj") {
      export_obj(mesh, file);
    } else {
      export_stl(mesh, file);
    }
    file.close();
    if (!file) throw Error("write failure");
  } catch (const Error&) {
    err << "failed writing " << o.out_path << '\n';
    return kExitIoError;
  }
  out << format_double(mesh_area(mesh)) << '\n';
  return kExitOk;
}

double mesh_convergence_allowance(std::size_t rings, std::size_t segments) {
  const double hr = 1.0 / static_cast<double>(rings - 1);
  const double hs = std::numbers::pi / static_cast<double>(segments);
  // second-order discretization headroom, capped so a hopelessly coarse
  // mesh still fails honestly
  return std::min(0.1, 10.0 * (hr * hr + hs * hs));
}

int cmd_check(const Options& o, std::ostream& out) {
  const ParametricCurve curve = build_curve(curve_spec_of(o));
  const Line line = parse_line_spec(o.line_text);
  const AreaResult quad = surface_area(curve, line, o.tol);
  const Mesh mesh = revolve_mesh(curve, line, o.rings, o.segments);
  const double brute = mesh_area(mesh);
  const double scale = std::max({std::fabs(quad.area), std::fabs(brute), 1e-12});
  const double rel_diff = std::fabs(quad.area - brute) / scale;
  const double threshold =
      std::max(0.002, mesh_convergence_allowance(o.rings, o.segments));
  const bool pass = rel_diff <= threshold;
  if (o.json) {
    nlohmann::json j;
    j["quadratureArea"] = quad.area;
    j["meshArea"] = brute;
    j["relativeDifference"] = rel_diff;
    j["threshold"] = threshold;
    j["pass"] = pass;
    out << j.dump() << '\n';
  } else {
    out << "quadratureArea: " << format_double(quad.area) << '\n';
    out << "meshArea: " << format_double(brute) << '\n';
    out << "relativeDifference: " << format_double(rel_diff) << '\n';
    out << "threshold: " << format_double(threshold) << '\n';
    out << "status: " << (pass ? "pass" : "fail") << '\n';
  }
  return pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Surface area of a curve revolved about a line A*x + B*y = C"};
  app.require_subcommand(1);
  Options o;

  CLI::App* area_cmd = app.add_subcommand("area", "compute the revolution area");
  add_curve_and_line_options(area_cmd, o);
  area_cmd->add_flag("--json", o.json, "machine-readable output");

  CLI::App* table_cmd =
      app.add_subcommand("table", "emit a CSV table of the integrand");
  add_curve_and_line_options(table_cmd, o);
  table_cmd->add_option("--samples", o.samples, "number of rows");

  CLI::App* mesh_cmd =
      app.add_subcommand("mesh", "export the revolved surface as a mesh");
  add_curve_and_line_options(mesh_cmd, o);
  mesh_cmd->add_option("--rings", o.rings, "samples along t");
  mesh_cmd->add_option("--segments", o.segments, "samples around the axis");
  mesh_cmd->add_option("--format", o.format, "obj or stl");
  mesh_cmd->add_option("--out", o.out_path, "output file path")->required();

  CLI::App* check_cmd = app.add_subcommand(
      "check", "compare quadrature area against the mesh oracle");
  add_curve_and_line_options(check_cmd, o);
  check_cmd->add_option("--rings", o.rings, "samples along t");
  check_cmd->add_option("--segments", o.segments, "samples around the axis");
  check_cmd->add_flag("--json", o.json, "machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitSpecError;
  }

  try {
    if (area_cmd->parsed()) return cmd_area(o, out);
    if (table_cmd->parsed()) return cmd_table(o, out);
    if (mesh_cmd->parsed()) return cmd_mesh(o, out, err);
    return cmd_check(o, out);
  } catch (const MaxSubdivisions& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumericalError;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitSpecError;
  }
}

}  // namespace revolve::cli
