#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "linkforge/errors.hpp"
#include "linkforge/experiment.hpp"
#include "linkforge/grid.hpp"
#include "linkforge/hamiltonian.hpp"
#include "linkforge/oracle.hpp"
#include "linkforge/reduction.hpp"
#include "linkforge/svg.hpp"
#include "linkforge/synthesis.hpp"

namespace py = pybind11;
using namespace linkforge;

PYBIND11_MODULE(_linkforge, m) {
  m.doc() = "Grid graph to R^4 minimum-link rectilinear covering tour toolkit";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_OverflowError);

  py::enum_<Axis>(m, "Axis")
      .value("A", Axis::A)
      .value("B", Axis::B)
      .value("C", Axis::C)
      .value("D", Axis::D)
      .def_property_readonly("name_char", [](Axis a) { return std::string(1, axis_name(a)); });

  py::class_<GridPoint>(m, "GridPoint")
      .def_readonly("x", &GridPoint::x)
      .def_readonly("y", &GridPoint::y)
      .def_readonly("label", &GridPoint::label)
      .def("__repr__", [](const GridPoint& p) {
        return "GridPoint(x=" + std::to_string(p.x) + ", y=" + std::to_string(p.y) +
               ", label=" + std::to_string(p.label) + ")";
      });

  py::class_<GridEdge>(m, "GridEdge")
      .def_readonly("i", &GridEdge::i)
      .def_readonly("j", &GridEdge::j)
      .def_readonly("label", &GridEdge::label);

  py::class_<GridGraph>(m, "GridGraph")
      .def_property_readonly("n", &GridGraph::n)
      .def_property_readonly("m", &GridGraph::m)
      .def_property_readonly("points",
                             [](const GridGraph& g) { return std::vector<GridPoint>(g.points().begin(), g.points().end()); })
      .def_property_readonly("edges",
                             [](const GridGraph& g) { return std::vector<GridEdge>(g.edges().begin(), g.edges().end()); })
      .def("neighbors", [](const GridGraph& g, Label v) {
        const auto nbrs = g.neighbors(v);
        return std::vector<Label>(nbrs.begin(), nbrs.end());
      })
      .def("__eq__", [](const GridGraph& a, const GridGraph& b) { return a == b; });

  m.def("build_grid", [](const std::vector<std::pair<GridCoord, GridCoord>>& raw) { return build_grid(raw); },
        py::arg("points"));
  m.def("parse_grid", [](const std::string& text) { return parse_grid(text); }, py::arg("text"));
  m.def("serialize_grid", &serialize_grid);
  m.def("is_connected", &is_connected);
  m.def(
      "enumerate_connected_grids",
      [](std::size_t max_n, int width, int height) {
        std::vector<GridGraph> out;
        for (auto& item : enumerate_connected_grids(max_n, {width, height})) out.push_back(std::move(item.graph));
        return out;
      },
      py::arg("max_n"), py::arg("width"), py::arg("height"));

  m.def(
      "find_hamiltonian_cycle",
      [](const GridGraph& g) -> std::optional<std::vector<Label>> {
        if (auto c = find_hamiltonian_cycle(g)) return c->order;
        return std::nullopt;
      },
      py::arg("grid"));
  m.def(
      "find_hamiltonian_path",
      [](const GridGraph& g, Label start, Label end) -> std::optional<std::vector<Label>> {
        if (auto p = find_hamiltonian_path(g, start, end)) return p->order;
        return std::nullopt;
      },
      py::arg("grid"), py::arg("start"), py::arg("end"));

  py::class_<Point4>(m, "Point4")
      .def(py::init([](std::array<Coord, 4> coords, Label label) { return Point4{coords, label}; }),
           py::arg("coords"), py::arg("source_label"))
      .def_readonly("coords", &Point4::coords)
      .def_readonly("source_label", &Point4::source_label)
      .def("__repr__", [](const Point4& p) {
        return "Point4((" + std::to_string(p.coords[0]) + ", " + std::to_string(p.coords[1]) + ", " +
               std::to_string(p.coords[2]) + ", " + std::to_string(p.coords[3]) + "), " +
               std::to_string(p.source_label) + ")";
      });

  py::class_<ReductionMap>(m, "ReductionMap")
      .def_readonly("grid", &ReductionMap::grid)
      .def_readonly("points", &ReductionMap::points);

  py::class_<PositionReport>(m, "PositionReport")
      .def_readonly("ok", &PositionReport::ok)
      .def_property_readonly("violations", [](const PositionReport& r) {
        std::vector<std::string> out;
        for (const auto& v : r.violations) out.push_back(std::string(violation_kind_name(v.kind)) + ": " + v.detail);
        return out;
      });

  m.def("construct_points", &construct_points, py::arg("grid"));
  m.def("validate_position", &validate_position, py::arg("reduction"));
  m.def("shared_axis", &shared_axis, py::arg("p"), py::arg("q"));
  m.def("format_points", &format_points);

  py::class_<RectPolyline>(m, "RectPolyline")
      .def(py::init([](std::vector<Vec4> vertices, bool closed) { return RectPolyline{std::move(vertices), closed}; }),
           py::arg("vertices"), py::arg("closed"))
      .def_readonly("vertices", &RectPolyline::vertices)
      .def_readonly("closed", &RectPolyline::closed);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("rectilinear", &VerificationReport::rectilinear)
      .def_readonly("simple", &VerificationReport::simple)
      .def_readonly("covers_all", &VerificationReport::covers_all)
      .def_readonly("per_link_coverage_ok", &VerificationReport::per_link_coverage_ok)
      .def_readonly("link_count", &VerificationReport::link_count)
      .def_readonly("merges", &VerificationReport::merges)
      .def_readonly("failures", &VerificationReport::failures)
      .def("all_ok", &VerificationReport::all_ok);

  m.def("synthesize_tour", [](const ReductionMap& rm, std::vector<Label> order) {
    return synthesize_tour(rm, CycleOrder{std::move(order)});
  });
  m.def("synthesize_path", [](const ReductionMap& rm, std::vector<Label> order) {
    return synthesize_path(rm, PathOrder{std::move(order)});
  });
  m.def("verify_polyline", py::overload_cast<const RectPolyline&, const ReductionMap&>(&verify_polyline),
        py::arg("polyline"), py::arg("reduction"));

  py::enum_<JunctionRule>(m, "JunctionRule")
      .value("MERGE", JunctionRule::Merge)
      .value("TURN_AT_POINTS", JunctionRule::TurnAtPoints);

  py::class_<OracleResult>(m, "OracleResult")
      .def_readonly("min_links", &OracleResult::min_links)
      .def_readonly("witness", &OracleResult::witness)
      .def_readonly("order", &OracleResult::order)
      .def_readonly("merges", &OracleResult::merges)
      .def_readonly("explored", &OracleResult::explored)
      .def_property_readonly("certified", [](const OracleResult& r) { return certification_name(r.certified); });

  py::class_<HammingBound>(m, "HammingBound")
      .def_readonly("value", &HammingBound::value)
      .def_readonly("best_order", &HammingBound::best_order);

  m.def("hamming", py::overload_cast<const Point4&, const Point4&>(&hamming));
  m.def(
      "cyclic_hamming_lower_bound",
      [](const std::vector<Point4>& points, std::size_t cap) { return cyclic_hamming_lower_bound(points, cap); },
      py::arg("points"), py::arg("cap") = 9);
  m.def(
      "min_link_tour",
      [](const std::vector<Point4>& points, std::size_t cap, JunctionRule rule) {
        OracleLimits limits;
        limits.max_points = cap;
        limits.junctions = rule;
        return min_link_tour(points, limits);
      },
      py::arg("points"), py::arg("cap") = 6, py::arg("junctions") = JunctionRule::Merge);
  m.def(
      "min_link_path",
      [](const std::vector<Point4>& points, Label start, Label end, std::size_t cap, JunctionRule rule) {
        OracleLimits limits;
        limits.max_points = cap;
        limits.junctions = rule;
        return min_link_path(points, start, end, limits);
      },
      py::arg("points"), py::arg("start"), py::arg("end"), py::arg("cap") = 6,
      py::arg("junctions") = JunctionRule::Merge);

  m.def(
      "roundtrip",
      [](const GridGraph& g, const std::string& mode, Label start, Label end, bool oracle) {
        RoundtripOptions options;
        options.mode = parse_mode(mode);
        options.start = start;
        options.end = end;
        options.oracle = oracle;
        return format_record(run_roundtrip(g, options));
      },
      py::arg("grid"), py::arg("mode") = "cycle", py::arg("start") = 0, py::arg("end") = 0, py::arg("oracle") = false);

  m.def(
      "render_svg",
      [](const GridGraph& g, std::optional<std::vector<Label>> order, bool closed) {
        std::optional<SvgOverlay> overlay;
        if (order) overlay = SvgOverlay{*order, closed};
        return render_svg(g, overlay);
      },
      py::arg("grid"), py::arg("order") = std::nullopt, py::arg("closed") = true);
}
