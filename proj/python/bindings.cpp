#include <optional>
#include <string>
#include <tuple>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "circlepat/errors.hpp"
#include "circlepat/feasibility.hpp"
#include "circlepat/io.hpp"
#include "circlepat/layout.hpp"
#include "circlepat/solver.hpp"
#include "circlepat/special.hpp"
#include "circlepat/triangle.hpp"

namespace py = pybind11;
using namespace circlepat;

// Everything crosses the boundary as JSON text; the Python side decodes it.

namespace {

std::tuple<double, double, double> as_tuple(const ApexTriangle& t) { return {t.length, t.phi1, t.phi2}; }

EuclideanGauge gauge_from(const std::string& s) {
  if (s == "sum") return SumToOne{};
  if (s.rfind("face:", 0) == 0 && s.size() > 5) return FixFace{s.substr(5)};
  throw InputError("gauge must be \"sum\" or \"face:<id>\", got \"" + s + "\"");
}

RadiusAssignment radii_from(const PatternProblem& p, const std::map<std::string, double>& by_id) {
  RadiusAssignment r;
  r.values.assign(p.complex.face_count(), 0.0);
  if (by_id.size() != r.values.size()) throw InputError("expected one radius per face");
  for (const auto& [id, value] : by_id) {
    const auto f = p.complex.find_face(id);
    if (!f) throw InputError("unknown face \"" + id + "\"");
    r.values[*f] = value;
  }
  return r;
}

std::string check(const std::string& text, double tol) {
  const auto p = io::parse_problem(text);
  return io::feasibility_to_json(p, check_feasibility(p, tol)).dump();
}

std::string solve_json(const std::string& text, const std::string& method, double tol, const std::string& gauge,
                       const std::optional<std::map<std::string, double>>& initial) {
  const auto p = io::parse_problem(text);
  SolveOptions o;
  o.method = solve_method_from_string(method);
  o.tol = tol;
  o.gauge = gauge_from(gauge);
  if (initial) o.initial_radii = radii_from(p, *initial);
  const auto feas = check_feasibility(p);
  if (feas.status == FeasibilityStatus::Infeasible) throw InfeasibleError("the data admit no pattern");
  o.precheck = false;
  return io::report_to_json(p, solve(p, o), &feas).dump();
}

std::string forward_map_json(const std::string& text, const std::map<std::string, double>& radii) {
  const auto p = io::parse_problem(text);
  const auto fm = forward_map(p, radii_from(p, radii));
  nlohmann::ordered_json doc;
  for (int f = 0; f < p.complex.face_count(); ++f) doc["cone"][p.complex.face_id(f)] = fm.cone[f];
  for (int e = 0; e < p.complex.edge_count(); ++e) {
    doc["angles"][p.complex.edge_id(e)] = {fm.angles[CellComplex::side_of(e, 0)], fm.angles[CellComplex::side_of(e, 1)]};
  }
  return doc.dump();
}

std::pair<std::string, std::string> export_json(const std::string& text, const std::string& report) {
  const auto p = io::parse_problem(text);
  const auto r = io::report_from_json(p, nlohmann::json::parse(report));
  const auto layout = export_layout(p, r);
  return {render_svg(p, layout), layout_to_json(p, layout).dump()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Circle patterns on closed surfaces";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
  py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_NotImplementedError);

  m.def("normalize", [](const std::string& text) { return io::emit_problem(io::parse_problem(text)); },
        py::arg("text"), "Parse and validate an instance, returning its canonical JSON.");
  m.def("check", &check, py::arg("text"), py::arg("tol") = kDefaultFeasibilityTol);
  m.def("solve", &solve_json, py::arg("text"), py::arg("method") = "auto", py::arg("tol") = 1e-10,
        py::arg("gauge") = "sum", py::arg("initial_radii") = py::none());
  m.def("forward_map", &forward_map_json, py::arg("text"), py::arg("radii"));
  m.def("export", &export_json, py::arg("text"), py::arg("report"), "Returns (svg, layout json).");
  m.def("lobachevsky", &lobachevsky, py::arg("x"));
  m.def("euclidean_apex", [](double r1, double r2, double theta) { return as_tuple(euclidean_apex(r1, r2, theta)); },
        py::arg("r1"), py::arg("r2"), py::arg("theta"));
  m.def("hyperbolic_apex", [](double r1, double r2, double theta) { return as_tuple(hyperbolic_apex(r1, r2, theta)); },
        py::arg("r1"), py::arg("r2"), py::arg("theta"));
}
