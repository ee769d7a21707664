#include "circlepat/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "circlepat/errors.hpp"
#include "circlepat/feasibility.hpp"
#include "circlepat/io.hpp"
#include "circlepat/layout.hpp"
#include "circlepat/solver.hpp"

namespace circlepat {

namespace {

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string face_list(const PatternProblem& p, const std::vector<int>& faces) {
  std::string s = "{";
  for (std::size_t i = 0; i < faces.size(); ++i) s += (i ? ", " : "") + p.complex.face_id(faces[i]);
  return s + "}";
}

void print_feasibility(const PatternProblem& p, const FeasibilityReport& r, std::ostream& out) {
  out << "geometry: " << to_string(r.geometry) << "\n";
  out << "status: " << to_string(r.status) << "\n";
  out << "margin: " << (std::isfinite(r.margin) ? num(r.margin) : "inf") << "\n";
  if (r.geometry == Geometry::Hyperbolic) out << "inflation_margin: " << num(r.inflation_margin) << "\n";
  if (r.certificate) {
    out << "certificate: " << (r.certificate->kind == Certificate::Kind::Subset ? "subset " : "total_mismatch ")
        << face_list(p, r.certificate->faces) << " slack " << num(r.certificate->slack) << "\n";
  }
  if (r.dual_certificate) {
    const auto z = dual_objective(p, *r.dual_certificate);
    if (z) out << "dual_objective: " << num(*z) << "\n";
  }
}

EuclideanGauge parse_gauge(const std::string& s) {
  if (s == "sum") return SumToOne{};
  if (s.rfind("face:", 0) == 0 && s.size() > 5) return FixFace{s.substr(5)};
  throw InputError("--gauge must be \"sum\" or \"face:<id>\", got \"" + s + "\"");
}

int cmd_validate(const std::string& file, std::ostream& out) {
  const PatternProblem p = io::load_problem(file);
  out << "valid: " << p.complex.face_count() << " faces, " << p.complex.edge_count() << " edges, "
      << p.complex.vertex_count() << " vertices, " << to_string(p.geometry) << "\n";
  for (const auto& note : p.complex.notes()) out << "note: " << note << "\n";
  if (p.complex.has_vertices()) {
    const auto cones = vertex_cone_angles(p);
    for (int v = 0; v < p.complex.vertex_count(); ++v) {
      out << "vertex " << p.complex.vertex_id(v) << ": cone angle " << num(cones[v]) << "\n";
    }
  }
  return kExitOk;
}

int cmd_check(const std::string& file, double tol, bool as_json, std::ostream& out) {
  const PatternProblem p = io::load_problem(file);
  const FeasibilityReport r = check_feasibility(p, tol);
  if (as_json) out << io::feasibility_to_json(p, r).dump(2) << "\n";
  else print_feasibility(p, r, out);
  return r.status == FeasibilityStatus::Infeasible ? kExitInfeasible : kExitOk;
}

int cmd_oracle(const std::string& file, double tol, std::ostream& out) {
  const PatternProblem p = io::load_problem(file);
  const FeasibilityStatus status = brute_force_status(p, tol);
  out << "status: " << to_string(status) << "\n";
  const bool euclidean = p.geometry == Geometry::Euclidean;
  if (!euclidean || p.complex.face_count() > 1) {
    const SubsetSlack s = brute_force_min_slack(p, !euclidean);
    out << "minimum: " << face_list(p, s.faces) << " slack " << num(s.slack) << "\n";
  }
  if (euclidean) {
    std::vector<int> all(p.complex.face_count());
    for (int f = 0; f < p.complex.face_count(); ++f) all[f] = f;
    out << "total: slack " << num(subset_slack(p, all)) << "\n";
  }
  return status == FeasibilityStatus::Infeasible ? kExitInfeasible : kExitOk;
}

int cmd_solve(const std::string& file, const std::string& method, double tol, int max_iter, const std::string& gauge,
              bool as_json, const std::string& out_path, std::ostream& out, std::ostream& err) {
  const PatternProblem p = io::load_problem(file);
  SolveOptions opts;
  opts.method = solve_method_from_string(method);
  opts.tol = tol;
  if (max_iter > 0) {
    opts.max_sweeps = max_iter;
    opts.max_newton_steps = max_iter;
  }
  opts.gauge = parse_gauge(gauge);
  const FeasibilityReport feas = check_feasibility(p);
  if (feas.status == FeasibilityStatus::Infeasible) {
    err << "solve refused: the data admit no pattern\n";
    print_feasibility(p, feas, err);
    return kExitInfeasible;
  }
  opts.precheck = false;
  const SolveReport r = solve(p, opts);
  const auto doc = io::report_to_json(p, r, &feas);
  if (!out_path.empty()) io::write_text_file(out_path, doc.dump(2) + "\n");
  if (as_json) {
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << "geometry: " << to_string(p.geometry) << "\n";
  out << "method: " << to_string(r.method) << (r.fell_back ? " (after Newton fallback)" : "") << "\n";
  out << "iterations: " << r.iterations << "\n";
  out << "residual: " << num(r.residual) << "\n";
  for (int f = 0; f < p.complex.face_count(); ++f) out << "radius " << p.complex.face_id(f) << " " << num(r.radii[f]) << "\n";
  if (r.energy) out << "energy: " << num(*r.energy) << "\n";
  if (r.kkt_ok) out << "kkt_ok: " << (*r.kkt_ok ? "true" : "false") << "\n";
  return kExitOk;
}

int cmd_export(const std::string& file, const std::string& solution, const std::string& svg, const std::string& layout_path,
               std::ostream& out) {
  const PatternProblem p = io::load_problem(file);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(io::read_text_file(solution));
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(solution + ": malformed JSON: " + e.what());
  }
  const SolveReport r = io::report_from_json(p, doc);
  const LayoutDocument layout = export_layout(p, r);
  io::write_text_file(svg, render_svg(p, layout));
  out << "wrote " << svg << "\n";
  if (!layout_path.empty()) {
    io::write_text_file(layout_path, layout_to_json(p, layout).dump(2) + "\n");
    out << "wrote " << layout_path << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Circle patterns with prescribed intersection and cone angles"};
  app.name("circlepat");
  app.require_subcommand(1);

  std::string file;
  double tol = kDefaultFeasibilityTol;
  bool as_json = false;

  auto* validate = app.add_subcommand("validate", "Check an instance file");
  validate->add_option("file", file, "Instance JSON")->required();

  auto* check = app.add_subcommand("check", "Decide whether a pattern exists");
  check->add_option("file", file, "Instance JSON")->required();
  check->add_option("--tol", tol, "Margin below which the verdict is boundary_feasible")->check(CLI::PositiveNumber);
  check->add_flag("--json", as_json, "Print the report as JSON");

  std::string method = "auto";
  std::string gauge = "sum";
  std::string out_path;
  double solve_tol = 1e-10;
  auto* solve_cmd = app.add_subcommand("solve", "Compute the radii");
  solve_cmd->add_option("file", file, "Instance JSON")->required();
  solve_cmd->add_option("--method", method, "iterative, newton or auto")
      ->check(CLI::IsMember({"iterative", "newton", "auto"}));
  solve_cmd->add_option("--tol", solve_tol, "Cone-angle residual tolerance (radians)")->check(CLI::PositiveNumber);
  int max_iter = 0;
  solve_cmd->add_option("--max-iter", max_iter, "Cap on sweeps or Newton steps (default: solver's own)")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--gauge", gauge, "Euclidean scale: sum (radii sum to 1) or face:<id> (that radius is 1)");
  solve_cmd->add_flag("--json", as_json, "Print the report as JSON");
  solve_cmd->add_option("--out", out_path, "Write the JSON report to this file");

  std::string solution;
  std::string svg;
  std::string layout_path;
  auto* export_cmd = app.add_subcommand("export", "Draw a solved pattern");
  export_cmd->add_option("file", file, "Instance JSON")->required();
  export_cmd->add_option("--solution", solution, "Report written by solve --out")->required();
  export_cmd->add_option("--svg", svg, "SVG output path")->required();
  export_cmd->add_option("--layout", layout_path, "Layout JSON output path");

  auto* oracle = app.add_subcommand("oracle", "Decide existence by enumerating face subsets (at most 20 faces)");
  oracle->add_option("file", file, "Instance JSON")->required();
  oracle->add_option("--tol", tol, "Margin below which the verdict is boundary_feasible")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*validate) return cmd_validate(file, out);
    if (*check) return cmd_check(file, tol, as_json, out);
    if (*solve_cmd) return cmd_solve(file, method, solve_tol, max_iter, gauge, as_json, out_path, out, err);
    if (*export_cmd) return cmd_export(file, solution, svg, layout_path, out);
    if (*oracle) return cmd_oracle(file, tol, out);
  } catch (const InputError& e) {
    for (const auto& d : e.diagnostics()) err << "error: " << d << "\n";
    return kExitInputError;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << " (last residual " << num(e.last_residual()) << ")\n";
    return kExitNumericalFailure;
  }
  return kExitInputError;
}

}  // namespace circlepat
