#include "circlepat/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "circlepat/errors.hpp"
#include "circlepat/feasibility.hpp"
#include "circlepat/triangle.hpp"

namespace circlepat {

namespace {

constexpr double kHyperbolicRadiusCap = 1e3;
constexpr double kEuclideanRadiusCap = 1e150;
constexpr double kRadiusFloor = 1e-12;
constexpr double kKktTol = 1e-8;
constexpr double kMaxLogStep = 4.0;

double max_abs_residual(const std::vector<double>& cone, const std::vector<double>& target) {
  double worst = 0.0;
  for (std::size_t f = 0; f < cone.size(); ++f) worst = std::max(worst, std::abs(cone[f] - target[f]));
  return worst;
}

void precheck(const PatternProblem& problem, const SolveOptions& opts) {
  problem.require_valid();
  if (!(opts.tol > 0.0)) throw InputError("solve: tol must be positive");
  if (opts.max_sweeps < 1 || opts.max_newton_steps < 1) throw InputError("solve: iteration caps must be at least 1");
  if (!opts.precheck) return;
  const FeasibilityReport fr = check_feasibility(problem);
  if (fr.status != FeasibilityStatus::Infeasible) return;
  std::ostringstream os;
  os << "data fails the existence conditions (margin " << fr.margin << ")";
  if (fr.certificate) {
    os << "; witness faces {";
    for (std::size_t i = 0; i < fr.certificate->faces.size(); ++i) {
      os << (i ? ", " : "") << problem.complex.face_id(fr.certificate->faces[i]);
    }
    os << "}";
  }
  throw InfeasibleError(os.str());
}

std::vector<double> initial_radii(const PatternProblem& problem, const SolveOptions& opts) {
  const int n = problem.complex.face_count();
  if (opts.initial_radii) {
    if (static_cast<int>(opts.initial_radii->size()) != n) throw InputError("solve: initial radii have the wrong length");
    for (const double r : opts.initial_radii->values) {
      if (!(r > 0.0) || !std::isfinite(r)) throw InputError("solve: initial radii must be positive and finite");
    }
    return opts.initial_radii->values;
  }
  const double r0 = problem.geometry == Geometry::Hyperbolic ? 1.0 : 1.0 / n;
  return std::vector<double>(n, r0);
}

SolveReport finish(const PatternProblem& problem, std::vector<double> radii, int iterations, SolveMethod method) {
  SolveReport report;
  ForwardMapResult fm = forward_map(problem, RadiusAssignment{radii});
  report.radii.values = std::move(radii);
  report.angles = std::move(fm.angles);
  report.edge_lengths = std::move(fm.edge_length);
  report.residual = max_abs_residual(fm.cone, problem.cone_angles);
  report.cone = std::move(fm.cone);
  report.iterations = iterations;
  report.method = method;
  if (problem.geometry == Geometry::Hyperbolic) {
    report.energy = total_energy(problem, report.angles);
    report.kkt_ok = verify_kkt(problem, report, kKktTol);
  }
  return report;
}

// Cone angle of one face as a function of its own radius, the others frozen.
class FaceEquation {
 public:
  FaceEquation(const PatternProblem& p, const std::vector<double>& radii, int face)
      : p_(p), radii_(radii), face_(face) {}

  double cone(double r) const {
    double sum = 0.0;
    for (const int s : p_.complex.sides_of_face(face_)) {
      const double other = other_radius(s, r);
      sum += 2.0 * apex_triangle(p_.geometry, r, other, p_.apex_angle(CellComplex::edge_of_side(s))).phi2;
    }
    return sum;
  }

  /// d cone / d ln r.
  double slope(double r) const {
    double sum = 0.0;
    for (const int s : p_.complex.sides_of_face(face_)) {
      const double other = other_radius(s, r);
      const ApexPartials d = apex_partials(p_.geometry, r, other, p_.apex_angle(CellComplex::edge_of_side(s)));
      sum += 2.0 * (is_loop(s) ? d.dphi2_du1 + d.dphi2_du2 : d.dphi2_du1);
    }
    if (p_.geometry == Geometry::Hyperbolic) sum *= r / std::sinh(r);
    return sum;
  }

 private:
  bool is_loop(int s) const { return p_.complex.face_of_side(CellComplex::opposite_side(s)) == face_; }
  double other_radius(int s, double r) const {
    return is_loop(s) ? r : radii_[p_.complex.face_of_side(CellComplex::opposite_side(s))];
  }

  const PatternProblem& p_;
  const std::vector<double>& radii_;
  int face_;
};

// Solves cone(r) = target for the decreasing map cone, bracketing in ln r and
// polishing with safeguarded Newton steps.
double solve_face(const PatternProblem& problem, const std::vector<double>& radii, int face, double tol,
                  const BracketObserver& observer) {
  const FaceEquation eq(problem, radii, face);
  const double target = problem.cone_angles[face];
  const double current = radii[face];
  const double here = eq.cone(current) - target;
  if (std::abs(here) <= 1e-3 * tol) return current;

  double lo = kRadiusFloor;
  double cone_lo = eq.cone(lo);
  while (cone_lo <= target) {
    lo *= 1e-4;
    if (lo < 1e-300) throw NumericalError("solve_iterative: no lower bracket for face \"" + problem.complex.face_id(face) + "\"", std::abs(here));
    cone_lo = eq.cone(lo);
  }
  const double cap = problem.geometry == Geometry::Hyperbolic ? kHyperbolicRadiusCap : kEuclideanRadiusCap;
  double hi = std::min(cap, std::max(2.0 * current, 2.0 * lo));
  double cone_hi = eq.cone(hi);
  while (cone_hi >= target) {
    if (hi >= cap) {
      throw NumericalError("solve_iterative: no upper bracket below the radius cap for face \"" +
                               problem.complex.face_id(face) + "\"",
                           std::abs(here));
    }
    hi = std::min(cap, 4.0 * hi);
    cone_hi = eq.cone(hi);
  }
  if (observer) observer(face, cone_lo, cone_hi, target);

  double a = std::log(lo);
  double b = std::log(hi);
  double x = std::log(current);
  if (!(x > a && x < b)) x = 0.5 * (a + b);
  double step_before_last = b - a;
  double last_step = step_before_last;
  for (int iter = 0; iter < 300; ++iter) {
    const double r = std::exp(x);
    const double g = eq.cone(r) - target;
    if (g == 0.0) return r;
    if (g > 0.0) a = x;
    else b = x;
    const double dg = eq.slope(r);
    double next = x - g / dg;
    const bool newton_ok = dg < 0.0 && next > a && next < b && std::abs(g / dg) < 0.5 * std::abs(step_before_last);
    if (!newton_ok) next = 0.5 * (a + b);
    step_before_last = last_step;
    last_step = next - x;
    x = next;
    if (std::abs(last_step) <= 4e-16 * std::max(1.0, std::abs(x)) || b - a <= 4e-16 * std::max(1.0, std::abs(x))) break;
  }
  return std::exp(x);
}

SolveReport run_iterative(const PatternProblem& problem, const SolveOptions& opts, std::vector<double> radii) {
  const bool euclidean = problem.geometry == Geometry::Euclidean;
  if (euclidean) apply_gauge(problem, opts.gauge, radii);
  double residual = max_abs_residual(forward_map(problem, RadiusAssignment{radii}).cone, problem.cone_angles);
  int sweeps = 0;
  while (residual > opts.tol) {
    if (sweeps >= opts.max_sweeps) {
      throw NumericalError("solve_iterative: sweep cap reached with residual " + std::to_string(residual), residual);
    }
    for (int f = 0; f < problem.complex.face_count(); ++f) {
      radii[f] = solve_face(problem, radii, f, opts.tol, opts.on_bracket);
    }
    if (euclidean) apply_gauge(problem, opts.gauge, radii);
    residual = max_abs_residual(forward_map(problem, RadiusAssignment{radii}).cone, problem.cone_angles);
    ++sweeps;
  }
  return finish(problem, std::move(radii), sweeps, SolveMethod::Iterative);
}

struct NewtonState {
  std::vector<double> radii;
  Eigen::VectorXd residual;  // cone - Phi
};

NewtonState evaluate(const PatternProblem& problem, std::vector<double> radii) {
  NewtonState s;
  const auto cone = forward_map(problem, RadiusAssignment{radii}).cone;
  s.residual.resize(static_cast<Eigen::Index>(cone.size()));
  for (std::size_t f = 0; f < cone.size(); ++f) s.residual[static_cast<Eigen::Index>(f)] = cone[f] - problem.cone_angles[f];
  s.radii = std::move(radii);
  return s;
}

// Newton direction in u; nullopt when the linear system breaks down.
std::optional<Eigen::VectorXd> newton_direction(const PatternProblem& problem, const NewtonState& s) {
  const Eigen::MatrixXd j = jacobian_cone_angles(problem, RadiusAssignment{s.radii});
  const Eigen::Index n = j.rows();
  Eigen::VectorXd du;
  if (problem.geometry == Geometry::Hyperbolic) {
    const Eigen::LLT<Eigen::MatrixXd> llt(-j);
    if (llt.info() != Eigen::Success) return std::nullopt;
    du = llt.solve(s.residual);
  } else {
    // Constant shifts of u are a null direction; border the system to fix the mean.
    Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n + 1, n + 1);
    k.topLeftCorner(n, n) = j;
    k.block(0, n, n, 1).setOnes();
    k.block(n, 0, 1, n).setOnes();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + 1);
    rhs.head(n) = -s.residual;
    const Eigen::FullPivLU<Eigen::MatrixXd> lu(k);
    if (!lu.isInvertible()) return std::nullopt;
    du = lu.solve(rhs).head(n);
  }
  if (!du.allFinite()) return std::nullopt;
  return du;
}

std::vector<double> step_radii(const PatternProblem& problem, const std::vector<double>& radii, const Eigen::VectorXd& du,
                               double t) {
  std::vector<double> out(radii.size());
  for (std::size_t f = 0; f < radii.size(); ++f) {
    const double d = t * du[static_cast<Eigen::Index>(f)];
    if (problem.geometry == Geometry::Hyperbolic) {
      const double u = hyp::log_tanh_half(radii[f]) + d;
      if (!(u < 0.0)) return {};
      out[f] = hyp::radius_from_log_tanh_half(u);
    } else {
      out[f] = radii[f] * std::exp(d);
    }
    if (!(out[f] > 0.0) || !std::isfinite(out[f])) return {};
  }
  return out;
}

}  // namespace

std::string_view to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::Iterative:
      return "iterative";
    case SolveMethod::Newton:
      return "newton";
    case SolveMethod::Auto:
      return "auto";
  }
  return "auto";
}

SolveMethod solve_method_from_string(std::string_view s) {
  if (s == "iterative") return SolveMethod::Iterative;
  if (s == "newton") return SolveMethod::Newton;
  if (s == "auto") return SolveMethod::Auto;
  throw InputError("unknown solve method \"" + std::string(s) + "\"");
}

void apply_gauge(const PatternProblem& problem, const EuclideanGauge& gauge, std::vector<double>& radii) {
  double scale = 0.0;
  if (const auto* fixed = std::get_if<FixFace>(&gauge)) {
    const auto f = problem.complex.find_face(fixed->id);
    if (!f) throw InputError("gauge: unknown face \"" + fixed->id + "\"");
    scale = radii[*f];
  } else {
    for (const double r : radii) scale += r;
  }
  for (double& r : radii) r /= scale;
}

SolveReport solve_iterative(const PatternProblem& problem, const SolveOptions& opts) {
  precheck(problem, opts);
  return run_iterative(problem, opts, initial_radii(problem, opts));
}

SolveReport solve_newton(const PatternProblem& problem, const SolveOptions& opts) {
  precheck(problem, opts);
  const bool euclidean = problem.geometry == Geometry::Euclidean;
  std::vector<double> radii = initial_radii(problem, opts);
  if (euclidean) apply_gauge(problem, opts.gauge, radii);
  NewtonState s = evaluate(problem, std::move(radii));

  auto fall_back = [&](int steps) {
    SolveReport report = run_iterative(problem, opts, s.radii);
    report.iterations += steps;
    report.fell_back = true;
    return report;
  };

  for (int step = 0;; ++step) {
    if (s.residual.lpNorm<Eigen::Infinity>() <= opts.tol) {
      return finish(problem, std::move(s.radii), step, SolveMethod::Newton);
    }
    if (step >= opts.max_newton_steps) return fall_back(step);
    const auto du = newton_direction(problem, s);
    if (!du) return fall_back(step);
    const double norm = s.residual.norm();
    bool accepted = false;
    // Far from the solution the full step can span hundreds of e-folds.
    const double longest = du->lpNorm<Eigen::Infinity>();
    double t = longest > kMaxLogStep ? kMaxLogStep / longest : 1.0;
    for (int halving = 0; halving <= 30; ++halving, t *= 0.5) {
      std::vector<double> trial = step_radii(problem, s.radii, *du, t);
      if (trial.empty()) continue;
      if (euclidean) apply_gauge(problem, opts.gauge, trial);
      if (!std::all_of(trial.begin(), trial.end(), [](double r) { return r > 0.0 && std::isfinite(r); })) continue;
      NewtonState next = evaluate(problem, std::move(trial));
      if (next.residual.norm() < norm) {
        s = std::move(next);
        accepted = true;
        break;
      }
    }
    if (!accepted) return fall_back(step);
  }
}

SolveReport solve(const PatternProblem& problem, const SolveOptions& opts) {
  return opts.method == SolveMethod::Iterative ? solve_iterative(problem, opts) : solve_newton(problem, opts);
}

Eigen::MatrixXd jacobian_cone_angles(const PatternProblem& problem, const RadiusAssignment& radii) {
  const CellComplex& cx = problem.complex;
  const int n = cx.face_count();
  if (static_cast<int>(radii.size()) != n) throw InputError("jacobian_cone_angles: wrong number of radii");
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
  for (int e = 0; e < cx.edge_count(); ++e) {
    const int a = cx.face_of_side(CellComplex::side_of(e, 0));
    const int b = cx.face_of_side(CellComplex::side_of(e, 1));
    if (!(radii[a] > 0.0) || !(radii[b] > 0.0)) throw InputError("jacobian_cone_angles: radii must be positive");
    const ApexPartials d = apex_partials(problem.geometry, radii[a], radii[b], problem.apex_angle(e));
    // Side a carries phi2, side b carries phi1; u1 belongs to face a.
    j(a, a) += 2.0 * d.dphi2_du1;
    j(a, b) += 2.0 * d.dphi2_du2;
    j(b, a) += 2.0 * d.dphi1_du1;
    j(b, b) += 2.0 * d.dphi1_du2;
  }
  return j;
}

double total_energy(const PatternProblem& problem, const AngleStructure& angles) {
  const CellComplex& cx = problem.complex;
  if (static_cast<int>(angles.size()) != cx.side_total()) throw InputError("total_energy: wrong number of angles");
  double sum = 0.0;
  for (int e = 0; e < cx.edge_count(); ++e) {
    sum += v_energy({angles[CellComplex::side_of(e, 1)], angles[CellComplex::side_of(e, 0)], problem.apex_angle(e)});
  }
  return sum;
}

std::optional<double> kkt_spread(const PatternProblem& problem, const AngleStructure& angles, double sum_tol) {
  if (problem.geometry != Geometry::Hyperbolic) {
    throw UnsupportedError("the energy certificate is defined for hyperbolic patterns only");
  }
  if (!angle_structure_violations(problem, angles, sum_tol).empty()) return std::nullopt;
  const CellComplex& cx = problem.complex;
  double worst = 0.0;
  for (int f = 0; f < cx.face_count(); ++f) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const int s : cx.sides_of_face(f)) {
      // phi2 is the angle at this face's centre; r1 is then this face's radius.
      const AngleRadii r = hyperbolic_radii_from_angles(angles[CellComplex::opposite_side(s)], angles[s],
                                                        problem.apex_angle(CellComplex::edge_of_side(s)));
      if (r.kind != Degeneracy::None || !r.r1) return std::nullopt;
      const double value = hyp::log_tanh_half(*r.r1);
      lo = std::min(lo, value);
      hi = std::max(hi, value);
    }
    if (lo <= hi) worst = std::max(worst, hi - lo);
  }
  return worst;
}

bool verify_kkt(const PatternProblem& problem, const SolveReport& report, double tol) {
  const auto spread = kkt_spread(problem, report.angles, std::max(1e-9, report.residual));
  return spread && *spread <= tol;
}

}  // namespace circlepat
