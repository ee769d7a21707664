#pragma once

// Solvers for the radii realizing prescribed cone angles, and the energy-based
// certificate of a hyperbolic solution.

#include <functional>
#include <optional>
#include <string>
#include <variant>

#include <Eigen/Dense>

#include "circlepat/complex.hpp"

namespace circlepat {

enum class SolveMethod { Iterative, Newton, Auto };

std::string_view to_string(SolveMethod m);
SolveMethod solve_method_from_string(std::string_view s);

struct SumToOne {};
struct FixFace {
  std::string id;  // this face gets radius 1
};
using EuclideanGauge = std::variant<SumToOne, FixFace>;

/// Called once per face update with the cone angles at the bracket ends.
using BracketObserver = std::function<void(int face, double cone_at_lo, double cone_at_hi, double target)>;

struct SolveOptions {
  SolveMethod method = SolveMethod::Auto;
  double tol = 1e-10;  // max_f |cone(f) - Phi(f)|
  int max_sweeps = 20000;
  int max_newton_steps = 200;
  EuclideanGauge gauge = SumToOne{};
  std::optional<RadiusAssignment> initial_radii;
  /// Refuse data that fails the existence conditions before iterating.
  bool precheck = true;
  BracketObserver on_bracket;
};

struct SolveReport {
  RadiusAssignment radii;
  AngleStructure angles;
  std::vector<double> edge_lengths;
  std::vector<double> cone;
  double residual = 0.0;
  int iterations = 0;
  SolveMethod method = SolveMethod::Iterative;  // the method that produced the result
  bool fell_back = false;                       // Newton gave up and the iteration finished the job
  std::optional<double> energy;                 // hyperbolic only
  std::optional<bool> kkt_ok;                   // hyperbolic only, at tolerance 1e-8
};

/// Gauss-Seidel sweeps; each face solves its monotone 1-D equation exactly.
SolveReport solve_iterative(const PatternProblem& problem, const SolveOptions& opts = {});

/// Damped Newton in u = ln tanh(r/2) (hyperbolic) or u = ln r (Euclidean).
SolveReport solve_newton(const PatternProblem& problem, const SolveOptions& opts = {});

/// Dispatches on opts.method; Auto runs Newton.
SolveReport solve(const PatternProblem& problem, const SolveOptions& opts = {});

/// d cone / d u with u as in solve_newton.
Eigen::MatrixXd jacobian_cone_angles(const PatternProblem& problem, const RadiusAssignment& radii);

/// Sum over edges of v(phi(f', e), phi(f, e)) at apex angle pi - D(e).
double total_energy(const PatternProblem& problem, const AngleStructure& angles);

/// Largest per-face spread of ln tanh(r(f,e)/2) recomputed from angles alone,
/// or nullopt when the angles are not an interior angle structure.
std::optional<double> kkt_spread(const PatternProblem& problem, const AngleStructure& angles, double sum_tol = 1e-9);

/// Stationarity of the energy under the per-face sum constraints.
bool verify_kkt(const PatternProblem& problem, const SolveReport& report, double tol = 1e-8);

/// Rescales Euclidean radii into the gauge.
void apply_gauge(const PatternProblem& problem, const EuclideanGauge& gauge, std::vector<double>& radii);

}  // namespace circlepat
