#pragma once

// Existence conditions for prescribed (D, Phi).
//
// With the subset slack g(X) = sum_{e in E(X)} D(e) - sum_{f in X} Phi(f)/2:
//   hyperbolic pattern exists  <=>  g(X) > 0 for every nonempty X;
//   Euclidean pattern exists   <=>  g(F) = 0 and g(X) > 0 for nonempty X != F.
// Exact minima of g are computed by min cuts in the face/edge network
// source -> f (Phi(f)/2), f -> e (inf), e -> sink (D(e)), whose cut value for
// source-side face set X is sum Phi/2 + g(X).

#include <optional>
#include <string>
#include <vector>

#include "circlepat/complex.hpp"

namespace circlepat {

constexpr double kDefaultFeasibilityTol = 1e-9;

/// g(X) with compensated summation.
double subset_slack(const PatternProblem& problem, const std::vector<int>& faces);

struct SubsetSlack {
  std::vector<int> faces;  // ascending face indices
  double slack = 0.0;
};

/// Exhaustive minimum of g over nonempty subsets (optionally excluding X = F).
/// Ties go to the lexicographically smallest sorted face-id list.
/// Refuses instances with more than 20 faces.
SubsetSlack brute_force_min_slack(const PatternProblem& problem, bool include_full);

struct FlowCheck {
  bool saturated = false;
  double flow = 0.0;
  double demand = 0.0;
  std::vector<int> mincut_faces;  // source-side faces when unsaturated
};

/// Max flow with face demands inflated to (1 + inflation) Phi(f)/2.
FlowCheck flow_feasible(const PatternProblem& problem, double inflation);

enum class FeasibilityStatus {
  Feasible,          // strict conditions hold with margin > tol
  BoundaryFeasible,  // strict conditions hold but the margin is within (0, tol]
  Infeasible,        // a certificate with nonpositive slack (or a sum mismatch) exists
};

std::string_view to_string(FeasibilityStatus s);

struct Certificate {
  enum class Kind { Subset, TotalMismatch };
  Kind kind = Kind::Subset;
  std::vector<int> faces;
  double slack = 0.0;  // g(faces)
};

/// Dual point (y_f, y_e) of the angle-structure LP: y_f = 1 on X, y_e = -1 on
/// E(X), zero elsewhere. Its dual objective is -g(X).
struct DualCertificate {
  std::vector<double> face;
  std::vector<double> edge;
};

struct FeasibilityReport {
  Geometry geometry = Geometry::Hyperbolic;
  FeasibilityStatus status = FeasibilityStatus::Infeasible;
  /// Minimum subset slack over the subsets the conditions quantify over
  /// (Euclidean with a sum mismatch: -|g(F)|).
  double margin = 0.0;
  /// Largest uniform demand inflation that keeps the network saturated
  /// (hyperbolic only; 0 when infeasible).
  double inflation_margin = 0.0;
  std::optional<Certificate> certificate;  // the minimizing subset
  std::optional<DualCertificate> dual_certificate;
};

FeasibilityReport check_hyperbolic(const PatternProblem& problem, double tol = kDefaultFeasibilityTol);
FeasibilityReport check_euclidean(const PatternProblem& problem, double tol = kDefaultFeasibilityTol);
/// Dispatches on the problem's geometry.
FeasibilityReport check_feasibility(const PatternProblem& problem, double tol = kDefaultFeasibilityTol);

/// Verdict from exhaustive enumeration, using the same thresholds as check_*.
FeasibilityStatus brute_force_status(const PatternProblem& problem, double tol = kDefaultFeasibilityTol);

/// Replays a dual certificate against the dual constraints y_e <= 0 and
/// y_f + y_e <= 0 for e < f, returning its objective, or nullopt if infeasible.
std::optional<double> dual_objective(const PatternProblem& problem, const DualCertificate& dual);

struct AngleStructureResult {
  AngleStructure angles;
  double margin = 0.0;  // eps*: every angle >= eps* and every edge slack D - phi - phi' >= eps*
};

/// Interior angle structure with maximal uniform margin, or nullopt when the
/// space of (hyperbolic) angle structures is empty. Among maximal-margin
/// structures the smallest angle is maximized in a second LP.
std::optional<AngleStructureResult> lp_angle_structure(const PatternProblem& problem);

/// Violations of the angle-structure invariants (empty iff interior of A).
std::vector<std::string> angle_structure_violations(const PatternProblem& problem, const AngleStructure& angles,
                                                    double sum_tol = 1e-9);

}  // namespace circlepat
