#include "circlepat/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "circlepat/errors.hpp"
#include "circlepat/maxflow.hpp"
#include "circlepat/simplex.hpp"

namespace circlepat {

namespace {

constexpr double kSaturationTol = 1e-9;
constexpr double kTieTol = 1e-12;

// Neumaier compensated sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

bool ids_less(const PatternProblem& p, const std::vector<int>& a, const std::vector<int>& b) {
  auto ids = [&p](const std::vector<int>& faces) {
    std::vector<std::string> out;
    out.reserve(faces.size());
    for (const int f : faces) out.push_back(p.complex.face_id(f));
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto ia = ids(a);
  const auto ib = ids(b);
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

// Replaces `best` when `candidate` has smaller slack, or ties and sorts first.
void keep_min(const PatternProblem& p, std::optional<SubsetSlack>& best, SubsetSlack candidate) {
  if (!best || candidate.slack < best->slack - kTieTol ||
      (std::abs(candidate.slack - best->slack) <= kTieTol && ids_less(p, candidate.faces, best->faces))) {
    best = std::move(candidate);
  }
}

struct Network {
  FlowNetwork net;
  int source;
  int sink;
  int face_base;
};

// Face/edge network with face demands (1 + inflation) Phi/2. `forced_in` gets an
// infinite source arc, `forced_out` an infinite sink arc.
Network build_network(const PatternProblem& p, double inflation, int forced_in = -1, int forced_out = -1) {
  const CellComplex& cx = p.complex;
  const int n = cx.face_count();
  const int m = cx.edge_count();
  Network w{FlowNetwork(n + m + 2), 0, n + m + 1, 1};
  for (int f = 0; f < n; ++f) {
    const double cap = f == forced_in ? FlowNetwork::kInfinite : (1.0 + inflation) * 0.5 * p.cone_angles[f];
    w.net.add_arc(w.source, w.face_base + f, cap);
  }
  if (forced_out >= 0) w.net.add_arc(w.face_base + forced_out, w.sink, FlowNetwork::kInfinite);
  for (int e = 0; e < m; ++e) {
    const int edge_node = 1 + n + e;
    const int a = cx.face_of_side(CellComplex::side_of(e, 0));
    const int b = cx.face_of_side(CellComplex::side_of(e, 1));
    w.net.add_arc(w.face_base + a, edge_node, FlowNetwork::kInfinite);
    if (b != a) w.net.add_arc(w.face_base + b, edge_node, FlowNetwork::kInfinite);
    w.net.add_arc(edge_node, w.sink, p.intersection_angles[e]);
  }
  return w;
}

std::vector<int> source_faces(const Network& w, int n) {
  const auto side = w.net.source_side(w.source);
  std::vector<int> faces;
  for (int f = 0; f < n; ++f) {
    if (side[w.face_base + f]) faces.push_back(f);
  }
  return faces;
}

// min g(X) over X containing forced_in and (if given) not containing forced_out.
SubsetSlack forced_min_slack(const PatternProblem& p, int forced_in, int forced_out) {
  Network w = build_network(p, 0.0, forced_in, forced_out);
  w.net.max_flow(w.source, w.sink);
  SubsetSlack out;
  out.faces = source_faces(w, p.complex.face_count());
  out.slack = subset_slack(p, out.faces);
  return out;
}

FeasibilityStatus status_from_margin(double margin, double tol) {
  if (margin > tol) return FeasibilityStatus::Feasible;
  if (margin > 0.0) return FeasibilityStatus::BoundaryFeasible;
  return FeasibilityStatus::Infeasible;
}

DualCertificate indicator_dual(const PatternProblem& p, const std::vector<int>& faces) {
  DualCertificate d;
  d.face.assign(p.complex.face_count(), 0.0);
  d.edge.assign(p.complex.edge_count(), 0.0);
  for (const int f : faces) d.face[f] = 1.0;
  for (const int e : edge_set(p.complex, faces)) d.edge[e] = -1.0;
  return d;
}

double half_cone_sum(const PatternProblem& p, const std::vector<int>& faces) {
  CompensatedSum s;
  for (const int f : faces) s.add(0.5 * p.cone_angles[f]);
  return s.value();
}

// Largest delta with the inflated network saturated: delta* = min_X g(X) / (Phi_X/2),
// found by Dinkelbach iteration on min cuts (finite, exact up to flow tolerance).
double inflation_margin(const PatternProblem& p) {
  std::vector<int> all(p.complex.face_count());
  for (int f = 0; f < p.complex.face_count(); ++f) all[f] = f;
  double delta = subset_slack(p, all) / half_cone_sum(p, all);
  for (int iter = 0; iter < 200; ++iter) {
    const FlowCheck fc = flow_feasible(p, delta);
    if (fc.saturated || fc.mincut_faces.empty()) return delta;
    const double next = subset_slack(p, fc.mincut_faces) / half_cone_sum(p, fc.mincut_faces);
    if (next >= delta) return delta;
    delta = next;
  }
  return delta;
}

void require_checkable(const PatternProblem& p) { p.require_valid(); }

}  // namespace

std::string_view to_string(FeasibilityStatus s) {
  switch (s) {
    case FeasibilityStatus::Feasible:
      return "feasible";
    case FeasibilityStatus::BoundaryFeasible:
      return "boundary_feasible";
    case FeasibilityStatus::Infeasible:
      return "infeasible";
  }
  return "infeasible";
}

double subset_slack(const PatternProblem& problem, const std::vector<int>& faces) {
  CompensatedSum s;
  for (const int e : edge_set(problem.complex, faces)) s.add(problem.intersection_angles[e]);
  for (const int f : faces) s.add(-0.5 * problem.cone_angles[f]);
  return s.value();
}

SubsetSlack brute_force_min_slack(const PatternProblem& problem, bool include_full) {
  require_checkable(problem);
  const CellComplex& cx = problem.complex;
  const int n = cx.face_count();
  if (n > 20) throw InputError("brute_force_min_slack: " + std::to_string(n) + " faces exceeds the limit of 20");

  std::vector<std::uint32_t> edge_mask(cx.edge_count(), 0);
  for (int e = 0; e < cx.edge_count(); ++e) {
    edge_mask[e] = (1u << cx.face_of_side(CellComplex::side_of(e, 0))) |
                   (1u << cx.face_of_side(CellComplex::side_of(e, 1)));
  }
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1u);
  std::optional<SubsetSlack> best;
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    if (!include_full && mask == full) continue;
    CompensatedSum s;
    for (int e = 0; e < cx.edge_count(); ++e) {
      if (edge_mask[e] & mask) s.add(problem.intersection_angles[e]);
    }
    for (int f = 0; f < n; ++f) {
      if (mask & (1u << f)) s.add(-0.5 * problem.cone_angles[f]);
    }
    const double g = s.value();
    if (best && g > best->slack + kTieTol) continue;
    SubsetSlack candidate;
    for (int f = 0; f < n; ++f) {
      if (mask & (1u << f)) candidate.faces.push_back(f);
    }
    candidate.slack = g;
    keep_min(problem, best, std::move(candidate));
  }
  if (!best) throw InputError("brute_force_min_slack: no admissible subset");
  return *best;
}

FlowCheck flow_feasible(const PatternProblem& problem, double inflation) {
  require_checkable(problem);
  if (!(inflation >= 0.0)) throw InputError("flow_feasible: inflation must be nonnegative");
  Network w = build_network(problem, inflation);
  FlowCheck out;
  out.flow = w.net.max_flow(w.source, w.sink);
  CompensatedSum demand;
  for (const double phi : problem.cone_angles) demand.add((1.0 + inflation) * 0.5 * phi);
  out.demand = demand.value();
  out.saturated = out.flow >= out.demand - kSaturationTol;
  if (!out.saturated) out.mincut_faces = source_faces(w, problem.complex.face_count());
  return out;
}

FeasibilityReport check_hyperbolic(const PatternProblem& problem, double tol) {
  require_checkable(problem);
  FeasibilityReport report;
  report.geometry = Geometry::Hyperbolic;
  std::optional<SubsetSlack> best;
  for (int f = 0; f < problem.complex.face_count(); ++f) keep_min(problem, best, forced_min_slack(problem, f, -1));

  report.margin = best->slack;
  report.status = status_from_margin(report.margin, tol);
  report.certificate = Certificate{Certificate::Kind::Subset, best->faces, best->slack};
  if (report.status == FeasibilityStatus::Infeasible) {
    report.dual_certificate = indicator_dual(problem, best->faces);
  } else {
    report.inflation_margin = inflation_margin(problem);
  }
  return report;
}

FeasibilityReport check_euclidean(const PatternProblem& problem, double tol) {
  require_checkable(problem);
  FeasibilityReport report;
  report.geometry = Geometry::Euclidean;
  const int n = problem.complex.face_count();
  std::vector<int> all(n);
  for (int f = 0; f < n; ++f) all[f] = f;

  const double total = subset_slack(problem, all);
  if (std::abs(total) > tol) {
    report.status = FeasibilityStatus::Infeasible;
    report.margin = -std::abs(total);
    report.certificate = Certificate{Certificate::Kind::TotalMismatch, all, total};
    if (total <= 0.0) report.dual_certificate = indicator_dual(problem, all);
    return report;
  }
  if (n == 1) {
    // No nonempty proper subsets: the sum condition is the whole test.
    report.status = FeasibilityStatus::Feasible;
    report.margin = std::numeric_limits<double>::infinity();
    return report;
  }

  std::optional<SubsetSlack> best;
  for (int f_in = 0; f_in < n; ++f_in) {
    for (int f_out = 0; f_out < n; ++f_out) {
      if (f_out != f_in) keep_min(problem, best, forced_min_slack(problem, f_in, f_out));
    }
  }
  report.margin = best->slack;
  report.status = status_from_margin(report.margin, tol);
  report.certificate = Certificate{Certificate::Kind::Subset, best->faces, best->slack};
  if (report.status == FeasibilityStatus::Infeasible) report.dual_certificate = indicator_dual(problem, best->faces);
  return report;
}

FeasibilityReport check_feasibility(const PatternProblem& problem, double tol) {
  return problem.geometry == Geometry::Euclidean ? check_euclidean(problem, tol) : check_hyperbolic(problem, tol);
}

FeasibilityStatus brute_force_status(const PatternProblem& problem, double tol) {
  if (problem.geometry == Geometry::Hyperbolic) {
    return status_from_margin(brute_force_min_slack(problem, true).slack, tol);
  }
  std::vector<int> all(problem.complex.face_count());
  for (int f = 0; f < problem.complex.face_count(); ++f) all[f] = f;
  if (std::abs(subset_slack(problem, all)) > tol) return FeasibilityStatus::Infeasible;
  if (problem.complex.face_count() == 1) return FeasibilityStatus::Feasible;
  return status_from_margin(brute_force_min_slack(problem, false).slack, tol);
}

std::optional<double> dual_objective(const PatternProblem& problem, const DualCertificate& dual) {
  const CellComplex& cx = problem.complex;
  if (static_cast<int>(dual.face.size()) != cx.face_count() || static_cast<int>(dual.edge.size()) != cx.edge_count()) {
    return std::nullopt;
  }
  for (int e = 0; e < cx.edge_count(); ++e) {
    if (dual.edge[e] > 0.0) return std::nullopt;
    for (int which = 0; which < 2; ++which) {
      const int f = cx.face_of_side(CellComplex::side_of(e, which));
      if (dual.face[f] + dual.edge[e] > 0.0) return std::nullopt;
    }
  }
  CompensatedSum z;
  for (int f = 0; f < cx.face_count(); ++f) z.add(0.5 * problem.cone_angles[f] * dual.face[f]);
  for (int e = 0; e < cx.edge_count(); ++e) z.add(problem.intersection_angles[e] * dual.edge[e]);
  return z.value();
}

namespace {

struct MarginLp {
  LinearProgram lp;
  std::vector<int> side_var;
  int margin_var;
};

// Angles phi_s = x_s + base + t with x_s >= 0, t >= 0 maximised, subject to
//   x_s + x_s' + edge_coef * t <= D(e) - edge_shift
//   sum_{s in f} x_s + n_f t = Phi(f)/2 - n_f base.
MarginLp build_margin_lp(const PatternProblem& p, double edge_coef, double edge_shift, double base) {
  const CellComplex& cx = p.complex;
  MarginLp m;
  m.side_var.resize(cx.side_total());
  for (int s = 0; s < cx.side_total(); ++s) m.side_var[s] = m.lp.add_variable(0.0);
  m.margin_var = m.lp.add_variable(1.0);
  for (int e = 0; e < cx.edge_count(); ++e) {
    m.lp.add_row({{m.side_var[CellComplex::side_of(e, 0)], 1.0},
                  {m.side_var[CellComplex::side_of(e, 1)], 1.0},
                  {m.margin_var, edge_coef}},
                 LinearProgram::Sense::LessEqual, p.intersection_angles[e] - edge_shift);
  }
  for (int f = 0; f < cx.face_count(); ++f) {
    std::vector<std::pair<int, double>> terms;
    for (const int s : cx.sides_of_face(f)) terms.emplace_back(m.side_var[s], 1.0);
    const auto nf = static_cast<double>(cx.sides_of_face(f).size());
    terms.emplace_back(m.margin_var, nf);
    m.lp.add_row(std::move(terms), LinearProgram::Sense::Equal, 0.5 * p.cone_angles[f] - nf * base);
  }
  return m;
}

}  // namespace

std::optional<AngleStructureResult> lp_angle_structure(const PatternProblem& problem) {
  require_checkable(problem);
  const CellComplex& cx = problem.complex;

  // Stage 1: largest eps with phi >= eps and D - phi - phi' >= eps.
  MarginLp first = build_margin_lp(problem, 3.0, 0.0, 0.0);
  const LpResult r1 = solve_lp(first.lp);
  if (r1.status == LpStatus::Unbounded) throw NumericalError("lp_angle_structure: unbounded LP");
  if (r1.status == LpStatus::Infeasible) return std::nullopt;
  const double eps = r1.x[first.margin_var];
  if (!(eps > kDefaultFeasibilityTol)) return std::nullopt;

  AngleStructureResult out;
  out.margin = eps;
  out.angles.values.resize(cx.side_total());
  for (int s = 0; s < cx.side_total(); ++s) out.angles.values[s] = r1.x[first.side_var[s]] + eps;

  // Stage 2: keep edge slacks >= eps (minus a hair) and maximise the smallest angle.
  // Both sides of an edge carry the base, so the edge row gives up 2 held on top of its own held.
  const double held = std::max(0.0, eps - 1e-10);
  MarginLp second = build_margin_lp(problem, 2.0, 3.0 * held, held);
  const LpResult r2 = solve_lp(second.lp);
  if (r2.status == LpStatus::Optimal) {
    const double lift = held + r2.x[second.margin_var];
    for (int s = 0; s < cx.side_total(); ++s) out.angles.values[s] = r2.x[second.side_var[s]] + lift;
  }
  return out;
}

std::vector<std::string> angle_structure_violations(const PatternProblem& problem, const AngleStructure& angles,
                                                    double sum_tol) {
  const CellComplex& cx = problem.complex;
  std::vector<std::string> out;
  if (static_cast<int>(angles.size()) != cx.side_total()) {
    out.emplace_back("angle count does not match the number of edge sides");
    return out;
  }
  for (int s = 0; s < cx.side_total(); ++s) {
    if (!(angles[s] > 0.0 && angles[s] < std::numbers::pi)) {
      std::ostringstream os;
      os << "angle at side " << s << " of edge \"" << cx.edge_id(CellComplex::edge_of_side(s)) << "\" is " << angles[s]
         << ", outside (0, pi)";
      out.push_back(os.str());
    }
  }
  for (int e = 0; e < cx.edge_count(); ++e) {
    const double sum = angles[CellComplex::side_of(e, 0)] + angles[CellComplex::side_of(e, 1)];
    if (!(sum < problem.intersection_angles[e])) {
      std::ostringstream os;
      os << "edge \"" << cx.edge_id(e) << "\": side angles sum to " << sum << ", not below D = "
         << problem.intersection_angles[e];
      out.push_back(os.str());
    }
  }
  for (int f = 0; f < cx.face_count(); ++f) {
    double sum = 0.0;
    for (const int s : cx.sides_of_face(f)) sum += angles[s];
    if (std::abs(sum - 0.5 * problem.cone_angles[f]) > sum_tol) {
      std::ostringstream os;
      os << "face \"" << cx.face_id(f) << "\": angles sum to " << sum << ", expected Phi/2 = "
         << 0.5 * problem.cone_angles[f];
      out.push_back(os.str());
    }
  }
  return out;
}

}  // namespace circlepat
