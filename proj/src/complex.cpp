#include "circlepat/complex.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "circlepat/errors.hpp"
#include "circlepat/triangle.hpp"

namespace circlepat {

using std::numbers::pi;

std::string_view to_string(Geometry g) { return g == Geometry::Euclidean ? "euclidean" : "hyperbolic"; }

Geometry geometry_from_string(std::string_view s) {
  if (s == "euclidean") return Geometry::Euclidean;
  if (s == "hyperbolic") return Geometry::Hyperbolic;
  throw InputError("geometry must be \"euclidean\" or \"hyperbolic\", got \"" + std::string(s) + "\"");
}

CellComplex::CellComplex(std::vector<FaceRecord> faces, std::vector<EdgeRecord> edges,
                         std::vector<std::string> vertices)
    : faces_(std::move(faces)), edges_(std::move(edges)), vertices_(std::move(vertices)) {
  vertices_declared_ = !vertices_.empty();
  for (int f = 0; f < face_count(); ++f) face_index_.emplace(faces_[f].id, f);
  for (int e = 0; e < edge_count(); ++e) edge_index_.emplace(edges_[e].id, e);

  // Undeclared vertices are collected from edge endpoints in order of appearance.
  if (!vertices_declared_) {
    for (const auto& edge : edges_) {
      if (!edge.endpoints) continue;
      for (const auto& v : *edge.endpoints) {
        if (vertex_index_.emplace(v, static_cast<int>(vertices_.size())).second) vertices_.push_back(v);
      }
    }
  } else {
    for (int v = 0; v < vertex_count(); ++v) vertex_index_.emplace(vertices_[v], v);
  }

  side_face_.assign(side_total(), -1);
  face_sides_.assign(faces_.size(), {});
  edge_endpoints_.assign(edges_.size(), {-1, -1});
  for (int e = 0; e < edge_count(); ++e) {
    const std::string* names[2] = {&edges_[e].side_a, &edges_[e].side_b};
    for (int which = 0; which < 2; ++which) {
      const auto it = face_index_.find(*names[which]);
      if (it == face_index_.end()) continue;
      side_face_[side_of(e, which)] = it->second;
      face_sides_[it->second].push_back(side_of(e, which));
    }
    if (edges_[e].endpoints) {
      for (int k = 0; k < 2; ++k) {
        const auto it = vertex_index_.find((*edges_[e].endpoints)[k]);
        if (it != vertex_index_.end()) edge_endpoints_[e][k] = it->second;
      }
    }
  }
}

std::optional<int> CellComplex::find_face(std::string_view id) const {
  const auto it = face_index_.find(std::string(id));
  if (it == face_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> CellComplex::find_edge(std::string_view id) const {
  const auto it = edge_index_.find(std::string(id));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

int CellComplex::side_count(int f) const {
  return faces_[f].side_count.value_or(static_cast<int>(face_sides_[f].size()));
}

bool CellComplex::has_vertices() const {
  if (edges_.empty()) return false;
  return std::all_of(edge_endpoints_.begin(), edge_endpoints_.end(),
                     [](const auto& ends) { return ends[0] >= 0 && ends[1] >= 0; });
}

std::vector<std::string> CellComplex::validate() const {
  std::vector<std::string> out;
  if (faces_.empty()) out.emplace_back("complex has no faces");

  auto check_duplicates = [&out](const auto& items, auto id_of, const char* what) {
    std::set<std::string> seen;
    for (const auto& item : items) {
      const std::string& id = id_of(item);
      if (!seen.insert(id).second) out.push_back(std::string("duplicate ") + what + " id \"" + id + "\"");
    }
  };
  check_duplicates(faces_, [](const FaceRecord& f) -> const std::string& { return f.id; }, "face");
  check_duplicates(edges_, [](const EdgeRecord& e) -> const std::string& { return e.id; }, "edge");
  if (vertices_declared_) {
    check_duplicates(vertices_, [](const std::string& v) -> const std::string& { return v; }, "vertex");
  }

  bool sides_resolved = true;
  for (int e = 0; e < edge_count(); ++e) {
    const std::string* names[2] = {&edges_[e].side_a, &edges_[e].side_b};
    for (int which = 0; which < 2; ++which) {
      if (side_face_[side_of(e, which)] < 0) {
        sides_resolved = false;
        out.push_back("edge \"" + edges_[e].id + "\" side_" + (which == 0 ? "a" : "b") + " names unknown face \"" +
                      *names[which] + "\"");
      }
    }
    if (edges_[e].endpoints) {
      for (int k = 0; k < 2; ++k) {
        if (edge_endpoints_[e][k] < 0) {
          out.push_back("edge \"" + edges_[e].id + "\" endpoint names unknown vertex \"" +
                        (*edges_[e].endpoints)[k] + "\"");
        }
      }
    }
  }

  long long total = 0;
  for (int f = 0; f < face_count(); ++f) {
    const int incidences = static_cast<int>(face_sides_[f].size());
    const int n = side_count(f);
    total += n;
    if (n < 1) out.push_back("face \"" + faces_[f].id + "\" has side count " + std::to_string(n) + " < 1");
    if (incidences == 0 && sides_resolved) {
      out.push_back("face \"" + faces_[f].id + "\" is not referenced by any edge side");
    }
    if (faces_[f].side_count && *faces_[f].side_count != incidences && sides_resolved) {
      out.push_back("face \"" + faces_[f].id + "\" declares " + std::to_string(*faces_[f].side_count) +
                    " sides but has " + std::to_string(incidences) + " edge incidences");
    }
  }
  if (sides_resolved && total != 2LL * edge_count()) {
    out.push_back("handshake violated: sum of face side counts is " + std::to_string(total) + " but 2*|edges| is " +
                  std::to_string(2 * edge_count()));
  }

  bool any_endpoints = false;
  bool all_endpoints = true;
  for (const auto& edge : edges_) {
    any_endpoints = any_endpoints || edge.endpoints.has_value();
    all_endpoints = all_endpoints && edge.endpoints.has_value();
  }
  if (any_endpoints && !all_endpoints) out.emplace_back("endpoints given for some edges but not all");
  return out;
}

std::vector<std::string> CellComplex::notes() const {
  std::vector<std::string> out;
  for (int e = 0; e < edge_count(); ++e) {
    const int a = side_face_[side_of(e, 0)];
    if (a >= 0 && a == side_face_[side_of(e, 1)]) {
      out.push_back("nonstandard: edge \"" + edges_[e].id + "\" has both sides on face \"" + faces_[a].id + "\"");
    }
  }
  return out;
}

void CellComplex::require_valid() const {
  auto violations = validate();
  if (!violations.empty()) throw InputError(std::move(violations));
}

double PatternProblem::apex_angle(int e) const { return pi - intersection_angles[e]; }

std::vector<std::string> PatternProblem::validate() const {
  std::vector<std::string> out = complex.validate();
  if (static_cast<int>(intersection_angles.size()) != complex.edge_count()) {
    out.push_back("expected " + std::to_string(complex.edge_count()) + " intersection angles, got " +
                  std::to_string(intersection_angles.size()));
  } else {
    for (int e = 0; e < complex.edge_count(); ++e) {
      const double d = intersection_angles[e];
      if (!(d > 0.0 && d < pi)) {
        std::ostringstream os;
        os << "edge \"" << complex.edge_id(e) << "\": D out of (0,pi): " << d;
        out.push_back(os.str());
      }
    }
  }
  if (static_cast<int>(cone_angles.size()) != complex.face_count()) {
    out.push_back("expected " + std::to_string(complex.face_count()) + " cone angles, got " +
                  std::to_string(cone_angles.size()));
  } else {
    for (int f = 0; f < complex.face_count(); ++f) {
      const double phi = cone_angles[f];
      if (!(phi > 0.0) || !std::isfinite(phi)) {
        std::ostringstream os;
        os << "face \"" << complex.face_id(f) << "\": cone angle must be positive, got " << phi;
        out.push_back(os.str());
      }
    }
  }
  return out;
}

void PatternProblem::require_valid() const {
  auto violations = validate();
  if (!violations.empty()) throw InputError(std::move(violations));
}

std::vector<int> edge_set(const CellComplex& complex, std::span<const int> faces) {
  std::vector<char> in_set(complex.face_count(), 0);
  for (const int f : faces) {
    if (f < 0 || f >= complex.face_count()) throw InputError("edge_set: unknown face index " + std::to_string(f));
    in_set[f] = 1;
  }
  std::vector<int> out;
  for (int e = 0; e < complex.edge_count(); ++e) {
    const int a = complex.face_of_side(CellComplex::side_of(e, 0));
    const int b = complex.face_of_side(CellComplex::side_of(e, 1));
    if ((a >= 0 && in_set[a]) || (b >= 0 && in_set[b])) out.push_back(e);
  }
  return out;
}

std::vector<int> edge_set(const CellComplex& complex, std::span<const std::string> face_ids) {
  std::vector<int> faces;
  faces.reserve(face_ids.size());
  for (const auto& id : face_ids) {
    const auto f = complex.find_face(id);
    if (!f) throw InputError("edge_set: unknown face id \"" + id + "\"");
    faces.push_back(*f);
  }
  return edge_set(complex, faces);
}

ForwardMapResult forward_map(const PatternProblem& problem, const RadiusAssignment& radii) {
  const CellComplex& cx = problem.complex;
  if (static_cast<int>(radii.size()) != cx.face_count()) {
    throw InputError("forward_map: expected " + std::to_string(cx.face_count()) + " radii");
  }
  for (int f = 0; f < cx.face_count(); ++f) {
    if (!(radii[f] > 0.0) || !std::isfinite(radii[f])) {
      throw InputError("forward_map: radius of face \"" + cx.face_id(f) + "\" must be positive and finite");
    }
  }
  ForwardMapResult out;
  out.angles.values.assign(cx.side_total(), 0.0);
  out.cone.assign(cx.face_count(), 0.0);
  out.edge_length.assign(cx.edge_count(), 0.0);
  for (int e = 0; e < cx.edge_count(); ++e) {
    const int sa = CellComplex::side_of(e, 0);
    const int sb = CellComplex::side_of(e, 1);
    const int fa = cx.face_of_side(sa);
    const int fb = cx.face_of_side(sb);
    if (fa < 0 || fb < 0) throw InputError("forward_map: edge \"" + cx.edge_id(e) + "\" has an unresolved side");
    const ApexTriangle t = apex_triangle(problem.geometry, radii[fa], radii[fb], problem.apex_angle(e));
    // The angle at O_fa is opposite r(fb).
    out.angles.values[sa] = t.phi2;
    out.angles.values[sb] = t.phi1;
    out.cone[fa] += 2.0 * t.phi2;
    out.cone[fb] += 2.0 * t.phi1;
    out.edge_length[e] = t.length;
  }
  return out;
}

std::vector<double> vertex_cone_angles(const PatternProblem& problem) {
  const CellComplex& cx = problem.complex;
  if (!cx.has_vertices()) throw UnsupportedError("vertex_cone_angles: complex carries no edge endpoints");
  std::vector<double> out(cx.vertex_count(), 0.0);
  for (int e = 0; e < cx.edge_count(); ++e) {
    for (const int v : cx.endpoints(e)) out[v] += pi - problem.intersection_angles[e];
  }
  return out;
}

}  // namespace circlepat
