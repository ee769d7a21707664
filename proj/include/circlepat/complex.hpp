#pragma once

// Combinatorial model of a closed cell-decomposed surface and the forward map
// from face radii to per-side angles and cone angles.
//
// Every edge has two sides. Side indices are dense: side 2*e is side_a of edge
// e and side 2*e+1 is side_b. A side belongs to exactly one face; both sides of
// an edge may belong to the same face (a "nonstandard" loop edge).

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace circlepat {

enum class Geometry { Euclidean, Hyperbolic };

std::string_view to_string(Geometry g);
Geometry geometry_from_string(std::string_view s);

struct FaceRecord {
  std::string id;
  std::optional<int> side_count;  // n_f; derived from incidences when absent
};

struct EdgeRecord {
  std::string id;
  std::string side_a;
  std::string side_b;
  std::optional<std::array<std::string, 2>> endpoints;
};

class CellComplex {
 public:
  CellComplex() = default;
  CellComplex(std::vector<FaceRecord> faces, std::vector<EdgeRecord> edges,
              std::vector<std::string> vertices = {});

  int face_count() const { return static_cast<int>(faces_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int side_total() const { return 2 * edge_count(); }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }

  const std::string& face_id(int f) const { return faces_[f].id; }
  const std::string& edge_id(int e) const { return edges_[e].id; }
  const std::string& vertex_id(int v) const { return vertices_[v]; }

  std::optional<int> find_face(std::string_view id) const;
  std::optional<int> find_edge(std::string_view id) const;

  static constexpr int side_of(int edge, int which) { return 2 * edge + which; }
  static constexpr int edge_of_side(int side) { return side / 2; }
  static constexpr int opposite_side(int side) { return side ^ 1; }

  /// Face owning a side; -1 when the side names an unknown face.
  int face_of_side(int side) const { return side_face_[side]; }
  std::span<const int> sides_of_face(int f) const { return face_sides_[f]; }

  /// n_f: declared side count, or the incidence count when undeclared.
  int side_count(int f) const;

  /// True when every edge carries endpoints.
  bool has_vertices() const;
  std::array<int, 2> endpoints(int e) const { return edge_endpoints_[e]; }

  /// Every invariant violation; empty iff the complex is valid.
  std::vector<std::string> validate() const;
  /// Remarks that do not invalidate the complex (loop edges).
  std::vector<std::string> notes() const;
  void require_valid() const;

  const std::vector<FaceRecord>& face_records() const { return faces_; }
  const std::vector<EdgeRecord>& edge_records() const { return edges_; }
  const std::vector<std::string>& vertex_ids() const { return vertices_; }

 private:
  std::vector<FaceRecord> faces_;
  std::vector<EdgeRecord> edges_;
  std::vector<std::string> vertices_;
  bool vertices_declared_ = false;

  std::unordered_map<std::string, int> face_index_;
  std::unordered_map<std::string, int> edge_index_;
  std::unordered_map<std::string, int> vertex_index_;
  std::vector<int> side_face_;
  std::vector<std::vector<int>> face_sides_;
  std::vector<std::array<int, 2>> edge_endpoints_;
};

struct PatternProblem {
  CellComplex complex;
  Geometry geometry = Geometry::Euclidean;
  std::vector<double> intersection_angles;  // D, per edge, radians
  std::vector<double> cone_angles;          // Phi, per face, radians
  std::string name;
  std::string description;

  /// Apex angle pi - D(e) of the triangle O_f P O_f'.
  double apex_angle(int e) const;

  std::vector<std::string> validate() const;
  void require_valid() const;
};

struct RadiusAssignment {
  std::vector<double> values;  // per face

  double operator[](int f) const { return values[f]; }
  std::size_t size() const { return values.size(); }
};

/// Angle phi(f,e) per edge side, indexed like CellComplex sides.
struct AngleStructure {
  std::vector<double> values;

  double operator[](int side) const { return values[side]; }
  std::size_t size() const { return values.size(); }
};

struct ForwardMapResult {
  AngleStructure angles;
  std::vector<double> cone;       // per face
  std::vector<double> edge_length;  // |O_f O_f'| per edge
};

/// Edges with at least one side in the face set, ascending and without repeats.
std::vector<int> edge_set(const CellComplex& complex, std::span<const int> faces);
std::vector<int> edge_set(const CellComplex& complex, std::span<const std::string> face_ids);

ForwardMapResult forward_map(const PatternProblem& problem, const RadiusAssignment& radii);

/// Sum of (pi - D(e)) over edge-endpoint incidences at each vertex.
std::vector<double> vertex_cone_angles(const PatternProblem& problem);

}  // namespace circlepat
