#include "circlepat/catalog.hpp"

#include <array>
#include <string>

#include "circlepat/errors.hpp"

namespace circlepat::catalog {

namespace {

std::string tag(const char* prefix, int i, int j) {
  return std::string(prefix) + "_" + std::to_string(i) + "_" + std::to_string(j);
}

}  // namespace

CellComplex torus_grid(int n) {
  if (n < 1) throw InputError("torus_grid: n must be at least 1");
  auto wrap = [n](int k) { return ((k % n) + n) % n; };
  std::vector<FaceRecord> faces;
  std::vector<std::string> vertices;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      faces.push_back({tag("f", i, j), std::nullopt});
      vertices.push_back(tag("v", i, j));
    }
  }
  std::vector<EdgeRecord> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // Face f_i_j occupies [i, i+1] x [j, j+1].
      edges.push_back({tag("ev", i, j), tag("f", wrap(i - 1), j), tag("f", i, j),
                       std::array<std::string, 2>{tag("v", i, j), tag("v", i, wrap(j + 1))}});
      edges.push_back({tag("eh", i, j), tag("f", i, wrap(j - 1)), tag("f", i, j),
                       std::array<std::string, 2>{tag("v", i, j), tag("v", wrap(i + 1), j)}});
    }
  }
  return CellComplex(std::move(faces), std::move(edges), std::move(vertices));
}

CellComplex genus2_octagon_fan() {
  std::vector<FaceRecord> faces;
  for (int k = 0; k < 8; ++k) faces.push_back({"t" + std::to_string(k), std::nullopt});
  std::vector<EdgeRecord> edges;
  for (int k = 0; k < 8; ++k) {
    // Spoke s_k runs from the centre to corner k, between t_{k-1} and t_k.
    edges.push_back({"s" + std::to_string(k), "t" + std::to_string((k + 7) % 8), "t" + std::to_string(k),
                     std::array<std::string, 2>{"c", "p"}});
  }
  // Octagon side k belongs to t_k; sides 0/2, 1/3, 4/6, 5/7 are glued.
  const std::array<std::array<int, 2>, 4> pairs{{{0, 2}, {1, 3}, {4, 6}, {5, 7}}};
  const char* names[4] = {"a", "b", "c", "d"};
  for (int k = 0; k < 4; ++k) {
    edges.push_back({names[k], "t" + std::to_string(pairs[k][0]), "t" + std::to_string(pairs[k][1]),
                     std::array<std::string, 2>{"p", "p"}});
  }
  return CellComplex(std::move(faces), std::move(edges), {"c", "p"});
}

CellComplex genus2_octagon() {
  std::vector<EdgeRecord> edges;
  for (const char* name : {"a", "b", "c", "d"}) {
    edges.push_back({name, "o", "o", std::array<std::string, 2>{"p", "p"}});
  }
  return CellComplex({{"o", std::nullopt}}, std::move(edges), {"p"});
}

PatternProblem uniform_problem(CellComplex complex, Geometry g, double intersection, double cone) {
  PatternProblem p;
  p.geometry = g;
  p.intersection_angles.assign(complex.edge_count(), intersection);
  p.cone_angles.assign(complex.face_count(), cone);
  p.complex = std::move(complex);
  return p;
}

}  // namespace circlepat::catalog
