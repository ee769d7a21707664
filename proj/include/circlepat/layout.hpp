#pragma once

// Per-face drawings of a solved pattern.
//
// Each face is drawn as a fan around its centre O_f at the origin. Every side of
// the face contributes the kite O_f P O_f' P' made of the triangle O_f P O_f'
// and its mirror image, spanning the angle 2 phi(f,e) at O_f. Euclidean fans live
// in the plane; hyperbolic fans in the Poincare disk.

#include <array>
#include <string>
#include <vector>

#include "json.hpp"

#include "circlepat/complex.hpp"
#include "circlepat/solver.hpp"

namespace circlepat {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// A circle in model coordinates (plane or disk).
struct ModelCircle {
  Point2 center;
  double radius = 0.0;
};

struct FanPiece {
  int side = 0;
  int edge = 0;
  int neighbor = 0;      // face across the edge
  double start = 0.0;    // polar angle of the first intersection point
  double extent = 0.0;   // 2 phi(f,e)
  Point2 first_point;    // intersection point P at angle start
  Point2 neighbor_center;
  Point2 second_point;   // mirror intersection point at angle start + extent
  ModelCircle neighbor_circle;
};

struct FaceFan {
  int face = 0;
  double radius = 0.0;
  ModelCircle circle;
  std::vector<FanPiece> pieces;
  double cone = 0.0;
  double cone_excess = 0.0;  // cone - 2 pi
};

/// The two pieces drawn for the two sides of one edge.
struct GluingEntry {
  int edge = 0;
  std::array<int, 2> face{};
  std::array<int, 2> piece{};  // index into the face's pieces
  double length = 0.0;         // |O_f O_f'|
};

struct LayoutDocument {
  Geometry geometry = Geometry::Euclidean;
  std::vector<FaceFan> fans;
  std::vector<GluingEntry> gluing;
};

/// Maps a point at distance d (plane or hyperbolic) and polar angle a to model coordinates.
Point2 model_point(Geometry g, double distance, double angle);

/// Model image of the circle of radius `radius` whose centre is at distance
/// `distance` along polar angle `angle`.
ModelCircle model_circle(Geometry g, double distance, double angle, double radius);

LayoutDocument export_layout(const PatternProblem& problem, const SolveReport& report);

nlohmann::ordered_json layout_to_json(const PatternProblem& problem, const LayoutDocument& layout);

/// SVG 1.1 drawing of every fan; byte-identical for identical input.
std::string render_svg(const PatternProblem& problem, const LayoutDocument& layout);

}  // namespace circlepat
