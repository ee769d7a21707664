#include "circlepat/layout.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "circlepat/errors.hpp"

namespace circlepat {

using nlohmann::ordered_json;
using std::numbers::pi;

namespace {

const double kInsideDisk = std::nextafter(1.0, 0.0);

double disk_radius(double distance) { return std::min(std::tanh(0.5 * distance), kInsideDisk); }

ordered_json point_json(const Point2& p) { return ordered_json::array({p.x, p.y}); }

ordered_json circle_json(const ModelCircle& c) {
  return {{"center", point_json(c.center)}, {"radius", c.radius}};
}

std::string fmt(double v) {
  if (std::abs(v) < 5e-7) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (const char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      case '\'':
        out += "&apos;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

// Model to SVG user coordinates for one panel.
struct Frame {
  double cx;
  double cy;
  double scale;
  Point2 map(const Point2& p) const { return {cx + scale * p.x, cy - scale * p.y}; }
};

std::string xy(const Point2& p) { return fmt(p.x) + " " + fmt(p.y); }

// Path command continuing from p to q along the disk geodesic through them.
std::string geodesic_to(const Frame& fr, const Point2& p, const Point2& q) {
  const Point2 sp = fr.map(p);
  const Point2 sq = fr.map(q);
  const double np = p.x * p.x + p.y * p.y;
  const double nq = q.x * q.x + q.y * q.y;
  const Point2& far = np >= nq ? p : q;
  const double nf = std::max(np, nq);
  const double cross = p.x * q.y - p.y * q.x;
  if (nf < 1e-18 || std::abs(cross) < 1e-12) return "L " + xy(sq);
  // The geodesic circle also passes through the inverse image of either point.
  const Point2 inv = fr.map({far.x / nf, far.y / nf});
  const double d = 2.0 * (sp.x * (sq.y - inv.y) + sq.x * (inv.y - sp.y) + inv.x * (sp.y - sq.y));
  if (std::abs(d) < 1e-12) return "L " + xy(sq);
  const double a2 = sp.x * sp.x + sp.y * sp.y;
  const double b2 = sq.x * sq.x + sq.y * sq.y;
  const double c2 = inv.x * inv.x + inv.y * inv.y;
  const Point2 c{(a2 * (sq.y - inv.y) + b2 * (inv.y - sp.y) + c2 * (sp.y - sq.y)) / d,
                 (a2 * (inv.x - sq.x) + b2 * (sp.x - inv.x) + c2 * (sq.x - sp.x)) / d};
  const double r = std::hypot(sp.x - c.x, sp.y - c.y);
  if (!std::isfinite(r) || r > 1e7) return "L " + xy(sq);
  const double turn = (sp.x - c.x) * (sq.y - c.y) - (sp.y - c.y) * (sq.x - c.x);
  return "A " + fmt(r) + " " + fmt(r) + " 0 0 " + (turn > 0.0 ? "1 " : "0 ") + xy(sq);
}

}  // namespace

Point2 model_point(Geometry g, double distance, double angle) {
  const double rho = g == Geometry::Hyperbolic ? disk_radius(distance) : distance;
  return {rho * std::cos(angle), rho * std::sin(angle)};
}

ModelCircle model_circle(Geometry g, double distance, double angle, double radius) {
  if (g == Geometry::Euclidean) return {model_point(g, distance, angle), radius};
  // Ends of the diameter on the ray through the centre; tanh is odd, so a near
  // end behind the origin comes out negative.
  const double near = std::tanh(0.5 * (distance - radius));
  const double far = std::min(std::tanh(0.5 * (distance + radius)), kInsideDisk);
  const double mid = 0.5 * (near + far);
  return {{mid * std::cos(angle), mid * std::sin(angle)}, 0.5 * (far - near)};
}

LayoutDocument export_layout(const PatternProblem& problem, const SolveReport& report) {
  const CellComplex& cx = problem.complex;
  const Geometry g = problem.geometry;
  if (static_cast<int>(report.radii.size()) != cx.face_count() ||
      static_cast<int>(report.angles.size()) != cx.side_total() ||
      static_cast<int>(report.edge_lengths.size()) != cx.edge_count()) {
    throw InputError("export_layout: solution does not match the instance");
  }
  LayoutDocument doc;
  doc.geometry = g;
  std::vector<std::array<int, 2>> where(cx.side_total(), {-1, -1});
  for (int f = 0; f < cx.face_count(); ++f) {
    FaceFan fan;
    fan.face = f;
    fan.radius = report.radii[f];
    fan.circle = model_circle(g, 0.0, 0.0, fan.radius);
    double start = 0.0;
    for (const int s : cx.sides_of_face(f)) {
      const int e = CellComplex::edge_of_side(s);
      const double phi = report.angles[s];
      FanPiece piece;
      piece.side = s;
      piece.edge = e;
      piece.neighbor = cx.face_of_side(CellComplex::opposite_side(s));
      piece.start = start;
      piece.extent = 2.0 * phi;
      piece.first_point = model_point(g, fan.radius, start);
      piece.neighbor_center = model_point(g, report.edge_lengths[e], start + phi);
      piece.second_point = model_point(g, fan.radius, start + 2.0 * phi);
      piece.neighbor_circle = model_circle(g, report.edge_lengths[e], start + phi, report.radii[piece.neighbor]);
      where[s] = {f, static_cast<int>(fan.pieces.size())};
      fan.pieces.push_back(piece);
      start += 2.0 * phi;
    }
    fan.cone = start;
    fan.cone_excess = start - 2.0 * pi;
    doc.fans.push_back(std::move(fan));
  }
  for (int e = 0; e < cx.edge_count(); ++e) {
    const auto a = where[CellComplex::side_of(e, 0)];
    const auto b = where[CellComplex::side_of(e, 1)];
    doc.gluing.push_back({e, {a[0], b[0]}, {a[1], b[1]}, report.edge_lengths[e]});
  }
  return doc;
}

ordered_json layout_to_json(const PatternProblem& problem, const LayoutDocument& layout) {
  const CellComplex& cx = problem.complex;
  ordered_json doc;
  doc["geometry"] = std::string(to_string(layout.geometry));
  doc["model"] = layout.geometry == Geometry::Hyperbolic ? "poincare_disk" : "plane";
  doc["faces"] = ordered_json::array();
  for (const FaceFan& fan : layout.fans) {
    ordered_json pieces = ordered_json::array();
    for (const FanPiece& p : fan.pieces) {
      pieces.push_back({{"edge", cx.edge_id(p.edge)},
                        {"side", p.side % 2 == 0 ? "a" : "b"},
                        {"neighbor", cx.face_id(p.neighbor)},
                        {"start", p.start},
                        {"extent", p.extent},
                        {"points",
                         {{"center", point_json({0.0, 0.0})},
                          {"first", point_json(p.first_point)},
                          {"neighbor_center", point_json(p.neighbor_center)},
                          {"second", point_json(p.second_point)}}},
                        {"neighbor_circle", circle_json(p.neighbor_circle)}});
    }
    doc["faces"].push_back({{"id", cx.face_id(fan.face)},
                            {"radius", fan.radius},
                            {"circle", circle_json(fan.circle)},
                            {"cone", fan.cone},
                            {"cone_excess", fan.cone_excess},
                            {"pieces", std::move(pieces)}});
  }
  doc["gluing"] = ordered_json::array();
  for (const GluingEntry& gl : layout.gluing) {
    doc["gluing"].push_back({{"edge", cx.edge_id(gl.edge)},
                             {"sides",
                              {{{"face", cx.face_id(gl.face[0])}, {"piece", gl.piece[0]}},
                               {{"face", cx.face_id(gl.face[1])}, {"piece", gl.piece[1]}}}},
                             {"length", gl.length}});
  }
  return doc;
}

std::string render_svg(const PatternProblem& problem, const LayoutDocument& layout) {
  const CellComplex& cx = problem.complex;
  const bool hyperbolic = layout.geometry == Geometry::Hyperbolic;
  constexpr double kPanelW = 260.0;
  constexpr double kPanelH = 290.0;
  constexpr double kViewRadius = 110.0;
  const int n = static_cast<int>(layout.fans.size());
  const int cols = std::max(1, std::min(n, 4));
  const int rows = std::max(1, (n + cols - 1) / cols);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(cols * kPanelW) << "\" height=\""
     << fmt(rows * kPanelH) << "\" viewBox=\"0 0 " << fmt(cols * kPanelW) << " " << fmt(rows * kPanelH) << "\">\n"
     << "<defs>\n<style type=\"text/css\"><![CDATA[\n"
     << ".panel{fill:#ffffff;stroke:#cccccc;stroke-width:1}\n"
     << ".disk{fill:#f4f6fb;stroke:#555555;stroke-width:1}\n"
     << ".kite0{fill:#cfe3f7;stroke:#2b5b84;stroke-width:0.8}\n"
     << ".kite1{fill:#f7e3c8;stroke:#84552b;stroke-width:0.8}\n"
     << ".own{fill:none;stroke:#c0392b;stroke-width:1.6}\n"
     << ".other{fill:none;stroke:#7f8c8d;stroke-width:0.6;stroke-dasharray:3 2}\n"
     << ".label{font-family:sans-serif;font-size:9px;fill:#222222;text-anchor:middle}\n"
     << ".title{font-family:sans-serif;font-size:11px;fill:#000000}\n"
     << "]]></style>\n";
  for (int k = 0; k < n; ++k) {
    os << "<clipPath id=\"clip" << k << "\"><rect x=\"" << fmt(2.0) << "\" y=\"" << fmt(32.0) << "\" width=\""
       << fmt(kPanelW - 4.0) << "\" height=\"" << fmt(kPanelH - 34.0) << "\"/></clipPath>\n";
  }
  os << "</defs>\n";

  for (int k = 0; k < n; ++k) {
    const FaceFan& fan = layout.fans[k];
    // Zoom to the drawn content; a hyperbolic panel never shows more than the disk.
    double extent = fan.circle.radius;
    for (const FanPiece& p : fan.pieces) {
      const double reach = hyperbolic ? std::hypot(p.neighbor_circle.center.x, p.neighbor_circle.center.y) +
                                            p.neighbor_circle.radius
                                      : std::hypot(p.neighbor_center.x, p.neighbor_center.y);
      extent = std::max(extent, reach);
    }
    const double scale = hyperbolic ? kViewRadius / std::min(1.0, 1.05 * extent) : kViewRadius / extent;
    const Frame fr{0.5 * kPanelW, 32.0 + 0.5 * (kPanelH - 32.0), scale};
    const double ox = (k % cols) * kPanelW;
    const double oy = (k / cols) * kPanelH;

    os << "<g transform=\"translate(" << fmt(ox) << " " << fmt(oy) << ")\">\n";
    os << "<rect class=\"panel\" x=\"0.000000\" y=\"0.000000\" width=\"" << fmt(kPanelW) << "\" height=\""
       << fmt(kPanelH) << "\"/>\n";
    os << "<text class=\"title\" x=\"8.000000\" y=\"14.000000\">face " << xml_escape(cx.face_id(fan.face))
       << "  r = " << fmt(fan.radius) << "</text>\n";
    os << "<text class=\"title\" x=\"8.000000\" y=\"27.000000\">cone " << fmt(fan.cone) << "  cone - 2pi = "
       << fmt(fan.cone_excess) << "</text>\n";
    os << "<g clip-path=\"url(#clip" << k << ")\">\n";
    if (hyperbolic) {
      os << "<circle class=\"disk\" cx=\"" << fmt(fr.cx) << "\" cy=\"" << fmt(fr.cy) << "\" r=\"" << fmt(scale)
         << "\"/>\n";
    }
    for (std::size_t i = 0; i < fan.pieces.size(); ++i) {
      const FanPiece& p = fan.pieces[i];
      const Point2 o = fr.map({0.0, 0.0});
      os << "<path class=\"kite" << (i % 2) << "\" d=\"M " << xy(o) << " L " << xy(fr.map(p.first_point)) << " ";
      if (hyperbolic) {
        os << geodesic_to(fr, p.first_point, p.neighbor_center) << " "
           << geodesic_to(fr, p.neighbor_center, p.second_point);
      } else {
        os << "L " << xy(fr.map(p.neighbor_center)) << " L " << xy(fr.map(p.second_point));
      }
      os << " Z\"/>\n";
    }
    for (const FanPiece& p : fan.pieces) {
      const Point2 c = fr.map(p.neighbor_circle.center);
      os << "<circle class=\"other\" cx=\"" << fmt(c.x) << "\" cy=\"" << fmt(c.y) << "\" r=\""
         << fmt(scale * p.neighbor_circle.radius) << "\"/>\n";
    }
    const Point2 c = fr.map(fan.circle.center);
    os << "<circle class=\"own\" cx=\"" << fmt(c.x) << "\" cy=\"" << fmt(c.y) << "\" r=\""
       << fmt(scale * fan.circle.radius) << "\"/>\n";
    for (const FanPiece& p : fan.pieces) {
      const Point2 at = fr.map(p.neighbor_center);
      os << "<text class=\"label\" x=\"" << fmt(at.x) << "\" y=\"" << fmt(at.y) << "\">"
         << xml_escape(cx.edge_id(p.edge)) << (p.side % 2 == 0 ? ":a" : ":b") << "</text>\n";
    }
    os << "</g>\n</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace circlepat
