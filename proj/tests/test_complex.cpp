#include "doctest.h"

#include <cmath>
#include <numbers>

#include "circlepat/catalog.hpp"
#include "circlepat/complex.hpp"
#include "circlepat/errors.hpp"
#include "oracles.hpp"

using namespace circlepat;
using std::numbers::pi;

namespace {

// Two faces glued along three edges: a theta graph dual, sphere-like but fine combinatorially.
CellComplex two_face_complex() {
  return CellComplex({{"A", {}}, {"B", {}}}, {{"e0", "A", "B", {}}, {"e1", "A", "B", {}}, {"e2", "A", "B", {}}});
}

RadiusAssignment random_radii(std::mt19937_64& g, int n, double lo, double hi) {
  RadiusAssignment r;
  for (int i = 0; i < n; ++i) r.values.push_back(oracle::uniform(g, lo, hi));
  return r;
}

}  // namespace

TEST_CASE("torus grid validates cleanly") {
  for (int n : {2, 3, 4}) {
    const CellComplex c = catalog::torus_grid(n);
    CHECK(c.face_count() == n * n);
    CHECK(c.edge_count() == 2 * n * n);
    CHECK(c.vertex_count() == n * n);
    CHECK(c.validate().empty());
    CHECK(c.notes().empty());
    for (int f = 0; f < c.face_count(); ++f) CHECK(c.side_count(f) == 4);
  }
}

TEST_CASE("an edge naming a missing face gives exactly one violation") {
  const CellComplex c({{"A", {}}, {"B", {}}}, {{"e0", "A", "B", {}}, {"e1", "A", "Z", {}}, {"e2", "B", "B", {}}});
  const auto v = c.validate();
  REQUIRE(v.size() == 1);
  CHECK(v[0].find("unknown face \"Z\"") != std::string::npos);
  CHECK_THROWS_AS(c.require_valid(), InputError);
}

TEST_CASE("declared side counts that break the handshake are reported") {
  // Sum of declared n_f is 17 while the 2x2 torus has 8 edges.
  CellComplex grid = catalog::torus_grid(2);
  std::vector<FaceRecord> faces = grid.face_records();
  faces[0].side_count = 5;
  faces[1].side_count = 4;
  faces[2].side_count = 4;
  faces[3].side_count = 4;
  const CellComplex c(faces, grid.edge_records(), grid.vertex_ids());
  bool handshake = false;
  for (const auto& s : c.validate()) handshake = handshake || s.find("handshake") != std::string::npos;
  CHECK(handshake);
}

TEST_CASE("duplicate ids and unreferenced faces are violations") {
  const CellComplex dup({{"A", {}}, {"A", {}}}, {{"e0", "A", "A", {}}});
  CHECK_FALSE(dup.validate().empty());
  const CellComplex lonely({{"A", {}}, {"B", {}}}, {{"e0", "A", "A", {}}});
  bool found = false;
  for (const auto& s : lonely.validate()) found = found || s.find("\"B\" is not referenced") != std::string::npos;
  CHECK(found);
}

TEST_CASE("loop edges are valid but noted as nonstandard") {
  const CellComplex oct = catalog::genus2_octagon();
  CHECK(oct.validate().empty());
  CHECK(oct.notes().size() == 4);
  CHECK(oct.notes()[0].rfind("nonstandard", 0) == 0);
  CHECK(oct.side_count(0) == 8);
}

TEST_CASE("edge_set definitional cases and monotonicity") {
  const CellComplex c = catalog::torus_grid(2);
  std::vector<int> all{0, 1, 2, 3};
  CHECK(edge_set(c, std::span<const int>(all)).size() == 8);
  CHECK(edge_set(c, std::span<const int>()).empty());
  const std::vector<std::string> one{"f_0_0"};
  CHECK(edge_set(c, std::span<const std::string>(one)).size() == 4);
  const std::vector<std::string> bad{"nope"};
  CHECK_THROWS_AS(edge_set(c, std::span<const std::string>(bad)), InputError);

  const CellComplex fan = catalog::genus2_octagon_fan();
  for (std::uint32_t x = 1; x < 256; ++x) {
    std::vector<int> xs;
    for (int f = 0; f < 8; ++f)
      if (x & (1u << f)) xs.push_back(f);
    const auto ex = edge_set(fan, std::span<const int>(xs));
    for (int f = 0; f < 8; ++f) {
      if (x & (1u << f)) continue;
      auto ys = xs;
      ys.push_back(f);
      std::sort(ys.begin(), ys.end());
      const auto ey = edge_set(fan, std::span<const int>(ys));
      CHECK(std::includes(ey.begin(), ey.end(), ex.begin(), ex.end()));
    }
  }
}

TEST_CASE("forward map on the flat and hyperbolic 2x2 torus") {
  PatternProblem p = catalog::uniform_problem(catalog::torus_grid(2), Geometry::Euclidean, pi / 2, 2 * pi);
  auto res = forward_map(p, RadiusAssignment{{0.25, 0.25, 0.25, 0.25}});
  for (double phi : res.angles.values) CHECK(phi == doctest::Approx(pi / 4).epsilon(1e-15));
  for (double c : res.cone) CHECK(c == doctest::Approx(2 * pi).epsilon(1e-15));

  p.geometry = Geometry::Hyperbolic;
  res = forward_map(p, RadiusAssignment{{1, 1, 1, 1}});
  const double phi = oracle::hyperbolic_triangle(1, 1, pi / 2).phi1;
  CHECK(phi == doctest::Approx(0.5750).epsilon(1e-4));
  for (double a : res.angles.values) CHECK(a == doctest::Approx(phi).epsilon(1e-12));
  for (double c : res.cone) CHECK(c == doctest::Approx(4.5997).epsilon(1e-4));

  CHECK_THROWS_AS(forward_map(p, RadiusAssignment{{1, 1, 0, 1}}), InputError);
  CHECK_THROWS_AS(forward_map(p, RadiusAssignment{{1, 1, 1}}), InputError);
}

TEST_CASE("forward map side convention: the larger circle subtends the smaller angle") {
  PatternProblem p = catalog::uniform_problem(two_face_complex(), Geometry::Euclidean, pi / 2, pi);
  const auto res = forward_map(p, RadiusAssignment{{3, 4}});
  // Angle at O_A is opposite r(B) = 4.
  const auto o = oracle::euclidean_triangle(3, 4, pi / 2);
  for (int e = 0; e < 3; ++e) {
    CHECK(res.angles[CellComplex::side_of(e, 0)] == doctest::Approx(o.phi2).epsilon(1e-14));
    CHECK(res.angles[CellComplex::side_of(e, 1)] == doctest::Approx(o.phi1).epsilon(1e-14));
    CHECK(res.edge_length[e] == doctest::Approx(5.0));
  }
}

TEST_CASE("forward map bookkeeping invariants") {
  auto g = oracle::rng(31);
  const CellComplex complexes[] = {catalog::torus_grid(3), catalog::genus2_octagon_fan(), catalog::genus2_octagon()};
  for (const auto& cx : complexes) {
    for (int k = 0; k < 20; ++k) {
      PatternProblem p = catalog::uniform_problem(cx, Geometry::Euclidean, 1.0, 1.0);
      for (auto& d : p.intersection_angles) d = oracle::uniform(g, 0.1, pi - 0.1);
      const RadiusAssignment r = random_radii(g, cx.face_count(), 0.05, 3.0);
      const auto res = forward_map(p, r);
      double half_cone = 0.0;
      double total_d = 0.0;
      for (double c : res.cone) half_cone += 0.5 * c;
      for (double d : p.intersection_angles) total_d += d;
      CHECK(std::abs(half_cone - total_d) < 1e-9);

      RadiusAssignment scaled = r;
      for (auto& x : scaled.values) x *= 7.5;
      const auto res2 = forward_map(p, scaled);
      for (std::size_t s = 0; s < res.angles.size(); ++s) CHECK(std::abs(res.angles[s] - res2.angles[s]) < 1e-13);

      p.geometry = Geometry::Hyperbolic;
      const auto hres = forward_map(p, r);
      const int n = cx.face_count();
      for (std::uint32_t x = 1; x < (1u << std::min(n, 9)); ++x) {
        std::vector<int> xs;
        double half = 0.0;
        for (int f = 0; f < n; ++f) {
          if (x & (1u << f)) {
            xs.push_back(f);
            half += 0.5 * hres.cone[f];
          }
        }
        double dsum = 0.0;
        for (int e : edge_set(cx, std::span<const int>(xs))) dsum += p.intersection_angles[e];
        CHECK(half < dsum);
      }
    }
  }
}

TEST_CASE("vertex cone angles") {
  PatternProblem p = catalog::uniform_problem(catalog::torus_grid(2), Geometry::Euclidean, pi / 2, 2 * pi);
  for (double c : vertex_cone_angles(p)) CHECK(c == doctest::Approx(2 * pi).epsilon(1e-15));

  // One loop edge at a single vertex counts twice.
  PatternProblem oct = catalog::uniform_problem(catalog::genus2_octagon(), Geometry::Hyperbolic, pi / 2, 2 * pi);
  oct.intersection_angles = {0.5, 0.5, 0.5, 0.5};
  const auto cones = vertex_cone_angles(oct);
  REQUIRE(cones.size() == 1);
  CHECK(cones[0] == doctest::Approx(8 * (pi - 0.5)));

  const double eps = 1e-3;
  PatternProblem near = catalog::uniform_problem(catalog::torus_grid(3), Geometry::Euclidean, pi - eps, 2 * pi);
  for (double c : vertex_cone_angles(near)) CHECK(c == doctest::Approx(4 * eps).epsilon(1e-9));

  PatternProblem bare = catalog::uniform_problem(two_face_complex(), Geometry::Euclidean, pi / 2, pi);
  CHECK_THROWS_AS(vertex_cone_angles(bare), UnsupportedError);
}

TEST_CASE("problem validation covers D and Phi ranges") {
  PatternProblem p = catalog::uniform_problem(catalog::torus_grid(2), Geometry::Hyperbolic, pi / 2, 2 * pi);
  CHECK(p.validate().empty());
  p.intersection_angles[3] = 3.5;
  p.cone_angles[1] = -1.0;
  CHECK(p.validate().size() == 2);
  CHECK_THROWS_AS(p.require_valid(), InputError);
  CHECK(p.apex_angle(0) == doctest::Approx(pi / 2));
}

TEST_CASE("genus-2 fan catalog entry") {
  const CellComplex fan = catalog::genus2_octagon_fan();
  CHECK(fan.face_count() == 8);
  CHECK(fan.edge_count() == 12);
  CHECK(fan.vertex_count() == 2);
  CHECK(fan.validate().empty());
  // V - E + F = 2 - 2g with g = 2.
  CHECK(fan.vertex_count() - fan.edge_count() + fan.face_count() == -2);
  for (int f = 0; f < 8; ++f) CHECK(fan.side_count(f) == 3);
}
