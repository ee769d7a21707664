#pragma once

// Random instance generators shared by the unit tests and the acceptance run.

#include <algorithm>
#include <numbers>
#include <random>
#include <vector>

#include "circlepat/catalog.hpp"
#include "circlepat/complex.hpp"
#include "circlepat/feasibility.hpp"
#include "circlepat/triangle.hpp"
#include "oracles.hpp"

namespace instances {

using circlepat::CellComplex;
using circlepat::Geometry;
using circlepat::PatternProblem;
using circlepat::RadiusAssignment;

inline RadiusAssignment random_radii(std::mt19937_64& g, Geometry geom, int n) {
  RadiusAssignment r;
  if (geom == Geometry::Hyperbolic) {
    for (int i = 0; i < n; ++i) r.values.push_back(oracle::uniform(g, 0.1, 2.0));
    return r;
  }
  // Uniform on the open simplex via normalized exponentials, kept away from zero.
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    r.values.push_back(0.05 - std::log(oracle::uniform(g, 1e-3, 1.0)));
    sum += r.values.back();
  }
  for (auto& x : r.values) x /= sum;
  return r;
}

inline void random_intersection_angles(std::mt19937_64& g, PatternProblem& p, double lo = 0.3,
                                       double hi = std::numbers::pi - 0.3) {
  for (auto& d : p.intersection_angles) d = oracle::uniform(g, lo, hi);
}

/// D random, Phi := cone angles of random radii. Such data always admit a pattern.
inline PatternProblem realizable(std::mt19937_64& g, const CellComplex& cx, Geometry geom,
                                 RadiusAssignment* radii_out = nullptr) {
  PatternProblem p = circlepat::catalog::uniform_problem(cx, geom, 1.0, 1.0);
  random_intersection_angles(g, p);
  const RadiusAssignment r = random_radii(g, geom, cx.face_count());
  p.cone_angles = circlepat::forward_map(p, r).cone;
  if (radii_out) *radii_out = r;
  return p;
}

/// g(X) evaluated straight from the definition.
inline double slack(const PatternProblem& p, const std::vector<int>& xs) {
  std::vector<char> in(p.complex.face_count(), 0);
  for (int f : xs) in[f] = 1;
  double g = 0.0;
  for (int f : xs) g -= 0.5 * p.cone_angles[f];
  for (int e = 0; e < p.complex.edge_count(); ++e) {
    const auto& rec = p.complex.edge_records()[e];
    if (in[*p.complex.find_face(rec.side_a)] || in[*p.complex.find_face(rec.side_b)]) g += p.intersection_angles[e];
  }
  return g;
}

inline std::vector<int> all_faces(const PatternProblem& p) {
  std::vector<int> v(p.complex.face_count());
  for (int f = 0; f < p.complex.face_count(); ++f) v[f] = f;
  return v;
}

/// Verdict straight from the exhaustive enumeration, with the library's thresholds.
inline circlepat::FeasibilityStatus oracle_status(const PatternProblem& p,
                                                  double tol = circlepat::kDefaultFeasibilityTol) {
  using circlepat::FeasibilityStatus;
  double margin = 0.0;
  if (p.geometry == Geometry::Hyperbolic) {
    margin = oracle::min_subset_slack(p, true);
  } else {
    if (std::abs(slack(p, all_faces(p))) > tol) return FeasibilityStatus::Infeasible;
    margin = p.complex.face_count() == 1 ? std::numeric_limits<double>::infinity() : oracle::min_subset_slack(p, false);
  }
  if (margin > tol) return FeasibilityStatus::Feasible;
  if (margin > 0.0) return FeasibilityStatus::BoundaryFeasible;
  return FeasibilityStatus::Infeasible;
}

/// Takes realizable data and raises Phi on a random subset X until g(X) < 0.
/// In the Euclidean case X is proper and the complement gives up the same
/// amount, so the total stays balanced and only the strict inequality breaks.
/// A single Euclidean face has no proper subset; there the total is unbalanced.
inline PatternProblem violated(std::mt19937_64& g, const CellComplex& cx, Geometry geom) {
  const int n = cx.face_count();
  if (geom == Geometry::Euclidean && n == 1) {
    PatternProblem p = realizable(g, cx, geom);
    p.cone_angles[0] += oracle::uniform(g, 0.05, 0.5);
    return p;
  }
  while (true) {
    PatternProblem p = realizable(g, cx, geom);
    std::vector<int> xs;
    std::vector<int> rest;
    for (int f = 0; f < n; ++f) (std::bernoulli_distribution(0.5)(g) ? xs : rest).push_back(f);
    if (xs.empty()) continue;
    if (geom == Geometry::Euclidean && rest.empty()) continue;
    const double excess = slack(p, xs) + oracle::uniform(g, 0.05, 0.5);
    for (int f : xs) p.cone_angles[f] += 2.0 * excess / xs.size();
    if (geom == Geometry::Euclidean) {
      bool ok = true;
      for (int f : rest) {
        p.cone_angles[f] -= 2.0 * excess / rest.size();
        ok = ok && p.cone_angles[f] > 0.05;
      }
      if (!ok) continue;
    }
    return p;
  }
}

/// Random interior point of the angle domain, every constraint at least `margin` away.
inline circlepat::EnergyDomainPoint random_interior(std::mt19937_64& g, double margin = 1e-3) {
  const double theta = oracle::uniform(g, 0.05, std::numbers::pi - 0.05);
  const double room = std::numbers::pi - theta;
  const double sum = oracle::uniform(g, margin, room - margin);
  const double share = oracle::uniform(g, margin / sum, 1.0 - margin / sum);
  return {share * sum, (1.0 - share) * sum, theta};
}

inline std::vector<CellComplex> acceptance_complexes() {
  return {circlepat::catalog::torus_grid(2), circlepat::catalog::torus_grid(4),
          circlepat::catalog::genus2_octagon_fan()};
}

}  // namespace instances
