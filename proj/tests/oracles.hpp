#pragma once

// Reference computations used to check the library. None of them call into the
// code under test: triangles come straight from the cosine laws, integrals from
// Boost quadrature, derivatives from central differences.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/tools/roots.hpp>

#include "circlepat/complex.hpp"

namespace oracle {

constexpr double pi = std::numbers::pi;

/// Angles (phi1 opposite r1, phi2 opposite r2) and the third side l of the
/// triangle with sides r1, r2 meeting at angle theta, by the cosine laws.
struct Triangle {
  double l;
  double phi1;
  double phi2;
};

inline Triangle euclidean_triangle(double r1, double r2, double theta) {
  const double l = std::sqrt(r1 * r1 + r2 * r2 - 2.0 * r1 * r2 * std::cos(theta));
  // Angle at the end of r2 is opposite r1.
  const double phi1 = std::acos(std::clamp((r2 * r2 + l * l - r1 * r1) / (2.0 * r2 * l), -1.0, 1.0));
  const double phi2 = std::acos(std::clamp((r1 * r1 + l * l - r2 * r2) / (2.0 * r1 * l), -1.0, 1.0));
  return {l, phi1, phi2};
}

inline Triangle hyperbolic_triangle(double r1, double r2, double theta) {
  const double ch = std::cosh(r1) * std::cosh(r2) - std::sinh(r1) * std::sinh(r2) * std::cos(theta);
  const double l = std::acosh(ch);
  const double phi1 = std::acos(
      std::clamp((std::cosh(r2) * ch - std::cosh(r1)) / (std::sinh(r2) * std::sinh(l)), -1.0, 1.0));
  const double phi2 = std::acos(
      std::clamp((std::cosh(r1) * ch - std::cosh(r2)) / (std::sinh(r1) * std::sinh(l)), -1.0, 1.0));
  return {l, phi1, phi2};
}

/// ln tanh(r1/2) for the side r1 opposite phi1, from the cosine law for angles:
/// cosh r1 = (cos phi1 + cos phi2 cos theta) / (sin phi2 sin theta).
inline double log_tanh_half_r1(double phi1, double phi2, double theta) {
  const double num = std::cos(phi1) + std::cos(phi2 + theta);
  const double den = std::cos(phi1) + std::cos(phi2 - theta);
  return 0.5 * std::log(num / den);
}

/// r1 from the same law.
inline double radius_r1(double phi1, double phi2, double theta) {
  return std::acosh((std::cos(phi1) + std::cos(phi2) * std::cos(theta)) / (std::sin(phi2) * std::sin(theta)));
}

/// -int_0^x ln|2 sin t| dt for x in [0, pi] by double-exponential quadrature.
inline double lobachevsky_quadrature(double x) {
  if (x == 0.0) return 0.0;
  static boost::math::quadrature::tanh_sinh<double> integrator(12);
  auto f = [](double t) { return -std::log(2.0 * std::sin(t)); };
  const double tol = 1e-15;
  if (x <= 0.5 * pi) return integrator.integrate(f, 0.0, x, tol);
  return integrator.integrate(f, 0.0, 0.5 * pi, tol) + integrator.integrate(f, 0.5 * pi, x, tol);
}

/// v(phi1, phi2) as the line integral of ln tanh(r2/2) dphi1 + ln tanh(r1/2) dphi2
/// along the segment from the origin.
inline double energy_path_integral(double phi1, double phi2, double theta) {
  static boost::math::quadrature::tanh_sinh<double> integrator(12);
  auto integrand = [&](double t) {
    const double a = t * phi1;
    const double b = t * phi2;
    return log_tanh_half_r1(b, a, theta) * phi1 + log_tanh_half_r1(a, b, theta) * phi2;
  };
  return integrator.integrate(integrand, 0.0, 1.0, 1e-14);
}

/// Central difference of a scalar function.
inline double central_difference(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// Radius r with 2 n phi2(r, r, theta) = target, phi2 from the cosine laws, by TOMS 748.
/// The bracket starts at 1e-3: below that the cosine law loses all precision.
inline double symmetric_hyperbolic_radius(int sides, double theta, double target) {
  auto g = [&](double r) { return 2.0 * sides * hyperbolic_triangle(r, r, theta).phi2 - target; };
  std::uintmax_t iters = 200;
  const auto [lo, hi] = boost::math::tools::toms748_solve(g, 1e-3, 30.0, boost::math::tools::eps_tolerance<double>(52),
                                                         iters);
  return 0.5 * (lo + hi);
}

/// Exhaustive min over nonempty face subsets of sum_{E(X)} D - sum_X Phi/2,
/// excluding X = F when asked; written against the raw edge records.
inline double min_subset_slack(const circlepat::PatternProblem& p, bool include_full) {
  const auto& cx = p.complex;
  const int n = cx.face_count();
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (!include_full && mask == (1u << n) - 1u) continue;
    long double g = 0.0L;
    for (int f = 0; f < n; ++f) {
      if (mask & (1u << f)) g -= 0.5L * p.cone_angles[f];
    }
    for (int e = 0; e < cx.edge_count(); ++e) {
      const auto& rec = cx.edge_records()[e];
      const int a = *cx.find_face(rec.side_a);
      const int b = *cx.find_face(rec.side_b);
      if ((mask & (1u << a)) || (mask & (1u << b))) g += p.intersection_angles[e];
    }
    best = std::min(best, static_cast<double>(g));
  }
  return best;
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& g, double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(g);
}

}  // namespace oracle
