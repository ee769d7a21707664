#pragma once

// Euclidean and hyperbolic triangle primitives.
//
// Convention: a triangle with two sides r1, r2 meeting at the apex angle theta;
// l is the side opposite theta, phi1 is the angle opposite r1 and phi2 the
// angle opposite r2. For the circle-pattern triangle O_f P O_f' with r1 = r(f)
// and r2 = r(f'), the angle at O_f is phi2.

#include <array>
#include <optional>

#include <Eigen/Dense>

#include "circlepat/complex.hpp"

namespace circlepat {

struct ApexTriangle {
  double length;  // l
  double phi1;    // opposite r1
  double phi2;    // opposite r2
};

ApexTriangle euclidean_apex(double r1, double r2, double theta);

/// Stable for r1, r2 up to several hundred; no overflow for r <= 700.
ApexTriangle hyperbolic_apex(double r1, double r2, double theta);

ApexTriangle apex_triangle(Geometry g, double r1, double r2, double theta);

/// Partial derivatives of (phi1, phi2) with respect to the log coordinates
/// u_i = ln r_i (Euclidean) or u_i = ln tanh(r_i/2) (hyperbolic).
struct ApexPartials {
  double dphi1_du1;
  double dphi1_du2;
  double dphi2_du1;
  double dphi2_du2;
};

ApexPartials apex_partials(Geometry g, double r1, double r2, double theta);

/// Boundary classification of a point of the closed angle domain
/// T = {phi1 >= 0, phi2 >= 0, phi1 + phi2 <= pi - theta}.
enum class Degeneracy {
  None,            // interior: hyperbolic triangle with finite sides
  EuclideanLimit,  // on the open segment V1V2: both radii shrink to zero
  ZeroRadius,      // at V1 or V2: one radius zero, the other path dependent
  InfiniteRadius,  // on OV1, OV2 or at O: an ideal vertex
};

struct AngleRadii {
  Degeneracy kind = Degeneracy::None;
  // 0 or +infinity on the boundary; nullopt when the limit depends on the path.
  std::optional<double> r1;
  std::optional<double> r2;
};

/// Inverse of hyperbolic_apex at fixed theta, from the half-angle tanh formula.
AngleRadii hyperbolic_radii_from_angles(double phi1, double phi2, double theta);

/// dl/dtheta for a hyperbolic triangle with sides l and opposite angles theta.
/// Throws InputError if the six numbers are not one triangle (1e-8).
Eigen::Matrix3d derivative_cosine_law(const std::array<double, 3>& lengths,
                                      const std::array<double, 3>& angles);

struct EnergyDomainPoint {
  double phi1;
  double phi2;
  double theta;
};

Degeneracy classify(const EnergyDomainPoint& p);

/// v(phi1, phi2) = integral of ln tanh(r1/2) dphi2 + ln tanh(r2/2) dphi1 from
/// the origin, in closed form through the Lobachevsky function. Continuous on
/// the closed domain.
double v_energy(const EnergyDomainPoint& p);

struct EnergyGradient {
  Degeneracy kind = Degeneracy::None;
  // dv/dphi1 = ln tanh(r2/2), dv/dphi2 = ln tanh(r1/2). On the boundary the
  // components are 0 or -infinity, or nullopt when path dependent.
  std::optional<double> d_phi1;
  std::optional<double> d_phi2;
};

EnergyGradient v_gradient(const EnergyDomainPoint& p);

struct EnergyHessian {
  Degeneracy kind = Degeneracy::None;
  Eigen::Matrix2d matrix = Eigen::Matrix2d::Zero();  // valid only for kind None
};

EnergyHessian v_hessian(const EnergyDomainPoint& p);

namespace hyp {

double log_sinh(double x);
double log_cosh(double x);
/// ln tanh(x/2) for x > 0, accurate for large x.
double log_tanh_half(double x);
/// Inverse of log_tanh_half: r with ln tanh(r/2) = u, u < 0.
double radius_from_log_tanh_half(double u);

}  // namespace hyp

}  // namespace circlepat
