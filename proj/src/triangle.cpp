#include "circlepat/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "circlepat/errors.hpp"
#include "circlepat/special.hpp"

namespace circlepat {

namespace {

using std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLn2 = std::numbers::ln2;

void require_apex_args(double r1, double r2, double theta) {
  if (!(r1 > 0.0) || !(r2 > 0.0) || !std::isfinite(r1) || !std::isfinite(r2)) {
    throw InputError("triangle sides must be positive and finite");
  }
  if (!(theta > 0.0 && theta < pi)) throw InputError("apex angle must lie in (0, pi)");
}

double log_add_exp(double a, double b) {
  if (a == -kInf) return b;
  if (b == -kInf) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

// 1/cosh(x) without overflow.
double sech(double x) {
  const double e = std::exp(-std::abs(x));
  return 2.0 * e / (1.0 + e * e);
}

// Hyperbolic third side from the haversine form
//   sinh^2(l/2) = sinh^2((r1-r2)/2) + sin^2(theta/2) sinh r1 sinh r2,
// evaluated in logs so that no intermediate overflows.
double hyperbolic_opposite_side(double r1, double r2, double theta) {
  const double half_diff = 0.5 * std::abs(r1 - r2);
  const double log_a = half_diff > 0.0 ? 2.0 * hyp::log_sinh(half_diff) : -kInf;
  const double log_b = 2.0 * std::log(std::sin(0.5 * theta)) + hyp::log_sinh(r1) + hyp::log_sinh(r2);
  const double log_s2 = log_add_exp(log_a, log_b);  // ln sinh^2(l/2)
  const double half_log_s = 0.5 * log_s2;
  if (half_log_s > 20.0) {
    // asinh(s) = ln(2s) + O(s^-2)
    return 2.0 * (kLn2 + half_log_s);
  }
  return 2.0 * std::asinh(std::exp(half_log_s));
}

// Half-angle quantities of the closed-form radii. With
//   a = (pi-theta-phi1-phi2)/2, g = (pi+theta-phi1-phi2)/2,
//   b1 = (pi+theta-phi1+phi2)/2, d1 = (pi-theta-phi1+phi2)/2,
// tanh^2(r1/2) = sin a sin b1 / (sin g sin d1) and
// 1 - tanh^2(r1/2) = sin theta sin phi2 / (sin g sin d1).
double radius_from_half_angles(double phi_self, double phi_other, double theta) {
  const double a = 0.5 * (pi - theta - phi_self - phi_other);
  const double g = 0.5 * (pi + theta - phi_self - phi_other);
  const double b = 0.5 * (pi + theta - phi_self + phi_other);
  const double d = 0.5 * (pi - theta - phi_self + phi_other);
  const double den = std::sin(g) * std::sin(d);
  const double t = std::sin(a) * std::sin(b) / den;
  const double one_minus_t = std::sin(theta) * std::sin(phi_other) / den;
  // r = 2 atanh(sqrt t) = 2 ln(1 + sqrt t) - ln(1 - t)
  return 2.0 * std::log1p(std::sqrt(t)) - std::log(one_minus_t);
}

}  // namespace

namespace hyp {

double log_sinh(double x) {
  if (x > 20.0) return x - kLn2 + std::log1p(-std::exp(-2.0 * x));
  return std::log(std::sinh(x));
}

double log_cosh(double x) {
  x = std::abs(x);
  return x - kLn2 + std::log1p(std::exp(-2.0 * x));
}

double log_tanh_half(double x) {
  const double e = std::exp(-x);
  return std::log1p(-e) - std::log1p(e);
}

double radius_from_log_tanh_half(double u) {
  // tanh(r/2) = s  =>  r = ln(1+s) - ln(1-s)
  const double s = std::exp(u);
  return std::log1p(s) - std::log(-std::expm1(u));
}

}  // namespace hyp

ApexTriangle euclidean_apex(double r1, double r2, double theta) {
  require_apex_args(r1, r2, theta);
  const double st = std::sin(theta);
  const double ct = std::cos(theta);
  const double half = std::sin(0.5 * theta);
  const double l = std::sqrt((r1 - r2) * (r1 - r2) + 4.0 * r1 * r2 * half * half);
  // cot(phi1) = (r2/r1 - cos theta) / sin theta
  const double phi1 = std::atan2(r1 * st, r2 - r1 * ct);
  const double phi2 = std::atan2(r2 * st, r1 - r2 * ct);
  return {l, phi1, phi2};
}

ApexTriangle hyperbolic_apex(double r1, double r2, double theta) {
  require_apex_args(r1, r2, theta);
  const double st = std::sin(theta);
  const double ct = std::cos(theta);
  // Four-part formula: cot(phi1) sin(theta) = coth(r1) sinh(r2) - cosh(r2) cos(theta),
  // divided through by cosh(r2).
  const double phi1 = std::atan2(st * sech(r2), std::tanh(r2) / std::tanh(r1) - ct);
  const double phi2 = std::atan2(st * sech(r1), std::tanh(r1) / std::tanh(r2) - ct);
  return {hyperbolic_opposite_side(r1, r2, theta), phi1, phi2};
}

ApexTriangle apex_triangle(Geometry g, double r1, double r2, double theta) {
  return g == Geometry::Euclidean ? euclidean_apex(r1, r2, theta) : hyperbolic_apex(r1, r2, theta);
}

ApexPartials apex_partials(Geometry g, double r1, double r2, double theta) {
  if (g == Geometry::Euclidean) {
    const ApexTriangle t = euclidean_apex(r1, r2, theta);
    const double k = r1 * r2 * std::sin(theta) / (t.length * t.length);
    return {k, -k, -k, k};
  }
  const ApexTriangle t = hyperbolic_apex(r1, r2, theta);
  // With S = sinh r1 sinh r2 sin theta and C = cosh l, inverting the derivative
  // cosine law at fixed theta gives dphi/du = (S / sinh^2 l) [[1, -C], [-C, 1]].
  const double log_s = hyp::log_sinh(r1) + hyp::log_sinh(r2) + std::log(std::sin(theta));
  const double log_sh2 = 2.0 * hyp::log_sinh(t.length);
  const double cross = std::exp(log_s - log_sh2);
  const double self = std::exp(log_s + hyp::log_cosh(t.length) - log_sh2);
  return {cross, -self, -self, cross};
}

Degeneracy classify(const EnergyDomainPoint& p) {
  if (!(p.theta > 0.0 && p.theta < pi)) throw InputError("apex angle must lie in (0, pi)");
  const double room = pi - p.theta;
  if (p.phi1 < 0.0 || p.phi2 < 0.0 || p.phi1 + p.phi2 > room + 1e-12) {
    std::ostringstream os;
    os << "angles (" << p.phi1 << ", " << p.phi2 << ") outside the closed domain for theta = " << p.theta;
    throw InputError(os.str());
  }
  const bool on_far_side = p.phi1 + p.phi2 >= room;
  if (on_far_side) {
    return (p.phi1 > 0.0 && p.phi2 > 0.0) ? Degeneracy::EuclideanLimit : Degeneracy::ZeroRadius;
  }
  if (p.phi1 == 0.0 || p.phi2 == 0.0) return Degeneracy::InfiniteRadius;
  return Degeneracy::None;
}

AngleRadii hyperbolic_radii_from_angles(double phi1, double phi2, double theta) {
  const EnergyDomainPoint p{phi1, phi2, theta};
  AngleRadii out;
  out.kind = classify(p);
  switch (out.kind) {
    case Degeneracy::None:
      out.r1 = radius_from_half_angles(phi1, phi2, theta);
      out.r2 = radius_from_half_angles(phi2, phi1, theta);
      break;
    case Degeneracy::EuclideanLimit:
      out.r1 = 0.0;
      out.r2 = 0.0;
      break;
    case Degeneracy::ZeroRadius:
      // At V2 = (0, pi-theta) r1 -> 0 while r2 depends on the approach path.
      if (phi1 == 0.0) out.r1 = 0.0;
      if (phi2 == 0.0) out.r2 = 0.0;
      break;
    case Degeneracy::InfiniteRadius:
      // phi2 = 0 makes r1 infinite, phi1 = 0 makes r2 infinite.
      out.r1 = phi2 == 0.0 ? kInf : radius_from_half_angles(phi1, phi2, theta);
      out.r2 = phi1 == 0.0 ? kInf : radius_from_half_angles(phi2, phi1, theta);
      break;
  }
  return out;
}

Eigen::Matrix3d derivative_cosine_law(const std::array<double, 3>& l, const std::array<double, 3>& th) {
  for (int i = 0; i < 3; ++i) {
    if (!(l[i] > 0.0) || !(th[i] > 0.0) || !(th[i] < pi)) {
      throw InputError("derivative_cosine_law: lengths must be positive and angles in (0, pi)");
    }
  }
  if (th[0] + th[1] + th[2] >= pi) throw InputError("derivative_cosine_law: angle sum must be below pi");
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    const double expected = (std::cos(th[i]) + std::cos(th[j]) * std::cos(th[k])) / (std::sin(th[j]) * std::sin(th[k]));
    const double actual = std::cosh(l[i]);
    if (std::abs(actual - expected) > 1e-8 * std::max(1.0, std::abs(expected))) {
      std::ostringstream os;
      os << "derivative_cosine_law: side " << i << " inconsistent with angles (cosh l = " << actual
         << ", expected " << expected << ")";
      throw InputError(os.str());
    }
  }
  Eigen::Matrix3d c;
  c << 1.0, std::cosh(l[2]), std::cosh(l[1]),
       std::cosh(l[2]), 1.0, std::cosh(l[0]),
       std::cosh(l[1]), std::cosh(l[0]), 1.0;
  const Eigen::Vector3d sh(std::sinh(l[0]), std::sinh(l[1]), std::sinh(l[2]));
  const double scale = -1.0 / (sh[0] * sh[1] * std::sin(th[2]));
  return scale * sh.asDiagonal() * c;
}

double v_energy(const EnergyDomainPoint& p) {
  classify(p);
  const double base = pi - p.theta;
  const double s = p.phi1 + p.phi2;
  const double d = p.phi1 - p.phi2;
  return lobachevsky(0.5 * (base - s)) + lobachevsky(0.5 * (base + s)) + lobachevsky(0.5 * (base + d)) +
         lobachevsky(0.5 * (base - d)) - 4.0 * lobachevsky(0.5 * base);
}

EnergyGradient v_gradient(const EnergyDomainPoint& p) {
  const AngleRadii r = hyperbolic_radii_from_angles(p.phi1, p.phi2, p.theta);
  auto component = [](const std::optional<double>& radius) -> std::optional<double> {
    if (!radius) return std::nullopt;
    if (*radius == 0.0) return -kInf;
    if (std::isinf(*radius)) return 0.0;
    return hyp::log_tanh_half(*radius);
  };
  EnergyGradient g;
  g.kind = r.kind;
  g.d_phi1 = component(r.r2);
  g.d_phi2 = component(r.r1);
  return g;
}

EnergyHessian v_hessian(const EnergyDomainPoint& p) {
  EnergyHessian h;
  const AngleRadii r = hyperbolic_radii_from_angles(p.phi1, p.phi2, p.theta);
  h.kind = r.kind;
  if (r.kind != Degeneracy::None) return h;
  const double r1 = *r.r1;
  const double r2 = *r.r2;
  const double l = hyperbolic_apex(r1, r2, p.theta).length;
  const double log_s = hyp::log_sinh(r1) + hyp::log_sinh(r2) + std::log(std::sin(p.theta));
  const double diag = -std::exp(hyp::log_cosh(l) - log_s);
  const double off = -std::exp(-log_s);
  h.matrix << diag, off, off, diag;
  return h;
}

}  // namespace circlepat
