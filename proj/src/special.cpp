#include "circlepat/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace circlepat {

namespace {

using std::numbers::pi;

constexpr int kSeriesTerms = 32;

// Cl2(t) = t - t ln t + sum_k c_k t^(2k+1) on |t| < 2pi, where
// c_k = |B_2k| / (2k (2k+1)!) = 2 zeta(2k) / ((2pi)^(2k) 2k (2k+1)).
// At t = pi consecutive terms shrink by about 4, so 32 terms reach round-off.
std::array<double, kSeriesTerms> make_coefficients() {
  std::array<double, kSeriesTerms> c{};
  const double two_pi_sq = 4.0 * pi * pi;
  double scale = 1.0;
  for (int k = 1; k <= kSeriesTerms; ++k) {
    scale *= two_pi_sq;
    double zeta = 0.0;
    if (k == 1) {
      zeta = pi * pi / 6.0;
    } else if (k == 2) {
      zeta = std::pow(pi, 4) / 90.0;
    } else {
      // Summed from the small end for accuracy; tail below 2000^(1-2k).
      for (int n = 2000; n >= 1; --n) zeta += std::pow(static_cast<double>(n), -2.0 * k);
    }
    c[k - 1] = 2.0 * zeta / (scale * (2.0 * k) * (2.0 * k + 1.0));
  }
  return c;
}

const std::array<double, kSeriesTerms>& coefficients() {
  static const std::array<double, kSeriesTerms> c = make_coefficients();
  return c;
}

}  // namespace

double clausen2(double theta) {
  if (!std::isfinite(theta)) return 0.0;
  double t = std::remainder(theta, 2.0 * pi);  // [-pi, pi]
  const double sign = t < 0.0 ? -1.0 : 1.0;
  t = std::abs(t);
  if (t == 0.0) return 0.0;

  const auto& c = coefficients();
  const double t2 = t * t;
  double series = 0.0;
  for (int k = kSeriesTerms - 1; k >= 0; --k) series = series * t2 + c[k];
  series *= t2 * t;
  return sign * (t - t * std::log(t) + series);
}

double lobachevsky(double x) { return 0.5 * clausen2(2.0 * x); }

}  // namespace circlepat
