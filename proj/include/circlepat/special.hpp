#pragma once

namespace circlepat {

/// Clausen function Cl2(theta) = sum_{n>=1} sin(n theta) / n^2.
double clausen2(double theta);

/// Lobachevsky function Lambda(x) = -int_0^x ln|2 sin t| dt = Cl2(2x)/2.
/// Odd and pi-periodic; absolute error below 1e-14 on [0, pi].
double lobachevsky(double x);

}  // namespace circlepat
