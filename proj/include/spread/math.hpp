// SPDX-License-Identifier: MIT
#pragma once

namespace spread {

inline constexpr double kInvSqrt2Pi = 0.398942280401432677939946059934;
inline constexpr double kInvSqrt2 = 0.707106781186547524400844362105;

/// Phi(x). Throws DomainError on NaN/inf.
double std_normal_cdf(double x);

/// phi(x) = exp(-x^2/2)/sqrt(2 pi). Throws DomainError on NaN/inf.
double std_normal_pdf(double x);

/// Q(mY - nX >= ell) for standard normals X, Y with correlation rho.
/// Degenerate case (mY - nX == 0 a.s.) returns 1 if ell <= 0, else 0.
double half_plane_prob(double m, double n, double ell, double rho);

}  // namespace spread
