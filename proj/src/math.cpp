// SPDX-License-Identifier: MIT
#include "spread/math.hpp"

#include <cmath>

#include "spread/errors.hpp"

namespace spread {

double std_normal_cdf(double x) {
    if (!std::isfinite(x)) throw DomainError("std_normal_cdf: non-finite argument");
    return 0.5 * std::erfc(-x * kInvSqrt2);
}

double std_normal_pdf(double x) {
    if (!std::isfinite(x)) throw DomainError("std_normal_pdf: non-finite argument");
    return kInvSqrt2Pi * std::exp(-0.5 * x * x);
}

double half_plane_prob(double m, double n, double ell, double rho) {
    if (!(std::abs(rho) <= 1.0)) throw DomainError("half_plane_prob: |rho| > 1");
    if (!std::isfinite(m) || !std::isfinite(n) || !std::isfinite(ell))
        throw DomainError("half_plane_prob: non-finite argument");
    const double s2 = m * m + n * n - 2.0 * rho * m * n;
    // tiny negative values are rounding noise from rho = +-1
    if (s2 <= 0.0) return ell <= 0.0 ? 1.0 : 0.0;
    return std_normal_cdf(-ell / std::sqrt(s2));
}

}  // namespace spread
