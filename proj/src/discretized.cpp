// SPDX-License-Identifier: MIT
#include <cmath>
#include <vector>

#include "spread/boundary.hpp"
#include "spread/errors.hpp"
#include "spread/math.hpp"
#include "spread/pricers.hpp"

namespace spread {

PriceResult price_discretized(const SpreadContract& c, const DiscretizationConfig& cfg) {
    c.validate();
    if (c.k < 0.0) throw DomainError("discretized: k must be >= 0 (use parity_normalize)");
    if (c.k == 0.0 && !(c.f2 > 0.0)) throw DomainError("discretized: k and f2 both zero");
    if (!(c.sigma1 > 0.0)) throw DomainError("discretized: sigma1 must be > 0");
    if (!(std::abs(c.rho) < 1.0 - 1e-9)) throw DomainError("discretized: |rho| must be < 1");
    if (!(cfg.b > 0.0) || cfg.n < 1) throw ConfigError("discretized: need b > 0 and n >= 1");

    // Conditional on X = theta_i, {S1 digital i} = {Y > y_i(theta_i)} with Y | X ~ N(rho x, 1 - rho^2),
    // so P = Phi((rho x - y_i(x)) / sqrt(1 - rho^2)).
    const double sr = std::sqrt(1.0 - c.rho * c.rho);
    const int n = cfg.n;
    double sum1 = 0.0, sum2 = 0.0, sum3 = 0.0;
    double prev = std_normal_cdf(-cfg.b);
    for (int i = 0; i < n; ++i) {
        const double lo = cfg.b * (2.0 * i / n - 1.0);
        const double hi = cfg.b * (2.0 * (i + 1) / n - 1.0);
        const double next = std_normal_cdf(hi);
        const double w = next - prev;
        prev = next;
        const double x = 0.5 * (lo + hi);
        const double rx = c.rho * x;
        sum1 += std_normal_cdf((rx - curve_y(c, CurveId::C1, x)) / sr) * w;
        sum2 += std_normal_cdf((rx - curve_y(c, CurveId::C2, x)) / sr) * w;
        sum3 += std_normal_cdf((rx - curve_y(c, CurveId::C3, x)) / sr) * w;
    }
    const double v = c.discount() * (c.f1 * sum1 - c.f2 * sum2 - c.k * sum3);
    return {v, Method::discretized, DiscDiagnostics{cfg.b, cfg.n}};
}

}  // namespace spread
