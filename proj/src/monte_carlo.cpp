// SPDX-License-Identifier: MIT
#include <algorithm>
#include <cmath>

#include "spread/errors.hpp"
#include "spread/pricers.hpp"
#include "spread/random.hpp"

namespace spread {

namespace {

// Welford accumulator: identical samples give an exact mean and zero variance.
struct Moments {
    std::uint64_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++n;
        const double delta = x - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (x - mean);
    }
};

}  // namespace

PriceResult price_monte_carlo(const SpreadContract& c, const McConfig& cfg) {
    c.validate();
    if (cfg.paths < 2) throw ConfigError("monte_carlo: paths must be >= 2");

    const double st = std::sqrt(c.t);
    const double s1 = c.sigma1 * st, s2 = c.sigma2 * st;
    const double m1 = -0.5 * s1 * s1, m2 = -0.5 * s2 * s2;
    const double rc = std::sqrt(std::max(1.0 - c.rho * c.rho, 0.0));

    // X drives S2, Y = rho X + sqrt(1 - rho^2) Z drives S1
    auto payoff = [&](double x, double z) {
        const double y = c.rho * x + rc * z;
        const double p1 = c.f1 * std::exp(m1 + s1 * y);
        const double p2 = c.f2 * std::exp(m2 + s2 * x);
        return std::max(p1 - p2 - c.k, 0.0);
    };

    Moments acc;
    std::uint64_t used = 0;
    if (cfg.antithetic) {
        const std::uint64_t pairs = cfg.paths / 2;
        for (std::uint64_t i = 0; i < pairs; ++i) {
            const auto [x, z] = normal_pair(cfg.seed, i);
            acc.add(0.5 * (payoff(x, z) + payoff(-x, -z)));
        }
        used = 2 * pairs;
    } else {
        for (std::uint64_t i = 0; i < cfg.paths; ++i) {
            const auto [x, z] = normal_pair(cfg.seed, i);
            acc.add(payoff(x, z));
        }
        used = cfg.paths;
    }
    const double df = c.discount();
    const double n = static_cast<double>(acc.n);
    const double se = acc.n > 1 ? std::sqrt(acc.m2 / (n - 1.0) / n) : 0.0;
    return {df * acc.mean, Method::monte_carlo, McDiagnostics{df * se, used, cfg.seed, cfg.antithetic}};
}

}  // namespace spread
