// SPDX-License-Identifier: MIT
#include <array>
#include <cmath>

#include "spread/boundary.hpp"
#include "spread/errors.hpp"
#include "spread/math.hpp"
#include "spread/pricers.hpp"

namespace spread {

namespace {

void check_domain(const SpreadContract& c) {
    c.validate();
    if (c.k < 0.0) throw DomainError("extended: k must be >= 0 (use parity_normalize)");
    if (!(c.f2 > 0.0)) throw DomainError("extended: f2 must be > 0");
    if (!(c.sigma1 > 0.0)) throw DomainError("extended: sigma1 must be > 0");
}

constexpr std::array<CurveId, 3> kCurves{CurveId::C1, CurveId::C2, CurveId::C3};

}  // namespace

PriceResult price_extended(const SpreadContract& c, const ExtendedParams& p) {
    check_domain(c);
    const std::array<double, 3> anchors{p.lambda, p.mu, p.gamma};
    std::array<double, 3> prob{};
    for (int i = 0; i < 3; ++i) {
        if (!std::isfinite(anchors[i])) throw DomainError("extended: non-finite parameter");
        const LineApprox line = line_for_curve(c, kCurves[i], anchors[i]);
        // P(Y > kappa X + delta) with corr(X, Y) = rho
        const double w2 = 1.0 + line.kappa * line.kappa - 2.0 * c.rho * line.kappa;
        if (!(w2 > 0.0)) throw DomainError("extended: degenerate line variance");
        prob[i] = std_normal_cdf(-line.delta / std::sqrt(w2));
    }
    const double v = c.discount() * (c.f1 * prob[0] - c.f2 * prob[1] - c.k * prob[2]);
    return {v, Method::extended, ExtendedDiagnostics{p.lambda, p.mu, p.gamma}};
}

double price_extended_ijh(const SpreadContract& c, const ExtendedParams& p) {
    check_domain(c);
    const std::array<double, 3> anchors{p.lambda, p.mu, p.gamma};
    std::array<double, 3> a{}, b{}, sb{};
    for (int i = 0; i < 3; ++i) {
        b[i] = slope_fraction(c, kCurves[i], anchors[i]);
        a[i] = shift_coefficient(c, kCurves[i], anchors[i]);
        const double v = c.sigma1 * c.sigma1 - 2.0 * c.rho * c.sigma1 * c.sigma2 * b[i] +
                         c.sigma2 * c.sigma2 * b[i] * b[i];
        if (!(v > 0.0)) throw DomainError("extended: degenerate effective volatility");
        sb[i] = std::sqrt(v);
    }
    const double s1 = c.sigma1, s2 = c.sigma2, rho = c.rho, t = c.t, st = std::sqrt(t);
    const double i_arg =
        (std::log(c.f1 / a[0]) + (0.5 * s1 * s1 - rho * s1 * s2 * b[0] + 0.5 * s2 * s2 * b[0] * b[0]) * t) /
        (sb[0] * st);
    const double j_arg = (std::log(c.f1 / a[1]) +
                          (-0.5 * s1 * s1 + rho * s1 * s2 + 0.5 * s2 * s2 * b[1] * b[1] - s2 * s2 * b[1]) * t) /
                         (sb[1] * st);
    const double h_arg =
        (std::log(c.f1 / a[2]) + (-0.5 * s1 * s1 + 0.5 * s2 * s2 * b[2] * b[2]) * t) / (sb[2] * st);
    return c.discount() *
           (c.f1 * std_normal_cdf(i_arg) - c.f2 * std_normal_cdf(j_arg) - c.k * std_normal_cdf(h_arg));
}

ExtendedParams default_extended_params(const SpreadContract& c) {
    c.validate();
    const double st = std::sqrt(c.t);
    ExtendedParams p;
    p.lambda = (0.5 * c.sigma2 - c.rho * c.sigma1) * st + std::sqrt(std::abs(c.sigma2 - c.sigma1)) / 3.0;
    // b1(lambda) = b2(mu) = b3(gamma): the three logistics differ only by a shift of their argument
    p.mu = p.lambda + (c.rho * c.sigma1 - c.sigma2) * st;
    p.gamma = p.lambda + c.rho * c.sigma1 * st;
    return p;
}

ExtendedParams bs_point_params(const SpreadContract& c) {
    c.validate();
    const double st = std::sqrt(c.t);
    return {(0.5 * c.sigma2 - c.rho * c.sigma1) * st, -0.5 * c.sigma2 * st, 0.5 * c.sigma2 * st};
}

}  // namespace spread
