// SPDX-License-Identifier: MIT
#include <algorithm>
#include <cmath>

#include "spread/errors.hpp"
#include "spread/math.hpp"
#include "spread/pricers.hpp"

namespace spread {

namespace {

double intrinsic(const SpreadContract& c) { return c.discount() * std::max(c.f1 - c.f2 - c.k, 0.0); }

}  // namespace

PriceResult price_bachelier(const SpreadContract& c) {
    c.validate();
    const double df = c.discount();
    const double var = c.f1 * c.f1 * (c.g1() - 1.0) - 2.0 * c.f1 * c.f2 * (c.alpha() - 1.0) +
                       c.f2 * c.f2 * (c.g2() - 1.0);
    const double sd = df * std::sqrt(std::max(var, 0.0));
    if (!(sd > 0.0)) return {intrinsic(c), Method::bachelier, {}};
    const double mean = df * (c.f1 - c.f2) - c.k * df;
    const double d = mean / sd;
    return {mean * std_normal_cdf(d) + sd * std_normal_pdf(d), Method::bachelier, {}};
}

PriceResult price_kirk(const SpreadContract& c) {
    c.validate();
    if (c.k < 0.0) throw DomainError("kirk: k must be >= 0 (use parity_normalize)");
    const double a = c.f2 + c.k;
    if (!(a > 0.0)) throw DomainError("kirk: f2 + k must be > 0");
    const double w = c.f2 / a;
    const double s1 = c.sigma1, s2 = c.sigma2;
    const double sk = std::sqrt(std::max(s1 * s1 - 2.0 * w * c.rho * s1 * s2 + w * w * s2 * s2, 0.0));
    if (!(sk > 0.0)) return {intrinsic(c), Method::kirk, {}};
    const double st = sk * std::sqrt(c.t);
    const double d1 = (std::log(c.f1 / a) + 0.5 * st * st) / st;
    const double d2 = d1 - st;
    return {c.discount() * (c.f1 * std_normal_cdf(d1) - a * std_normal_cdf(d2)), Method::kirk, {}};
}

PriceResult price_margrabe(const SpreadContract& c) {
    c.validate();
    if (c.k != 0.0) throw DomainError("margrabe: k must be 0");
    if (!(c.f2 > 0.0)) throw DomainError("margrabe: f2 must be > 0");
    const double s1 = c.sigma1, s2 = c.sigma2;
    const double sm = std::sqrt(std::max(s1 * s1 + s2 * s2 - 2.0 * c.rho * s1 * s2, 0.0));
    if (!(sm > 0.0)) return {intrinsic(c), Method::margrabe, {}};
    const double st = sm * std::sqrt(c.t);
    // ln(g1 F1bar / (alpha F2bar)) = ln(F1/F2) + sm^2 T / 2
    const double d1 = (std::log(c.f1 / c.f2) + 0.5 * st * st) / st;
    const double d2 = d1 - st;
    return {c.discount() * (c.f1 * std_normal_cdf(d1) - c.f2 * std_normal_cdf(d2)), Method::margrabe, {}};
}

PriceResult price_bjerksund_stensland(const SpreadContract& c) {
    c.validate();
    if (c.k < 0.0) throw DomainError("bjerksund_stensland: k must be >= 0 (use parity_normalize)");
    if (!(c.f2 > 0.0)) throw DomainError("bjerksund_stensland: f2 must be > 0");
    const double a = c.f2 + c.k;
    const double b = c.f2 / a;
    const double s1 = c.sigma1, s2 = c.sigma2, rho = c.rho, t = c.t;
    const double s = std::sqrt(std::max(s1 * s1 + b * b * s2 * s2 - 2.0 * rho * b * s1 * s2, 0.0));
    if (!(s > 0.0)) throw DomainError("bjerksund_stensland: degenerate effective volatility");
    const double l = std::log(c.f1 / a);
    const double den = s * std::sqrt(t);
    const double d1 = (l + (0.5 * s1 * s1 - rho * b * s1 * s2 + 0.5 * b * b * s2 * s2) * t) / den;
    const double d2 = (l + (-0.5 * s1 * s1 + rho * s1 * s2 + 0.5 * b * b * s2 * s2 - b * s2 * s2) * t) / den;
    const double d3 = (l + (-0.5 * s1 * s1 + 0.5 * b * b * s2 * s2) * t) / den;
    const double v = c.discount() *
                     (c.f1 * std_normal_cdf(d1) - c.f2 * std_normal_cdf(d2) - c.k * std_normal_cdf(d3));
    return {v, Method::bjerksund_stensland, {}};
}

}  // namespace spread
