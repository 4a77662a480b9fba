// SPDX-License-Identifier: MIT
#include "spread/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spread/errors.hpp"

namespace spread {

namespace {

struct CurveWeights {
    double log_num;    // log of the coefficient in front of e^{s2 sqrt(T) x}
    double log_denom;  // log of the F1-side normalizer
};

// log weights: C1 (alpha F2bar, g1 F1bar), C2 (g2 F2bar, alpha F1bar), C3 (F2bar, F1bar)
CurveWeights weights(const SpreadContract& c, CurveId id) {
    const double t = c.t;
    const double la = c.rho * c.sigma1 * c.sigma2 * t;
    const double lg1 = c.sigma1 * c.sigma1 * t;
    const double lg2 = c.sigma2 * c.sigma2 * t;
    const double lf1b = std::log(c.f1) - 0.5 * lg1;
    const double lf2b = c.f2 > 0.0 ? std::log(c.f2) - 0.5 * lg2 : -INFINITY;
    switch (id) {
        case CurveId::C1: return {la + lf2b, lg1 + lf1b};
        case CurveId::C2: return {lg2 + lf2b, la + lf1b};
        case CurveId::C3: break;
    }
    return {lf2b, lf1b};
}

double log_add(double a, double b) {
    const double hi = std::max(a, b);
    if (hi == -INFINITY) return hi;
    return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

void require_sigma1(const SpreadContract& c, const char* fn) {
    if (!(c.sigma1 > 0.0)) throw DomainError(std::string(fn) + ": sigma1 must be > 0");
}

}  // namespace

double curve_y(const SpreadContract& c, CurveId id, double x) {
    c.validate();
    require_sigma1(c, "curve_y");
    const double st = std::sqrt(c.t);
    const CurveWeights w = weights(c, id);
    const double lead = w.log_num + c.sigma2 * st * x;
    double log_arg;
    if (c.k > 0.0) {
        log_arg = log_add(lead, std::log(c.k));
    } else {
        const double arg = std::exp(lead) + c.k;
        if (!(arg > 0.0)) throw DomainError("curve_y: non-positive logarithm argument");
        log_arg = std::log(arg);
    }
    return (log_arg - w.log_denom) / (c.sigma1 * st);
}

double curve_left_limit(const SpreadContract& c, CurveId id) {
    c.validate();
    require_sigma1(c, "curve_left_limit");
    if (!(c.k > 0.0)) throw DomainError("curve_left_limit: k must be > 0");
    return (std::log(c.k) - weights(c, id).log_denom) / (c.sigma1 * std::sqrt(c.t));
}

double slope_fraction(const SpreadContract& c, CurveId id, double x) {
    c.validate();
    if (c.k < 0.0) throw DomainError("slope_fraction: k must be >= 0");
    if (c.f2 == 0.0) return 0.0;
    if (c.k == 0.0) return 1.0;
    // logistic of z = log(w F2bar) + s2 sqrt(T) x - log K
    const double z = weights(c, id).log_num + c.sigma2 * std::sqrt(c.t) * x - std::log(c.k);
    if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
    const double e = std::exp(z);
    return e / (1.0 + e);
}

double shift_coefficient(const SpreadContract& c, CurveId id, double x) {
    c.validate();
    const double t = c.t;
    const double s2 = c.sigma2;
    const double base = -s2 * std::sqrt(t) * x;
    double e = 0.0;
    switch (id) {
        case CurveId::C1: e = base - c.rho * c.sigma1 * s2 * t + 0.5 * s2 * s2 * t; break;
        case CurveId::C2: e = base - 0.5 * s2 * s2 * t; break;
        case CurveId::C3: e = base + 0.5 * s2 * s2 * t; break;
    }
    return c.f2 + c.k * std::exp(e);
}

double z0(const SpreadContract& c, CurveId id, double q, double a, double h) {
    c.validate();
    require_sigma1(c, "z0");
    if (!(a > 0.0)) throw DomainError("z0: a must be > 0");
    const double t = c.t;
    const double st = std::sqrt(t);
    const double s1 = c.sigma1;
    const double common = q * st * h - 0.5 * q * q * t;
    switch (id) {
        case CurveId::C1:
            return (std::log(a / c.f1) + c.rho * s1 * q * t + common) / (s1 * st) - 0.5 * s1 * st;
        case CurveId::C2:
            return (std::log(a / c.f1) + q * c.sigma2 * t + common) / (s1 * st) +
                   (0.5 * s1 - c.rho * c.sigma2) * st;
        case CurveId::C3: break;
    }
    return (std::log(a / c.f1) + common) / (s1 * st) + 0.5 * s1 * st;
}

LineApprox line_for_curve(const SpreadContract& c, CurveId id, double anchor_x) {
    require_sigma1(c, "line_for_curve");
    const double b = slope_fraction(c, id, anchor_x);
    const double a = shift_coefficient(c, id, anchor_x);
    LineApprox line;
    line.kappa = c.sigma2 / c.sigma1 * b;
    line.delta = z0(c, id, c.sigma2 * b, a, anchor_x) - line.kappa * anchor_x;
    return line;
}

}  // namespace spread
