// SPDX-License-Identifier: MIT
#include <algorithm>
#include <array>
#include <cmath>

#include "spread/errors.hpp"
#include "spread/math.hpp"
#include "spread/pricers.hpp"

namespace spread {

namespace {

struct Local {
    double f = 0.0;
    double g_d = 0.0, g_t = 0.0;
    double h_dd = 0.0, h_dt = 0.0, h_tt = 0.0;
};

// Objective with analytic gradient and Hessian in (d, theta).
class CdObjective {
public:
    explicit CdObjective(const SpreadContract& c)
        : c_(c), df_(c.discount()), phi_(std::acos(c.rho)), s1_(c.sigma1 * std::sqrt(c.t)),
          s2_(c.sigma2 * std::sqrt(c.t)) {}

    double value(double theta, double d) const {
        const double u1 = d - s1_ * std::cos(theta - phi_);
        const double u2 = d - s2_ * std::cos(theta);
        return df_ * (c_.f1 * std_normal_cdf(u1) - c_.f2 * std_normal_cdf(u2) - c_.k * std_normal_cdf(d));
    }

    Local eval(double theta, double d) const {
        const double c1 = std::cos(theta - phi_), sn1 = std::sin(theta - phi_);
        const double c2 = std::cos(theta), sn2 = std::sin(theta);
        const double u1 = d - s1_ * c1;
        const double u2 = d - s2_ * c2;
        const double p1 = c_.f1 * std_normal_pdf(u1);
        const double p2 = c_.f2 * std_normal_pdf(u2);
        const double p3 = c_.k * std_normal_pdf(d);
        const double a1 = s1_ * sn1, a2 = s2_ * sn2;
        Local l;
        l.f = value(theta, d);
        l.g_d = df_ * (p1 - p2 - p3);
        l.g_t = df_ * (p1 * a1 - p2 * a2);
        l.h_dd = df_ * (-u1 * p1 + u2 * p2 + d * p3);
        l.h_dt = df_ * (-u1 * p1 * a1 + u2 * p2 * a2);
        l.h_tt = df_ * (p1 * (-u1 * a1 * a1 + s1_ * c1) - p2 * (-u2 * a2 * a2 + s2_ * c2));
        return l;
    }

    double scale() const { return df_ * (c_.f1 + c_.f2 + std::abs(c_.k)); }

private:
    SpreadContract c_;
    double df_, phi_, s1_, s2_;
};

struct Run {
    double theta, d, value, residual;
    int iterations;
};

Run ascend(const CdObjective& obj, double theta, double d) {
    const double scale = obj.scale();
    Local l = obj.eval(theta, d);
    int it = 0;
    for (; it < 200; ++it) {
        const double gnorm = std::hypot(l.g_d, l.g_t);
        if (gnorm <= 1e-14 * scale) break;

        double pd, pt;
        const double det = l.h_dd * l.h_tt - l.h_dt * l.h_dt;
        if (l.h_dd < 0.0 && det > 0.0) {
            // Newton: solve H p = -g
            pd = -(l.h_tt * l.g_d - l.h_dt * l.g_t) / det;
            pt = -(-l.h_dt * l.g_d + l.h_dd * l.g_t) / det;
        } else {
            const double hn = std::max(std::hypot(std::hypot(l.h_dd, l.h_tt), std::hypot(l.h_dt, l.h_dt)),
                                       1e-3 * scale);
            pd = l.g_d / hn;
            pt = l.g_t / hn;
        }
        // keep steps bounded in angle and in normal units
        const double len = std::hypot(pd, pt);
        if (len > 1.0) {
            pd /= len;
            pt /= len;
        }

        double step = 1.0;
        bool moved = false;
        for (int ls = 0; ls < 60; ++ls) {
            const double nt = theta + step * pt, nd = d + step * pd;
            const double nv = obj.value(nt, nd);
            if (nv >= l.f) {
                moved = nt != theta || nd != d;
                theta = nt;
                d = nd;
                break;
            }
            step *= 0.5;
        }
        if (!moved) break;
        l = obj.eval(theta, d);
    }
    return {theta, d, l.f, std::hypot(l.g_d, l.g_t) / scale, it};
}

}  // namespace

double cd_lower_bound(const SpreadContract& c, double theta, double d) {
    c.validate();
    return CdObjective(c).value(theta, d);
}

CdPoint bs_equivalent_params(const SpreadContract& c) {
    c.validate();
    if (c.k < 0.0) throw DomainError("bs_equivalent_params: k must be >= 0");
    if (!(c.f2 > 0.0)) throw DomainError("bs_equivalent_params: f2 must be > 0");
    const double a = c.f2 + c.k;
    const double b = c.f2 / a;
    const double s1 = c.sigma1, s2 = c.sigma2;
    const double cphi = c.rho;
    const double sphi = std::sqrt(std::max(1.0 - c.rho * c.rho, 0.0));
    const double s = std::sqrt(std::max(s1 * s1 + s2 * s2 * b * b - 2.0 * s1 * s2 * b * cphi, 0.0));
    if (!(s > 0.0)) throw DomainError("bs_equivalent_params: degenerate effective volatility");
    CdPoint p;
    p.theta = std::atan2(-s1 * sphi / s, (s2 * b - s1 * cphi) / s);
    p.d = (std::log(c.f1 / a) - 0.5 * s1 * s1 * c.t + 0.5 * b * b * s2 * s2 * c.t) / (s * std::sqrt(c.t));
    return p;
}

CdSolution price_carmona_durrleman(const SpreadContract& c) {
    c.validate();
    if (!(std::abs(c.rho) < 1.0)) throw DomainError("carmona_durrleman: |rho| must be < 1");
    const CdPoint p0 = bs_equivalent_params(c);
    const CdObjective obj(c);

    constexpr std::array<double, 5> offsets{0.0, 0.5, -0.5, 1.0, -1.0};
    Run best{p0.theta, p0.d, obj.value(p0.theta, p0.d), INFINITY, 0};
    int total = 0;
    for (double off : offsets) {
        const Run r = ascend(obj, p0.theta + off, p0.d);
        total += r.iterations;
        if (r.value > best.value || (r.value == best.value && r.residual < best.residual)) best = r;
    }
    if (!(best.residual <= 1e-9)) {
        throw ConvergenceError("carmona_durrleman: first-order conditions not met", best.theta, best.d,
                               best.value, best.residual);
    }
    return {best.theta, best.d, best.residual, best.value, total};
}

}  // namespace spread
