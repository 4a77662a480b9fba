// SPDX-License-Identifier: MIT
#include "spread/greeks.hpp"

#include <cmath>
#include <functional>

#include "spread/boundary.hpp"
#include "spread/errors.hpp"
#include "spread/math.hpp"

namespace spread {

namespace {

struct Terms {
    std::array<double, 3> a{}, sb{};
    double i = 0.0, j = 0.0, h = 0.0;
};

Terms terms(const FrozenExtended& fx) {
    const SpreadContract& c = fx.contract;
    const double s1 = c.sigma1, s2 = c.sigma2, rho = c.rho, t = c.t, st = std::sqrt(t);
    Terms out;
    for (int k = 0; k < 3; ++k) {
        const double b = fx.b[k];
        out.a[k] = fx.a(k);
        if (!(out.a[k] > 0.0)) throw DomainError("frozen extended: a_i must be > 0");
        const double v = s1 * s1 - 2.0 * rho * s1 * s2 * b + s2 * s2 * b * b;
        if (!(v > 0.0)) throw DomainError("frozen extended: degenerate effective volatility");
        out.sb[k] = std::sqrt(v);
    }
    const auto& b = fx.b;
    out.i = (std::log(c.f1 / out.a[0]) + (0.5 * s1 * s1 - rho * s1 * s2 * b[0] + 0.5 * s2 * s2 * b[0] * b[0]) * t) /
            (out.sb[0] * st);
    out.j = (std::log(c.f1 / out.a[1]) +
             (-0.5 * s1 * s1 + rho * s1 * s2 + 0.5 * s2 * s2 * b[1] * b[1] - s2 * s2 * b[1]) * t) /
            (out.sb[1] * st);
    out.h = (std::log(c.f1 / out.a[2]) + (-0.5 * s1 * s1 + 0.5 * s2 * s2 * b[2] * b[2]) * t) / (out.sb[2] * st);
    return out;
}

// Same formula without contract validation, so stencils may step slightly outside (e.g. rho past 1).
double frozen_value(const FrozenExtended& fx) {
    const SpreadContract& c = fx.contract;
    const Terms tm = terms(fx);
    return std::exp(-c.r * c.t) *
           (c.f1 * std_normal_cdf(tm.i) - c.f2 * std_normal_cdf(tm.j) - c.k * std_normal_cdf(tm.h));
}

}  // namespace

FrozenExtended freeze(const SpreadContract& c, const ExtendedParams& p) {
    c.validate();
    if (c.k < 0.0) throw DomainError("freeze: k must be >= 0");
    if (!(c.f2 > 0.0)) throw DomainError("freeze: f2 must be > 0");
    if (!(c.sigma1 > 0.0)) throw DomainError("freeze: sigma1 must be > 0");
    FrozenExtended fx;
    fx.contract = c;
    const std::array<double, 3> anchors{p.lambda, p.mu, p.gamma};
    const std::array<CurveId, 3> ids{CurveId::C1, CurveId::C2, CurveId::C3};
    for (int i = 0; i < 3; ++i) {
        fx.b[i] = slope_fraction(c, ids[i], anchors[i]);
        fx.c[i] = shift_coefficient(c, ids[i], anchors[i]) - c.f2;
    }
    return fx;
}

double price_frozen(const FrozenExtended& fx) {
    fx.contract.validate();
    return frozen_value(fx);
}

GreeksReport greeks_closed_form(const FrozenExtended& fx) {
    const SpreadContract& c = fx.contract;
    c.validate();
    if (!(c.f2 > 0.0) || c.k < 0.0) throw DomainError("greeks: need f2 > 0 and k >= 0");
    const Terms tm = terms(fx);
    const double f1 = c.f1, f2 = c.f2, k = c.k;
    const double s1 = c.sigma1, s2 = c.sigma2, rho = c.rho, t = c.t, r = c.r, st = std::sqrt(t);
    const double df = std::exp(-r * t);
    const auto& b = fx.b;
    const auto& sb = tm.sb;
    const double I = tm.i, J = tm.j, H = tm.h;
    const double pI = std_normal_pdf(I), pJ = std_normal_pdf(J), pH = std_normal_pdf(H);
    const double cI = std_normal_cdf(I), cJ = std_normal_cdf(J), cH = std_normal_cdf(H);
    // a_i'/a_i (equals b_i / F2 at the freezing point)
    const double q0 = 1.0 / tm.a[0], q1 = 1.0 / tm.a[1], q2 = 1.0 / tm.a[2];

    // common pieces: F phi / (sbar sqrt T) and F phi x / (sbar^2 T)
    const double u0 = f1 * pI / (sb[0] * st), u1 = f2 * pJ / (sb[1] * st), u2 = k * pH / (sb[2] * st);
    const double w0 = f1 * pI * I / (sb[0] * sb[0] * t), w1 = f2 * pJ * J / (sb[1] * sb[1] * t),
                 w2 = k * pH * H / (sb[2] * sb[2] * t);

    GreeksReport g;
    g.price = df * (f1 * cI - f2 * cJ - k * cH);
    g.i_val = I;
    g.j_val = J;
    g.h_val = H;
    g.sbar1 = sb[0];
    g.sbar2 = sb[1];
    g.sbar3 = sb[2];

    g.d_f1 = df * cI + df * (u0 - u1 - u2) / f1;
    g.d_f2 = -df * cJ - df * (u0 * q0 - u1 * q1 - u2 * q2);

    g.d2_f1f1 = 2.0 * df * pI / (sb[0] * st * f1) - df * (w0 - w1 - w2) / (f1 * f1) - df * (u0 - u1 - u2) / (f1 * f1);
    g.d2_f1f2 = -df * pI * q0 / (sb[0] * st) - df * pJ / (f1 * sb[1] * st) +
                df * (w0 * q0 - w1 * q1 - w2 * q2) / f1;
    g.d2_f2f2 = 2.0 * df * pJ / (sb[1] * st) * q1 -
                df * (w0 * q0 * q0 - w1 * q1 * q1 - w2 * q2 * q2) +
                df * (u0 * q0 * q0 - u1 * q1 * q1 - u2 * q2 * q2);

    // d sbar_i / d sigma_1 = (s1 - rho s2 b_i) / sbar_i, and so on
    const double e0 = s1 - rho * s2 * b[0], e1 = s1 - rho * s2 * b[1], e2 = s1 - rho * s2 * b[2];
    g.vega1 = df * (u0 * e0 * t + u1 * (s1 - rho * s2) * t + u2 * s1 * t) -
              df * (f1 * pI * I * e0 / (sb[0] * sb[0]) - f2 * pJ * J * e1 / (sb[1] * sb[1]) -
                    k * pH * H * e2 / (sb[2] * sb[2]));

    const double v0 = -rho * s1 * b[0] + s2 * b[0] * b[0], v1 = -rho * s1 * b[1] + s2 * b[1] * b[1],
                 v2 = -rho * s1 * b[2] + s2 * b[2] * b[2];
    g.vega2 = df * (u0 * v0 * t - u1 * (rho * s1 + s2 * b[1] * b[1] - 2.0 * s2 * b[1]) * t -
                    u2 * s2 * b[2] * b[2] * t) -
              df * (f1 * pI * I * v0 / (sb[0] * sb[0]) - f2 * pJ * J * v1 / (sb[1] * sb[1]) -
                    k * pH * H * v2 / (sb[2] * sb[2]));

    g.theta_t = -r * g.price +
                df * (u0 * (0.5 * s1 * s1 - rho * s1 * s2 * b[0] + 0.5 * s2 * s2 * b[0] * b[0]) -
                      u1 * (-0.5 * s1 * s1 + rho * s1 * s2 + 0.5 * s2 * s2 * b[1] * b[1] - s2 * s2 * b[1]) -
                      u2 * (-0.5 * s1 * s1 + 0.5 * s2 * s2 * b[2] * b[2])) -
                df * (f1 * pI * I - f2 * pJ * J - k * pH * H) / (2.0 * t);

    g.rho_r = -t * g.price;

    g.rho_corr = df * (-u0 * b[0] * s1 * s2 * t - u1 * s1 * s2 * t) +
                 df * s1 * s2 *
                     (f1 * pI * I * b[0] / (sb[0] * sb[0]) - f2 * pJ * J * b[1] / (sb[1] * sb[1]) -
                      k * pH * H * b[2] / (sb[2] * sb[2]));
    return g;
}

GreeksReport greeks_finite_difference(const FrozenExtended& fx, double rel_step) {
    if (!(rel_step > 1e-8 && rel_step < 1e-2)) throw ConfigError("greeks_finite_difference: rel_step out of range");
    fx.contract.validate();

    using Field = double SpreadContract::*;
    auto at = [&](std::initializer_list<std::pair<Field, double>> bumps) {
        FrozenExtended x = fx;
        for (const auto& [field, h] : bumps) x.contract.*field += h;
        return frozen_value(x);
    };
    // fourth-order central stencils: deep out of the money the price is strongly curved in rho and sigma
    auto first = [&](Field f, double h) {
        return (-at({{f, 2 * h}}) + 8.0 * at({{f, h}}) - 8.0 * at({{f, -h}}) + at({{f, -2 * h}})) / (12.0 * h);
    };
    auto second = [&](Field f, double h) {
        return (-at({{f, 2 * h}}) + 16.0 * at({{f, h}}) - 30.0 * at({}) + 16.0 * at({{f, -h}}) - at({{f, -2 * h}})) /
               (12.0 * h * h);
    };

    const SpreadContract& c = fx.contract;
    const double h1 = rel_step * c.f1, h2 = rel_step * c.f2;
    const double hs1 = rel_step * c.sigma1, hs2 = rel_step * c.sigma2, ht = rel_step * c.t;
    const Field F1 = &SpreadContract::f1, F2 = &SpreadContract::f2;

    GreeksReport g;
    g.price = at({});
    g.d_f1 = first(F1, h1);
    g.d_f2 = first(F2, h2);
    g.d2_f1f1 = second(F1, h1);
    g.d2_f2f2 = second(F2, h2);
    g.d2_f1f2 = (at({{F1, h1}, {F2, h2}}) - at({{F1, h1}, {F2, -h2}}) - at({{F1, -h1}, {F2, h2}}) +
                 at({{F1, -h1}, {F2, -h2}})) /
                (4.0 * h1 * h2);
    g.vega1 = hs1 > 0.0 ? first(&SpreadContract::sigma1, hs1) : 0.0;
    g.vega2 = hs2 > 0.0 ? first(&SpreadContract::sigma2, hs2) : first(&SpreadContract::sigma2, rel_step);
    g.theta_t = first(&SpreadContract::t, ht);
    g.rho_r = first(&SpreadContract::r, rel_step);
    g.rho_corr = first(&SpreadContract::rho, rel_step);

    const Terms tm = terms(fx);
    g.i_val = tm.i;
    g.j_val = tm.j;
    g.h_val = tm.h;
    g.sbar1 = tm.sb[0];
    g.sbar2 = tm.sb[1];
    g.sbar3 = tm.sb[2];
    return g;
}

PdeResiduals pde_residuals(const GreeksReport& g, const SpreadContract& c) {
    const double s1 = c.sigma1, s2 = c.sigma2;
    PdeResiduals out;
    out.res1 = std::abs(0.5 * s1 * s1 * c.f1 * c.f1 * g.d2_f1f1 + c.rho * s1 * c.f1 * s2 * c.f2 * g.d2_f1f2 +
                        0.5 * s2 * s2 * c.f2 * c.f2 * g.d2_f2f2 - g.theta_t - c.r * g.price);
    out.res2 = std::abs(0.5 * s1 * g.vega1 + 0.5 * s2 * g.vega2 + c.r * g.rho_r - c.t * g.theta_t);
    return out;
}

PdeResiduals pde_residuals(const FrozenExtended& fx) { return pde_residuals(greeks_closed_form(fx), fx.contract); }

}  // namespace spread
