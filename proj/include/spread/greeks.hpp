// SPDX-License-Identifier: MIT
#pragma once

#include <array>

#include "spread/contract.hpp"
#include "spread/pricers.hpp"

namespace spread {

/// Extended formula with the slope fractions b_i and the strike offsets c_i = a_i - F2 held constant,
/// so a_i = F2 + c_i under any bump (a_i' = 1 in F2, independent of sigma, T, rho).
struct FrozenExtended {
    SpreadContract contract;
    std::array<double, 3> b{};
    std::array<double, 3> c{};

    double a(int i) const { return contract.f2 + c[static_cast<std::size_t>(i)]; }
};

FrozenExtended freeze(const SpreadContract& c, const ExtendedParams& p);

/// Price of the frozen formula at fx.contract.
double price_frozen(const FrozenExtended& fx);

struct GreeksReport {
    double price = 0.0;
    double d_f1 = 0.0, d_f2 = 0.0;
    double d2_f1f1 = 0.0, d2_f1f2 = 0.0, d2_f2f2 = 0.0;
    double vega1 = 0.0, vega2 = 0.0;
    double theta_t = 0.0;   // dPi/dT (maturity, not calendar time)
    double rho_r = 0.0;     // dPi/dr
    double rho_corr = 0.0;  // dPi/drho
    double i_val = 0.0, j_val = 0.0, h_val = 0.0;
    double sbar1 = 0.0, sbar2 = 0.0, sbar3 = 0.0;
};

GreeksReport greeks_closed_form(const FrozenExtended& fx);

/// Fourth-order central differences of price_frozen (mixed F1-F2 term second order).
/// Steps: rel_step * F_i, sigma_i, T; rel_step absolute for r, rho.
GreeksReport greeks_finite_difference(const FrozenExtended& fx, double rel_step = 1e-4);

struct PdeResiduals {
    double res1 = 0.0;  // forward PDE: 1/2 s1^2 F1^2 P11 + rho s1 s2 F1 F2 P12 + 1/2 s2^2 F2^2 P22 - P_T - r P
    double res2 = 0.0;  // homogeneity: 1/2 s1 P_s1 + 1/2 s2 P_s2 + r P_r - T P_T
};

PdeResiduals pde_residuals(const GreeksReport& g, const SpreadContract& c);
PdeResiduals pde_residuals(const FrozenExtended& fx);

}  // namespace spread
