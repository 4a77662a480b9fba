// SPDX-License-Identifier: MIT
#include "spread/contract.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spread/errors.hpp"

namespace spread {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw DomainError(std::string("invalid contract: ") + what);
}

}  // namespace

void SpreadContract::validate() const {
    require(std::isfinite(f1) && std::isfinite(f2) && std::isfinite(sigma1) && std::isfinite(sigma2) &&
                std::isfinite(rho) && std::isfinite(r) && std::isfinite(t) && std::isfinite(k),
            "non-finite field");
    require(f1 > 0.0, "f1 must be > 0");
    require(f2 >= 0.0, "f2 must be >= 0");
    require(sigma1 >= 0.0 && sigma2 >= 0.0, "volatilities must be >= 0");
    require(std::abs(rho) <= 1.0, "|rho| must be <= 1");
    require(t > 0.0, "t must be > 0");
}

double SpreadContract::discount() const { return std::exp(-r * t); }
double SpreadContract::alpha() const { return std::exp(rho * sigma1 * sigma2 * t); }
double SpreadContract::g1() const { return std::exp(sigma1 * sigma1 * t); }
double SpreadContract::g2() const { return std::exp(sigma2 * sigma2 * t); }
double SpreadContract::f1_bar() const { return f1 * std::exp(-0.5 * sigma1 * sigma1 * t); }
double SpreadContract::f2_bar() const { return f2 * std::exp(-0.5 * sigma2 * sigma2 * t); }

SpreadContract from_spots(const SpotQuote& q, double r, double t, double sigma1, double sigma2,
                          double rho, double k) {
    if (!(q.s1_0 > 0.0)) throw DomainError("invalid spot quote: s1_0 must be > 0");
    if (!(q.s2_0 >= 0.0)) throw DomainError("invalid spot quote: s2_0 must be >= 0");
    SpreadContract c;
    c.f1 = q.s1_0 * std::exp((r - q.r_div1) * t);
    c.f2 = q.s2_0 * std::exp((r - q.r_div2) * t);
    c.sigma1 = sigma1;
    c.sigma2 = sigma2;
    c.rho = rho;
    c.r = r;
    c.t = t;
    c.k = k;
    c.validate();
    return c;
}

ParityResult parity_swap(const SpreadContract& c) {
    // (S1 - S2 - K)^+ = (S2 - S1 + K)^+ + (S1 - S2 - K)
    ParityResult out;
    out.contract = c;
    out.contract.f1 = c.f2;
    out.contract.sigma1 = c.sigma2;
    out.contract.f2 = c.f1;
    out.contract.sigma2 = c.sigma1;
    out.contract.k = -c.k;
    out.cash_adjust = c.discount() * (c.f1 - c.f2 - c.k);
    out.swapped = true;
    return out;
}

ParityResult parity_normalize(const SpreadContract& c) {
    if (c.k >= 0.0) return ParityResult{c, 0.0, false};
    return parity_swap(c);
}

SpreadContract sum_option_transform(const SpreadContract& c) {
    const double s2 = c.sigma1 * c.sigma1 - 2.0 * c.rho * c.sigma1 * c.sigma2 + c.sigma2 * c.sigma2;
    const double s = std::sqrt(std::max(s2, 0.0));
    if (!(s > 0.0)) throw DomainError("sum_option_transform: degenerate ratio volatility (sigma = 0)");
    // Under the S2 numeraire: S1/S2 has vol s, K/S2 has vol sigma2, corr (sigma2 - rho sigma1)/s,
    // and the constant leg becomes a cash strike of -F2.
    SpreadContract out = c;
    out.f1 = c.f1;
    out.sigma1 = s;
    out.f2 = c.k;
    out.sigma2 = c.sigma2;
    out.rho = std::clamp((c.sigma2 - c.rho * c.sigma1) / s, -1.0, 1.0);
    out.k = -c.f2;
    return out;
}

}  // namespace spread
