// SPDX-License-Identifier: MIT
#pragma once

namespace spread {

/// European spread call on forwards: payoff (S1(T) - S2(T) - K)^+.
struct SpreadContract {
    double f1 = 0.0;      // forward of asset 1
    double f2 = 0.0;      // forward of asset 2
    double sigma1 = 0.0;
    double sigma2 = 0.0;
    double rho = 0.0;
    double r = 0.0;       // continuously compounded
    double t = 0.0;       // years
    double k = 0.0;       // any sign

    /// Throws DomainError unless sigma_i >= 0, t > 0, f1 > 0, f2 >= 0, |rho| <= 1 and all finite.
    void validate() const;

    double discount() const;
    double alpha() const;   // exp(rho s1 s2 T)
    double g1() const;      // exp(s1^2 T)
    double g2() const;      // exp(s2^2 T)
    double f1_bar() const;  // F1 exp(-s1^2 T / 2)
    double f2_bar() const;  // F2 exp(-s2^2 T / 2)

    bool operator==(const SpreadContract&) const = default;
};

struct SpotQuote {
    double s1_0 = 0.0;
    double s2_0 = 0.0;
    double r_div1 = 0.0;
    double r_div2 = 0.0;
};

SpreadContract from_spots(const SpotQuote& q, double r, double t, double sigma1, double sigma2,
                          double rho, double k);

struct ParityResult {
    SpreadContract contract;
    double cash_adjust = 0.0;
    bool swapped = false;
};

/// Unconditional swap of the legs: price(c) = price(swapped) + cash_adjust.
ParityResult parity_swap(const SpreadContract& c);

/// Identity for k >= 0, otherwise parity_swap.
ParityResult parity_normalize(const SpreadContract& c);

/// Spread contract whose price equals E[e^{-rT}(S1 + S2 - K)^+] for the legs of c.
/// The result has a negative strike (-F2); price it through parity_normalize.
SpreadContract sum_option_transform(const SpreadContract& c);

}  // namespace spread
