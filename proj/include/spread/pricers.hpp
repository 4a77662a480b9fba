// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "spread/contract.hpp"

namespace spread {

enum class Method {
    bachelier,
    kirk,
    margrabe,
    bjerksund_stensland,
    carmona_durrleman,
    discretized,
    extended,
    quadrature,
    monte_carlo,
};

/// Short CLI tag: bachelier, kirk, margrabe, bs, cd, discretized, extended, quadrature, mc.
std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

struct McDiagnostics {
    double std_error = 0.0;
    std::uint64_t paths = 0;
    std::uint64_t seed = 0;
    bool antithetic = false;
};

struct CdDiagnostics {
    double theta = 0.0;
    double d = 0.0;
    double foc_residual = 0.0;
    int iterations = 0;
};

struct DiscDiagnostics {
    double b = 0.0;
    int n = 0;
};

struct ExtendedDiagnostics {
    double lambda = 0.0;
    double mu = 0.0;
    double gamma = 0.0;
};

struct QuadDiagnostics {
    double error_estimate = 0.0;
};

using Diagnostics =
    std::variant<std::monostate, McDiagnostics, CdDiagnostics, DiscDiagnostics, ExtendedDiagnostics, QuadDiagnostics>;

struct PriceResult {
    double value = 0.0;
    Method method = Method::quadrature;
    Diagnostics diagnostics;
};

/// Anchor abscissae of the three boundary linearizations.
struct ExtendedParams {
    double lambda = 0.0;
    double mu = 0.0;
    double gamma = 0.0;
};

struct DiscretizationConfig {
    double b = 5.0;
    int n = 3000;
};

struct McConfig {
    std::uint64_t paths = 100000;
    std::uint64_t seed = 42;
    bool antithetic = false;
};

struct CdSolution {
    double theta_star = 0.0;
    double d_star = 0.0;
    double foc_residual = 0.0;
    double value = 0.0;
    int iterations = 0;
};

struct CdPoint {
    double theta = 0.0;
    double d = 0.0;
};

// Closed forms.
PriceResult price_bachelier(const SpreadContract& c);
PriceResult price_kirk(const SpreadContract& c);
PriceResult price_margrabe(const SpreadContract& c);
PriceResult price_bjerksund_stensland(const SpreadContract& c);

// Carmona-Durrleman lower bound over half-planes {Z sin(theta) + X cos(theta) <= d}.
double cd_lower_bound(const SpreadContract& c, double theta, double d);
CdPoint bs_equivalent_params(const SpreadContract& c);
/// Throws ConvergenceError (with the best point) when no start reaches the FOC tolerance.
CdSolution price_carmona_durrleman(const SpreadContract& c);

PriceResult price_discretized(const SpreadContract& c, const DiscretizationConfig& cfg = {});

// Generalized chord-linearized closed form.
PriceResult price_extended(const SpreadContract& c, const ExtendedParams& p);
/// Same price assembled through the I/J/H representation.
double price_extended_ijh(const SpreadContract& c, const ExtendedParams& p);
ExtendedParams default_extended_params(const SpreadContract& c);
/// The parameter point at which price_extended collapses to Bjerksund-Stensland.
ExtendedParams bs_point_params(const SpreadContract& c);

// Reference pricers.
PriceResult price_quadrature_oracle(const SpreadContract& c, double abs_tol = 1e-11);
PriceResult price_monte_carlo(const SpreadContract& c, const McConfig& cfg);

struct PricingOptions {
    DiscretizationConfig disc;
    McConfig mc;
    std::optional<ExtendedParams> extended;  // default_extended_params when empty
    double quad_tol = 1e-11;
};

/// Dispatch on method. No parity handling: contracts must satisfy the method's domain.
PriceResult price(const SpreadContract& c, Method m, const PricingOptions& opts = {});

struct NormalizedPrice {
    PriceResult result;    // value includes cash_adjust
    double raw_value = 0.0;  // price of the (possibly swapped) contract
    double cash_adjust = 0.0;
    bool swapped = false;
};

/// Routes k < 0 through parity_normalize. Extended parameters, if given, apply to the normalized contract.
NormalizedPrice price_normalized(const SpreadContract& c, Method m, const PricingOptions& opts = {});

}  // namespace spread
