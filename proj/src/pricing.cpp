// SPDX-License-Identifier: MIT
#include <array>
#include <utility>

#include "spread/errors.hpp"
#include "spread/pricers.hpp"

namespace spread {

namespace {

constexpr std::array<std::pair<Method, std::string_view>, 9> kNames{{
    {Method::bachelier, "bachelier"},
    {Method::kirk, "kirk"},
    {Method::margrabe, "margrabe"},
    {Method::bjerksund_stensland, "bs"},
    {Method::carmona_durrleman, "cd"},
    {Method::discretized, "discretized"},
    {Method::extended, "extended"},
    {Method::quadrature, "quadrature"},
    {Method::monte_carlo, "mc"},
}};

}  // namespace

std::string_view method_name(Method m) {
    for (const auto& [method, name] : kNames)
        if (method == m) return name;
    return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
    for (const auto& [method, tag] : kNames)
        if (tag == name) return method;
    if (name == "bjerksund-stensland" || name == "bjerksund_stensland") return Method::bjerksund_stensland;
    if (name == "carmona-durrleman" || name == "carmona_durrleman") return Method::carmona_durrleman;
    if (name == "monte-carlo" || name == "monte_carlo") return Method::monte_carlo;
    if (name == "disc") return Method::discretized;
    if (name == "quad") return Method::quadrature;
    return std::nullopt;
}

PriceResult price(const SpreadContract& c, Method m, const PricingOptions& opts) {
    switch (m) {
        case Method::bachelier: return price_bachelier(c);
        case Method::kirk: return price_kirk(c);
        case Method::margrabe: return price_margrabe(c);
        case Method::bjerksund_stensland: return price_bjerksund_stensland(c);
        case Method::carmona_durrleman: {
            const CdSolution s = price_carmona_durrleman(c);
            return {s.value, m, CdDiagnostics{s.theta_star, s.d_star, s.foc_residual, s.iterations}};
        }
        case Method::discretized: return price_discretized(c, opts.disc);
        case Method::extended:
            return price_extended(c, opts.extended ? *opts.extended : default_extended_params(c));
        case Method::quadrature: return price_quadrature_oracle(c, opts.quad_tol);
        case Method::monte_carlo: return price_monte_carlo(c, opts.mc);
    }
    throw DomainError("unknown pricing method");
}

NormalizedPrice price_normalized(const SpreadContract& c, Method m, const PricingOptions& opts) {
    c.validate();
    const ParityResult n = parity_normalize(c);
    NormalizedPrice out;
    out.result = price(n.contract, m, opts);
    out.raw_value = out.result.value;
    out.cash_adjust = n.cash_adjust;
    out.swapped = n.swapped;
    out.result.value += n.cash_adjust;
    return out;
}

}  // namespace spread
