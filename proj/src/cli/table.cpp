// SPDX-License-Identifier: MIT
#include "spread/table.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "spread/errors.hpp"
#include "spread/random.hpp"

namespace spread::cli {

TableSpec make_preset(std::string_view name) {
    TableSpec spec;
    spec.preset = std::string(name);
    spec.strikes = {-20.0, -10.0, 0.0, 5.0, 15.0, 25.0};
    spec.rhos = {-0.99, -0.5, 0.0, 0.3, 0.8, 0.99};
    spec.base = SpreadContract{112.22, 103.05, 0.1, 0.15, 0.0, 0.05, 1.0, 0.0};
    if (name == "table1") {
        spec.methods = {Method::monte_carlo, Method::discretized};
    } else if (name == "table2" || name == "custom") {
        spec.methods = {Method::discretized, Method::kirk, Method::bjerksund_stensland, Method::extended};
    } else if (name == "table3") {
        spec.base.sigma2 = 0.9;
        spec.methods = {Method::discretized, Method::kirk, Method::bjerksund_stensland, Method::extended};
    } else {
        throw ConfigError("unknown preset: " + std::string(name));
    }
    return spec;
}

ErrorStats error_stats(const std::vector<double>& values, const std::vector<double>& reference,
                       const std::vector<double>& strikes, std::size_t n_rho, bool include_zero_strike) {
    ErrorStats s;
    double sum = 0.0;
    for (std::size_t i = 0; i < values.size() && i < reference.size(); ++i) {
        const double k = strikes[i / n_rho];
        if (k == 0.0 && !include_zero_strike) continue;
        if (!(reference[i] >= 1e-6) || !std::isfinite(values[i])) continue;
        const double rel = std::abs(values[i] - reference[i]) / reference[i];
        sum += rel;
        s.max_rel_err = std::max(s.max_rel_err, rel);
        ++s.cells_used;
    }
    if (s.cells_used > 0) s.mean_rel_err = sum / s.cells_used;
    return s;
}

MethodGrid price_grid(const TableSpec& spec, Method m, unsigned threads) {
    const std::size_t nk = spec.strikes.size(), nr = spec.rhos.size(), n = nk * nr;
    MethodGrid g;
    g.method = m;
    g.values.assign(n, NAN);
    g.std_errors.assign(n, 0.0);
    g.errors.assign(n, {});

    auto work = [&](std::size_t idx) {
        const std::size_t ik = idx / nr, ir = idx % nr;
        SpreadContract c = spec.base;
        c.k = spec.strikes[ik];
        c.rho = spec.rhos[ir];
        PricingOptions opts = spec.options;
        opts.mc.seed = derive_seed(spec.options.mc.seed, ik, ir);
        try {
            const NormalizedPrice p = price_normalized(c, m, opts);
            g.values[idx] = p.result.value;
            if (const auto* mc = std::get_if<McDiagnostics>(&p.result.diagnostics)) g.std_errors[idx] = mc->std_error;
        } catch (const Error& e) {
            g.errors[idx] = e.what();
        }
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    const auto start = std::chrono::steady_clock::now();
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < n; i = next++) work(i);
            });
        for (auto& th : pool) th.join();
    }
    g.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return g;
}

TableResult run_table(const TableSpec& spec, unsigned threads) {
    if (spec.strikes.empty() || spec.rhos.empty()) throw ConfigError("table: empty strike or rho list");
    if (spec.methods.empty()) throw ConfigError("table: no methods");
    TableResult out;
    out.spec = spec;
    for (Method m : spec.methods) out.grids.push_back(price_grid(spec, m, threads));

    const auto it = std::find(spec.methods.begin(), spec.methods.end(), spec.reference);
    if (it != spec.methods.end()) {
        out.reference = out.grids[static_cast<std::size_t>(it - spec.methods.begin())];
    } else {
        out.reference = price_grid(spec, spec.reference, threads);
    }
    for (MethodGrid& g : out.grids) {
        g.stats = error_stats(g.values, out.reference.values, spec.strikes, spec.rhos.size(),
                              spec.include_zero_strike);
    }
    return out;
}

}  // namespace spread::cli
