// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spread/contract.hpp"
#include "spread/pricers.hpp"

namespace spread::cli {

struct TableSpec {
    std::string preset = "custom";
    std::vector<double> strikes;
    std::vector<double> rhos;
    SpreadContract base;
    std::vector<Method> methods;
    Method reference = Method::discretized;
    PricingOptions options;
    bool include_zero_strike = false;  // count K = 0 cells in the error statistics
};

/// table1, table2, table3 or custom (same grid and base as table2, caller edits). Throws ConfigError otherwise.
TableSpec make_preset(std::string_view name);

struct ErrorStats {
    double mean_rel_err = 0.0;
    double max_rel_err = 0.0;
    int cells_used = 0;
};

/// Row-major over (strike, rho).
struct MethodGrid {
    Method method = Method::discretized;
    std::vector<double> values;
    std::vector<double> std_errors;  // Monte Carlo only, zero otherwise
    std::vector<std::string> errors;  // per-cell failure message, empty when priced
    double seconds = 0.0;
    ErrorStats stats;
};

struct TableResult {
    TableSpec spec;
    MethodGrid reference;
    std::vector<MethodGrid> grids;  // one per spec.methods entry
};

/// Cells with reference >= 1e-6, finite values and (unless include_zero_strike) K != 0.
ErrorStats error_stats(const std::vector<double>& values, const std::vector<double>& reference,
                       const std::vector<double>& strikes, std::size_t n_rho, bool include_zero_strike);

/// Prices every cell (in parallel when threads != 1; results do not depend on scheduling).
MethodGrid price_grid(const TableSpec& spec, Method m, unsigned threads = 0);

TableResult run_table(const TableSpec& spec, unsigned threads = 0);

}  // namespace spread::cli
