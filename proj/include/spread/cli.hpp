// SPDX-License-Identifier: MIT
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spread/greeks.hpp"
#include "spread/pricers.hpp"
#include "spread/table.hpp"

namespace spread::cli {

enum class Format { text, json, csv, markdown };

std::optional<Format> parse_format(std::string_view name);

/// 17 significant digits (round-trips a double).
std::string fmt17(double v);
/// Fixed 4 decimals, as the published tables.
std::string fmt4(double v);

struct PriceReport {
    SpreadContract contract;
    Method method = Method::bjerksund_stensland;
    PricingOptions options;
    NormalizedPrice price;
};

struct CompareRow {
    Method method = Method::bjerksund_stensland;
    double value = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    std::string error;  // non-empty when the method failed on this contract
};

struct CompareReport {
    SpreadContract contract;
    double oracle = 0.0;
    std::vector<CompareRow> rows;  // sorted by abs_err, failures last
    bool ordering_checked = false;
    bool ordering_ok = true;  // BS <= CD
};

struct GreeksOutput {
    SpreadContract contract;
    ExtendedParams params;
    GreeksReport analytic;
    GreeksReport numeric;
    PdeResiduals pde;
};

std::string render_price(const PriceReport& r, Format f);
std::string render_table(const TableResult& r, Format f);
std::string render_compare(const CompareReport& r, Format f);
std::string render_greeks(const GreeksOutput& g, Format f);

CompareReport run_compare(const SpreadContract& c, const std::vector<Method>& methods, const PricingOptions& opts);

/// Full command line (argv[0] is the program name). Exit codes: 0 ok, 1 domain/convergence, 2 usage.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spread::cli
