// SPDX-License-Identifier: MIT
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "spread/cli.hpp"
#include "spread/errors.hpp"

namespace spread::cli {

namespace {

struct Shared {
    SpreadContract contract{112.22, 103.05, 0.1, 0.15, 0.0, 0.05, 1.0, 0.0};
    std::string method = "bs";
    std::string format = "text";
    std::uint64_t seed = 42;
    std::uint64_t paths = 100000;
    bool antithetic = false;
    double disc_b = 5.0;
    int disc_n = 3000;
    double quad_tol = 1e-11;
    std::optional<double> lambda, mu, gamma;
};

const std::set<std::string> kFlags{"antithetic", "include-zero-strike"};

// Contract flags, so `table` can tell which ones were given explicitly.
struct ContractOptions {
    std::vector<std::pair<CLI::Option*, double SpreadContract::*>> opts;
};

ContractOptions add_shared(CLI::App* app, Shared& s, bool with_contract = true) {
    ContractOptions co;
    if (with_contract) {
        auto add = [&](const char* name, double SpreadContract::*field, const char* desc) {
            co.opts.emplace_back(app->add_option(name, s.contract.*field, desc)->capture_default_str(), field);
        };
        add("--f1", &SpreadContract::f1, "Forward of asset 1");
        add("--f2", &SpreadContract::f2, "Forward of asset 2");
        add("--sigma1", &SpreadContract::sigma1, "Volatility of asset 1");
        add("--sigma2", &SpreadContract::sigma2, "Volatility of asset 2");
        add("--rho", &SpreadContract::rho, "Correlation");
        add("--r", &SpreadContract::r, "Continuously compounded rate");
        add("--t", &SpreadContract::t, "Maturity in years");
        add("--k", &SpreadContract::k, "Strike (negative strikes are priced through parity)");
    }
    app->add_option("--format", s.format, "text|json|csv|markdown")
        ->check(CLI::IsMember({"text", "json", "csv", "markdown", "md"}))
        ->capture_default_str();
    app->add_option("--seed", s.seed, "Monte Carlo seed")->capture_default_str();
    app->add_option("--paths", s.paths, "Monte Carlo paths")->capture_default_str();
    app->add_flag("--antithetic", s.antithetic, "Antithetic Monte Carlo pairs");
    app->add_option("--disc-b", s.disc_b, "Discretized pricer half-width")->capture_default_str();
    app->add_option("--disc-n", s.disc_n, "Discretized pricer interval count")->capture_default_str();
    app->add_option("--quad-tol", s.quad_tol, "Quadrature absolute tolerance")->capture_default_str();
    app->add_option("--lambda", s.lambda, "Extended formula anchor for C1");
    app->add_option("--mu", s.mu, "Extended formula anchor for C2");
    app->add_option("--gamma", s.gamma, "Extended formula anchor for C3");
    app->add_option("--config", "key=value file; command-line flags win")->check(CLI::ExistingFile);
    return co;
}

Method require_method(const std::string& name) {
    const auto m = parse_method(name);
    if (!m) throw CLI::ValidationError("--method", "unknown method '" + name + "'");
    return *m;
}

std::vector<Method> require_methods(const std::vector<std::string>& names) {
    std::vector<Method> out;
    for (const auto& n : names) out.push_back(require_method(n));
    return out;
}

PricingOptions options_from(const Shared& s) {
    PricingOptions o;
    o.disc = {s.disc_b, s.disc_n};
    o.mc = {s.paths, s.seed, s.antithetic};
    o.quad_tol = s.quad_tol;
    const int given = int(s.lambda.has_value()) + int(s.mu.has_value()) + int(s.gamma.has_value());
    if (given == 3) {
        o.extended = ExtendedParams{*s.lambda, *s.mu, *s.gamma};
    } else if (given != 0) {
        throw CLI::ValidationError("--lambda/--mu/--gamma", "give all three anchors or none");
    }
    return o;
}

Format format_of(const Shared& s) { return *parse_format(s.format); }

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

bool has_flag(const std::vector<std::string>& args, const std::string& flag) {
    return std::any_of(args.begin(), args.end(),
                       [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
}

// Appends key=value entries of the --config file that the command line does not already set.
void merge_config(std::vector<std::string>& args, CLI::App& app) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
        if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
    }
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) throw CLI::FileError::Missing(path);

    CLI::App* sub = nullptr;
    for (const auto& a : args)
        for (CLI::App* s : app.get_subcommands({}))
            if (!sub && s->get_name() == a) sub = s;
    if (!sub) return;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty() || line.front() == '[') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw CLI::ConversionError(path + ":" + std::to_string(lineno) + ": expected key=value");
        std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.rfind("--", 0) == 0) key = key.substr(2);
        const std::string flag = "--" + key;
        if (key == "config") continue;
        bool known_elsewhere = false;
        for (CLI::App* s : app.get_subcommands({}))
            if (s->get_option_no_throw(flag)) known_elsewhere = true;
        if (!known_elsewhere) throw CLI::ConversionError(path + ": unknown key '" + key + "'");
        if (!sub->get_option_no_throw(flag) || has_flag(args, flag)) continue;
        if (kFlags.count(key)) {
            if (value == "true" || value == "1" || value == "yes") args.push_back(flag);
        } else {
            args.push_back(flag);
            args.push_back(value);
        }
    }
}

GreeksOutput compute_greeks(const SpreadContract& c, const ExtendedParams& p, double rel_step) {
    const FrozenExtended fx = freeze(c, p);
    GreeksOutput g;
    g.contract = c;
    g.params = p;
    g.analytic = greeks_closed_form(fx);
    g.numeric = greeks_finite_difference(fx, rel_step);
    g.pde = pde_residuals(g.analytic, c);
    return g;
}

}  // namespace

CompareReport run_compare(const SpreadContract& c, const std::vector<Method>& methods, const PricingOptions& opts) {
    CompareReport r;
    r.contract = c;
    r.oracle = price_normalized(c, Method::quadrature, opts).result.value;
    std::optional<double> bs, cd;
    for (Method m : methods) {
        CompareRow row;
        row.method = m;
        try {
            row.value = price_normalized(c, m, opts).result.value;
            row.abs_err = std::abs(row.value - r.oracle);
            row.rel_err = r.oracle != 0.0 ? row.abs_err / std::abs(r.oracle) : (row.abs_err == 0.0 ? 0.0 : INFINITY);
            if (m == Method::bjerksund_stensland) bs = row.value;
            if (m == Method::carmona_durrleman) cd = row.value;
        } catch (const Error& e) {
            row.error = e.what();
        }
        r.rows.push_back(row);
    }
    std::stable_sort(r.rows.begin(), r.rows.end(), [](const CompareRow& a, const CompareRow& b) {
        if (a.error.empty() != b.error.empty()) return a.error.empty();
        return a.abs_err < b.abs_err;
    });
    if (bs && cd) {
        r.ordering_checked = true;
        r.ordering_ok = *cd >= *bs - 1e-10;
    }
    return r;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spread option pricing: closed forms, reference pricers, Greeks and benchmark tables", "spreadopt"};
    app.require_subcommand(1);

    Shared price_s, greeks_s, table_s, compare_s;

    CLI::App* price_cmd = app.add_subcommand("price", "Price one contract");
    add_shared(price_cmd, price_s);
    price_cmd->add_option("--method", price_s.method,
                          "bachelier|kirk|margrabe|bs|cd|discretized|extended|quadrature|mc")
        ->capture_default_str();

    CLI::App* greeks_cmd = app.add_subcommand("greeks", "Frozen-b Greeks of the extended formula");
    add_shared(greeks_cmd, greeks_s);
    std::string point = "default";
    double rel_step = 1e-4;
    greeks_cmd->add_option("--point", point, "default|bs anchor choice (overridden by --lambda/--mu/--gamma)")
        ->check(CLI::IsMember({"default", "bs"}))
        ->capture_default_str();
    greeks_cmd->add_option("--rel-step", rel_step, "Finite-difference relative step")->capture_default_str();

    CLI::App* table_cmd = app.add_subcommand("table", "Regenerate a K x rho benchmark table");
    const ContractOptions table_contract = add_shared(table_cmd, table_s);
    std::string preset = "table2";
    std::vector<std::string> table_methods;
    std::string reference = "discretized";
    std::vector<double> strikes, rhos;
    bool include_zero = false;
    unsigned threads = 0;
    table_cmd->add_option("--preset", preset, "table1|table2|table3|custom")->capture_default_str();
    table_cmd->add_option("--methods", table_methods, "Comma-separated method list")->delimiter(',');
    table_cmd->add_option("--reference", reference, "Reference method for error statistics")->capture_default_str();
    table_cmd->add_option("--strikes", strikes, "Comma-separated strikes")->delimiter(',');
    table_cmd->add_option("--rhos", rhos, "Comma-separated correlations")->delimiter(',');
    table_cmd->add_flag("--include-zero-strike", include_zero, "Count K = 0 cells in the statistics");
    table_cmd->add_option("--threads", threads, "Worker threads (0 = hardware)");

    CLI::App* compare_cmd = app.add_subcommand("compare", "Rank methods against the quadrature oracle");
    add_shared(compare_cmd, compare_s);
    std::vector<std::string> compare_methods;
    compare_cmd->add_option("--methods", compare_methods, "Comma-separated method list")->delimiter(',');

    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);

    try {
        merge_config(args, app);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (price_cmd->parsed()) {
            PriceReport r;
            r.contract = price_s.contract;
            r.method = require_method(price_s.method);
            r.options = options_from(price_s);
            r.price = price_normalized(r.contract, r.method, r.options);
            out << render_price(r, format_of(price_s));
            return 0;
        }
        if (greeks_cmd->parsed()) {
            const SpreadContract& c = greeks_s.contract;
            c.validate();
            if (c.k < 0.0) throw DomainError("greeks: k must be >= 0");
            const PricingOptions o = options_from(greeks_s);
            ExtendedParams p = point == "bs" ? bs_point_params(c) : default_extended_params(c);
            if (o.extended) p = *o.extended;
            out << render_greeks(compute_greeks(c, p, rel_step), format_of(greeks_s));
            return 0;
        }
        if (table_cmd->parsed()) {
            TableSpec spec = make_preset(preset);
            for (const auto& [opt, field] : table_contract.opts)
                if (opt->count() > 0) spec.base.*field = table_s.contract.*field;
            if (!table_methods.empty()) spec.methods = require_methods(table_methods);
            spec.reference = require_method(reference);
            if (!strikes.empty()) spec.strikes = strikes;
            if (!rhos.empty()) spec.rhos = rhos;
            spec.options = options_from(table_s);
            spec.include_zero_strike = include_zero;
            out << render_table(run_table(spec, threads), format_of(table_s));
            return 0;
        }
        if (compare_cmd->parsed()) {
            const SpreadContract& c = compare_s.contract;
            std::vector<Method> methods;
            if (compare_methods.empty()) {
                methods = {Method::bachelier, Method::kirk, Method::bjerksund_stensland, Method::carmona_durrleman,
                           Method::discretized, Method::extended, Method::monte_carlo};
                if (c.k == 0.0) methods.push_back(Method::margrabe);
            } else {
                methods = require_methods(compare_methods);
            }
            if (methods.size() < 2) throw CLI::ValidationError("--methods", "name at least two methods");
            const CompareReport r = run_compare(c, methods, options_from(compare_s));
            out << render_compare(r, format_of(compare_s));
            if (!r.ordering_ok) {
                err << "defect: Carmona-Durrleman value below Bjerksund-Stensland\n";
                return 1;
            }
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace spread::cli
