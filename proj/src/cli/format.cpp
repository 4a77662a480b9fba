// SPDX-License-Identifier: MIT
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "spread/cli.hpp"

namespace spread::cli {

namespace {

using json = nlohmann::ordered_json;

std::string printf_str(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::string fmt_short(double v) { return printf_str("%g", v); }

json contract_json(const SpreadContract& c) {
    return json{{"f1", c.f1}, {"f2", c.f2}, {"sigma1", c.sigma1}, {"sigma2", c.sigma2},
                {"rho", c.rho}, {"r", c.r},   {"t", c.t},           {"k", c.k}};
}

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json diagnostics_json(const Diagnostics& d) {
    json j = json::object();
    if (const auto* mc = std::get_if<McDiagnostics>(&d)) {
        j = {{"std_error", mc->std_error}, {"paths", mc->paths}, {"seed", mc->seed}, {"antithetic", mc->antithetic}};
    } else if (const auto* cd = std::get_if<CdDiagnostics>(&d)) {
        j = {{"theta", cd->theta}, {"d", cd->d}, {"foc_residual", cd->foc_residual}, {"iterations", cd->iterations}};
    } else if (const auto* di = std::get_if<DiscDiagnostics>(&d)) {
        j = {{"b", di->b}, {"n", di->n}};
    } else if (const auto* ex = std::get_if<ExtendedDiagnostics>(&d)) {
        j = {{"lambda", ex->lambda}, {"mu", ex->mu}, {"gamma", ex->gamma}};
    } else if (const auto* q = std::get_if<QuadDiagnostics>(&d)) {
        j = {{"error_estimate", q->error_estimate}};
    }
    return j;
}

void diagnostics_text(std::ostringstream& os, const Diagnostics& d) {
    if (const auto* mc = std::get_if<McDiagnostics>(&d)) {
        os << "std_error   " << fmt17(mc->std_error) << "\n"
           << "paths       " << mc->paths << (mc->antithetic ? " (antithetic)" : "") << "\n"
           << "seed        " << mc->seed << "\n";
    } else if (const auto* cd = std::get_if<CdDiagnostics>(&d)) {
        os << "theta*      " << fmt17(cd->theta) << "\n"
           << "d*          " << fmt17(cd->d) << "\n"
           << "foc         " << printf_str("%.3e", cd->foc_residual) << " after " << cd->iterations
           << " iterations\n";
    } else if (const auto* di = std::get_if<DiscDiagnostics>(&d)) {
        os << "grid        b=" << fmt_short(di->b) << " n=" << di->n << "\n";
    } else if (const auto* ex = std::get_if<ExtendedDiagnostics>(&d)) {
        os << "lambda      " << fmt17(ex->lambda) << "\n"
           << "mu          " << fmt17(ex->mu) << "\n"
           << "gamma       " << fmt17(ex->gamma) << "\n";
    } else if (const auto* q = std::get_if<QuadDiagnostics>(&d)) {
        os << "error_est   " << printf_str("%.3e", q->error_estimate) << "\n";
    }
}

std::string grid_name(const MethodGrid& g) { return std::string(method_name(g.method)); }

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
    if (name == "text") return Format::text;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "markdown" || name == "md") return Format::markdown;
    return std::nullopt;
}

std::string fmt17(double v) { return printf_str("%.17g", v); }
std::string fmt4(double v) { return printf_str("%.4f", v); }

std::string render_price(const PriceReport& r, Format f) {
    const auto& p = r.price;
    const std::string name(method_name(r.method));
    std::ostringstream os;
    switch (f) {
        case Format::json: {
            json opts{{"disc_b", r.options.disc.b},
                      {"disc_n", r.options.disc.n},
                      {"paths", r.options.mc.paths},
                      {"seed", r.options.mc.seed},
                      {"antithetic", r.options.mc.antithetic},
                      {"quad_tol", r.options.quad_tol}};
            if (r.options.extended) {
                opts["lambda"] = r.options.extended->lambda;
                opts["mu"] = r.options.extended->mu;
                opts["gamma"] = r.options.extended->gamma;
            }
            json j{{"method", name},
                   {"price", p.result.value},
                   {"contract", contract_json(r.contract)},
                   {"parity", {{"swapped", p.swapped}, {"cash_adjust", p.cash_adjust}, {"normalized_price", p.raw_value}}},
                   {"options", opts},
                   {"diagnostics", diagnostics_json(p.result.diagnostics)}};
            os << j.dump(2) << "\n";
            break;
        }
        case Format::csv:
            os << "method,K,rho,price\n"
               << name << "," << fmt17(r.contract.k) << "," << fmt17(r.contract.rho) << "," << fmt17(p.result.value)
               << "\n";
            break;
        case Format::markdown:
            os << "| method | K | rho | price |\n|---|---:|---:|---:|\n"
               << "| " << name << " | " << fmt_short(r.contract.k) << " | " << fmt_short(r.contract.rho) << " | "
               << fmt4(p.result.value) << " |\n";
            break;
        case Format::text:
            os << "method      " << name << "\n"
               << "price       " << fmt17(p.result.value) << "\n";
            if (p.swapped) {
                os << "parity      legs swapped for K < 0: " << fmt17(p.raw_value) << " + cash adjust "
                   << fmt17(p.cash_adjust) << "\n";
            }
            diagnostics_text(os, p.result.diagnostics);
            break;
    }
    return os.str();
}

std::string render_table(const TableResult& r, Format f) {
    const auto& spec = r.spec;
    const std::size_t nr = spec.rhos.size();
    const bool ref_listed =
        std::find(spec.methods.begin(), spec.methods.end(), spec.reference) != spec.methods.end();
    std::vector<const MethodGrid*> shown;
    if (!ref_listed) shown.push_back(&r.reference);
    for (const auto& g : r.grids) shown.push_back(&g);
    const std::string ref_name(method_name(spec.reference));

    std::ostringstream os;
    switch (f) {
        case Format::csv: {
            os << "method,K,rho,price\n";
            for (const MethodGrid* g : shown)
                for (std::size_t i = 0; i < g->values.size(); ++i)
                    os << grid_name(*g) << "," << fmt17(spec.strikes[i / nr]) << "," << fmt17(spec.rhos[i % nr]) << ","
                       << fmt17(g->values[i]) << "\n";
            os << "\nmethod,mean_rel_err,max_rel_err,cells_used\n";
            for (const auto& g : r.grids) {
                if (g.method == spec.reference) continue;
                os << grid_name(g) << "," << fmt17(g.stats.mean_rel_err) << "," << fmt17(g.stats.max_rel_err) << ","
                   << g.stats.cells_used << "\n";
            }
            break;
        }
        case Format::json: {
            json methods = json::array();
            for (const MethodGrid* g : shown) {
                json rows = json::array();
                for (std::size_t ik = 0; ik < spec.strikes.size(); ++ik) {
                    json row = json::array();
                    for (std::size_t ir = 0; ir < nr; ++ir) row.push_back(number(g->values[ik * nr + ir]));
                    rows.push_back(row);
                }
                json m{{"method", grid_name(*g)}, {"prices", rows}, {"seconds", g->seconds}};
                if (g->method == Method::monte_carlo) {
                    json se = json::array();
                    for (std::size_t ik = 0; ik < spec.strikes.size(); ++ik) {
                        json row = json::array();
                        for (std::size_t ir = 0; ir < nr; ++ir) row.push_back(number(g->std_errors[ik * nr + ir]));
                        se.push_back(row);
                    }
                    m["std_errors"] = se;
                }
                if (g->method != spec.reference)
                    m["stats"] = {{"mean_rel_err", g->stats.mean_rel_err},
                                  {"max_rel_err", g->stats.max_rel_err},
                                  {"cells_used", g->stats.cells_used}};
                methods.push_back(m);
            }
            json j{{"preset", spec.preset},
                   {"base", contract_json(spec.base)},
                   {"strikes", spec.strikes},
                   {"rhos", spec.rhos},
                   {"reference", ref_name},
                   {"include_zero_strike", spec.include_zero_strike},
                   {"methods", methods}};
            os << j.dump(2) << "\n";
            break;
        }
        case Format::markdown: {
            os << "| K | method |";
            for (double rho : spec.rhos) os << " rho=" << fmt_short(rho) << " |";
            os << "\n|---:|---|";
            for (std::size_t i = 0; i < nr; ++i) os << "---:|";
            os << "\n";
            for (std::size_t ik = 0; ik < spec.strikes.size(); ++ik) {
                for (std::size_t gi = 0; gi < shown.size(); ++gi) {
                    os << "| " << (gi == 0 ? fmt_short(spec.strikes[ik]) : "") << " | " << grid_name(*shown[gi]) << " |";
                    for (std::size_t ir = 0; ir < nr; ++ir) {
                        const double v = shown[gi]->values[ik * nr + ir];
                        os << " " << (std::isfinite(v) ? fmt4(v) : "n/a") << " |";
                    }
                    os << "\n";
                }
            }
            os << "\n| method | mean_rel_err | max_rel_err | cells_used |\n|---|---:|---:|---:|\n";
            for (const auto& g : r.grids) {
                if (g.method == spec.reference) continue;
                os << "| " << grid_name(g) << " | " << printf_str("%.6g", g.stats.mean_rel_err) << " | "
                   << printf_str("%.6g", g.stats.max_rel_err) << " | " << g.stats.cells_used << " |\n";
            }
            break;
        }
        case Format::text: {
            os << "preset " << spec.preset << ", reference " << ref_name << "\n";
            for (const MethodGrid* g : shown) {
                os << "\n" << grid_name(*g) << printf_str(" (%.3f s)", g->seconds) << "\n";
                os << "       K";
                for (double rho : spec.rhos) os << printf_str("%14g", rho);
                os << "\n";
                for (std::size_t ik = 0; ik < spec.strikes.size(); ++ik) {
                    os << printf_str("%8g", spec.strikes[ik]);
                    for (std::size_t ir = 0; ir < nr; ++ir) os << printf_str("%14.8f", g->values[ik * nr + ir]);
                    os << "\n";
                }
                for (std::size_t i = 0; i < g->errors.size(); ++i)
                    if (!g->errors[i].empty())
                        os << "  K=" << fmt_short(spec.strikes[i / nr]) << " rho=" << fmt_short(spec.rhos[i % nr])
                           << ": " << g->errors[i] << "\n";
            }
            os << "\nerror vs " << ref_name << (spec.include_zero_strike ? "" : " (K != 0 cells)") << "\n";
            for (const auto& g : r.grids) {
                if (g.method == spec.reference) continue;
                std::string name = grid_name(g);
                name.resize(14, ' ');
                os << name << " mean " << printf_str("%.6g", g.stats.mean_rel_err) << "  max "
                   << printf_str("%.6g", g.stats.max_rel_err) << "  cells " << g.stats.cells_used << "\n";
            }
            break;
        }
    }
    return os.str();
}

std::string render_compare(const CompareReport& r, Format f) {
    std::ostringstream os;
    const char* ordering = !r.ordering_checked ? "not checked" : (r.ordering_ok ? "ok" : "VIOLATED");
    switch (f) {
        case Format::json: {
            json rows = json::array();
            for (const auto& row : r.rows) {
                json j{{"method", std::string(method_name(row.method))}};
                if (row.error.empty()) {
                    j["price"] = row.value;
                    j["abs_err"] = row.abs_err;
                    j["rel_err"] = number(row.rel_err);
                } else {
                    j["error"] = row.error;
                }
                rows.push_back(j);
            }
            json j{{"contract", contract_json(r.contract)}, {"oracle", r.oracle}, {"methods", rows}};
            if (r.ordering_checked) j["bs_le_cd"] = r.ordering_ok;
            os << j.dump(2) << "\n";
            break;
        }
        case Format::csv:
            os << "method,price,abs_err,rel_err\nquadrature," << fmt17(r.oracle) << ",0,0\n";
            for (const auto& row : r.rows) {
                if (!row.error.empty()) continue;
                os << method_name(row.method) << "," << fmt17(row.value) << "," << fmt17(row.abs_err) << ","
                   << fmt17(row.rel_err) << "\n";
            }
            break;
        case Format::markdown:
            os << "| method | price | abs_err | rel_err |\n|---|---:|---:|---:|\n"
               << "| quadrature | " << fmt4(r.oracle) << " | | |\n";
            for (const auto& row : r.rows) {
                if (!row.error.empty()) {
                    os << "| " << method_name(row.method) << " | n/a | | |\n";
                    continue;
                }
                os << "| " << method_name(row.method) << " | " << fmt4(row.value) << " | "
                   << printf_str("%.3e", row.abs_err) << " | " << printf_str("%.3e", row.rel_err) << " |\n";
            }
            os << "\nBS <= CD: " << ordering << "\n";
            break;
        case Format::text:
            os << "quadrature  " << fmt17(r.oracle) << "\n";
            for (const auto& row : r.rows) {
                std::string name(method_name(row.method));
                name.resize(12, ' ');
                if (!row.error.empty()) {
                    os << name << "failed: " << row.error << "\n";
                    continue;
                }
                os << name << printf_str("%.10f", row.value) << "  abs " << printf_str("%.3e", row.abs_err)
                   << "  rel " << printf_str("%.3e", row.rel_err) << "\n";
            }
            os << "BS <= CD: " << ordering << "\n";
            break;
    }
    return os.str();
}

std::string render_greeks(const GreeksOutput& g, Format f) {
    struct Item {
        const char* name;
        double GreeksReport::*field;
    };
    static const Item items[] = {
        {"price", &GreeksReport::price},       {"dF1", &GreeksReport::d_f1},
        {"dF2", &GreeksReport::d_f2},          {"d2F1F1", &GreeksReport::d2_f1f1},
        {"d2F1F2", &GreeksReport::d2_f1f2},    {"d2F2F2", &GreeksReport::d2_f2f2},
        {"vega1", &GreeksReport::vega1},       {"vega2", &GreeksReport::vega2},
        {"dT", &GreeksReport::theta_t},        {"dr", &GreeksReport::rho_r},
        {"drho", &GreeksReport::rho_corr},
    };
    std::ostringstream os;
    switch (f) {
        case Format::json: {
            json a = json::object(), n = json::object();
            for (const auto& it : items) {
                a[it.name] = g.analytic.*it.field;
                n[it.name] = g.numeric.*it.field;
            }
            a["I"] = g.analytic.i_val;
            a["J"] = g.analytic.j_val;
            a["H"] = g.analytic.h_val;
            a["sbar1"] = g.analytic.sbar1;
            a["sbar2"] = g.analytic.sbar2;
            a["sbar3"] = g.analytic.sbar3;
            json j{{"contract", contract_json(g.contract)},
                   {"params", {{"lambda", g.params.lambda}, {"mu", g.params.mu}, {"gamma", g.params.gamma}}},
                   {"analytic", a},
                   {"finite_difference", n},
                   {"pde", {{"res1", g.pde.res1}, {"res2", g.pde.res2}}}};
            os << j.dump(2) << "\n";
            break;
        }
        case Format::csv:
            os << "greek,analytic,finite_difference\n";
            for (const auto& it : items)
                os << it.name << "," << fmt17(g.analytic.*it.field) << "," << fmt17(g.numeric.*it.field) << "\n";
            os << "pde_res1," << fmt17(g.pde.res1) << ",\npde_res2," << fmt17(g.pde.res2) << ",\n";
            break;
        case Format::markdown:
            os << "| greek | analytic | finite difference |\n|---|---:|---:|\n";
            for (const auto& it : items)
                os << "| " << it.name << " | " << fmt4(g.analytic.*it.field) << " | " << fmt4(g.numeric.*it.field)
                   << " |\n";
            os << "\nPDE residuals: " << printf_str("%.3e", g.pde.res1) << ", " << printf_str("%.3e", g.pde.res2)
               << "\n";
            break;
        case Format::text:
            os << "anchors     lambda " << fmt_short(g.params.lambda) << "  mu " << fmt_short(g.params.mu)
               << "  gamma " << fmt_short(g.params.gamma) << "\n";
            os << "greek            analytic         finite-diff      rel-diff\n";
            for (const auto& it : items) {
                const double a = g.analytic.*it.field, n = g.numeric.*it.field;
                const double rel = std::abs(a - n) / std::max(std::abs(a), 1e-300);
                std::string name(it.name);
                name.resize(10, ' ');
                os << name << printf_str("%17.10g", a) << printf_str("%17.10g", n) << printf_str("%14.3e", rel)
                   << "\n";
            }
            os << "pde residuals  " << printf_str("%.3e", g.pde.res1) << "  " << printf_str("%.3e", g.pde.res2) << "\n";
            break;
    }
    return os.str();
}

}  // namespace spread::cli
