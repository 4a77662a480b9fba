// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "published_tables.hpp"
#include "spread/greeks.hpp"
#include "spread/pricers.hpp"
#include "spread/table.hpp"
#include "support.hpp"

using namespace spread;
using namespace spread::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok) { pass = pass && ok; }
};

double rel(double v, double ref) { return std::fabs(v - ref) / std::fabs(ref); }

constexpr std::uint64_t kGridSeed = 20240601;

const std::vector<SpreadContract>& random_grid() {
    static const std::vector<SpreadContract> grid = random_contracts(200, kGridSeed);
    return grid;
}

// Table 2 golden regression against the printed 4-decimal rows.
void criterion1(Outcome& o) {
    const auto t0 = Clock::now();
    struct Row {
        const char* name;
        Method m;
        const Grid* printed;
    } rows[] = {{"kirk", Method::kirk, &kTable2Kirk},
                {"bs", Method::bjerksund_stensland, &kTable2Bs},
                {"discretized", Method::discretized, &kTable2Disc}};
    for (const Row& row : rows) {
        int bad = 0;
        double worst = 0.0;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                const double v = price_normalized(base_contract(kTableStrikes[i], kTableRhos[j]), row.m).result.value;
                const double e = std::fabs(v - (*row.printed)[i][j]);
                worst = std::max(worst, e);
                bad += e > 5e-5;
            }
        o.require(bad == 0);
        o.detail << row.name << " " << 36 - bad << "/36 within 5e-5 (max " << worst << "); ";
    }
    const double secs = seconds_since(t0);
    o.require(secs <= 10.0);
    o.detail << "runtime " << secs << " s";
}

bool is_typo_cell(int i, int j) {
    return std::any_of(kTable1TypoCells.begin(), kTable1TypoCells.end(),
                       [&](const auto& c) { return c.first == i && c.second == j; });
}

// Table 1: discretized vs printed, Monte Carlo vs discretized, discretized faster than MC.
void criterion2(Outcome& o) {
    const auto t0 = Clock::now();
    int bad_printed = 0, bad_mc = 0, checked = 0;
    double worst_printed = 0.0, worst_z = 0.0, disc_secs = 0.0, mc_secs = 0.0;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            const SpreadContract c = base_contract(kTableStrikes[i], kTableRhos[j]);
            auto t = Clock::now();
            const double disc = price_normalized(c, Method::discretized).result.value;
            disc_secs += seconds_since(t);

            const double tol = is_typo_cell(i, j) ? 1e-3 : 5e-7;
            const double e = std::fabs(disc - kTable1Disc[i][j]);
            if (!is_typo_cell(i, j)) {
                ++checked;
                worst_printed = std::max(worst_printed, e);
            }
            bad_printed += e > tol;

            PricingOptions opts;
            opts.mc = {100000, derive_seed(42, i, j), false};
            t = Clock::now();
            const NormalizedPrice mc = price_normalized(c, Method::monte_carlo, opts);
            mc_secs += seconds_since(t);
            const double se = std::get<McDiagnostics>(mc.result.diagnostics).std_error;
            const double gap = std::fabs(mc.result.value - disc);
            if (se > 0) worst_z = std::max(worst_z, gap / se);
            bad_mc += gap > 3 * se + 1e-8;
        }
    const double secs = seconds_since(t0);
    o.require(bad_printed == 0);
    o.require(bad_mc == 0);
    o.require(disc_secs < mc_secs);
    o.require(secs <= 60.0);
    o.detail << "printed: " << checked - std::min(bad_printed, checked) << "/" << checked
             << " non-typo cells within 5e-7 (max " << worst_printed << "); MC within 3 SE on " << 36 - bad_mc
             << "/36 (max " << worst_z << " SE); time disc " << disc_secs << " s < MC " << mc_secs
             << " s; runtime " << secs << " s";
}

// Table 3 error statistics.
void criterion3(Outcome& o) {
    const auto t0 = Clock::now();
    cli::TableSpec spec = cli::make_preset("table3");
    spec.methods = {Method::bjerksund_stensland, Method::extended};
    const cli::TableResult r = cli::run_table(spec);
    const double bs = r.grids[0].stats.mean_rel_err;
    const double ext = r.grids[1].stats.mean_rel_err;
    const double secs = seconds_since(t0);
    o.require(std::fabs(bs - 0.00125) <= 0.1 * 0.00125);
    o.require(ext <= 2e-4 && ext < bs);
    o.require(secs <= 10.0);
    o.detail << "BS mean rel err " << bs << " (target 0.00125 +/- 10%), extended " << ext << " over "
             << r.grids[0].stats.cells_used << " cells; runtime " << secs << " s";
}

// Extended formula at the BS point collapses to Bjerksund-Stensland.
void criterion4(Outcome& o) {
    double worst = 0.0;
    for (const SpreadContract& c : random_grid()) {
        const double bs = price_bjerksund_stensland(c).value;
        worst = std::max(worst, rel(price_extended(c, bs_point_params(c)).value, bs));
    }
    o.require(worst <= 1e-12);
    o.detail << "max rel err " << worst << " over " << random_grid().size() << " contracts";
}

// CD starting point equals BS; optimized CD is never below BS.
void criterion5(Outcome& o) {
    double worst = 0.0, worst_gap = 0.0;
    for (const SpreadContract& c : random_grid()) {
        const double bs = price_bjerksund_stensland(c).value;
        const CdPoint p = bs_equivalent_params(c);
        worst = std::max(worst, rel(cd_lower_bound(c, p.theta, p.d), bs));
        worst_gap = std::max(worst_gap, bs - price_carmona_durrleman(c).value);
    }
    o.require(worst <= 1e-12);
    o.require(worst_gap <= 1e-10);
    o.detail << "start-point max rel err " << worst << "; max (BS - CD) " << worst_gap;
}

// BS <= CD <= quadrature, and discretized close to quadrature.
void criterion6(Outcome& o) {
    int order_bad = 0, disc_bad = 0;
    double worst_disc = 0.0, worst_over = -INFINITY;
    for (const SpreadContract& c : random_grid()) {
        const double bs = price_bjerksund_stensland(c).value;
        const double cd = price_carmona_durrleman(c).value;
        const double q = price_quadrature_oracle(c).value;
        order_bad += !(bs <= cd + 1e-10 && cd <= q + 1e-8);
        worst_over = std::max(worst_over, cd - q);
        const double e = std::fabs(price_discretized(c).value - q);
        worst_disc = std::max(worst_disc, e);
        disc_bad += e > 1e-5;
    }
    o.require(order_bad == 0);
    o.require(disc_bad == 0);
    o.detail << "ordering holds on " << random_grid().size() - order_bad << "/" << random_grid().size()
             << " (max CD - quad " << worst_over << "); |disc - quad| <= 1e-5 on " << random_grid().size() - disc_bad
             << "/" << random_grid().size() << " (max " << worst_disc << ")";
}

// Greeks: analytic vs finite differences, PDE residuals, rate sensitivity.
void criterion7(Outcome& o) {
    int points = 0, fd_bad = 0, pde_bad = 0, rate_bad = 0;
    double worst1 = 0.0, worst2 = 0.0, worst_pde = 0.0;
    for (double s2 : {0.15, 0.5, 0.9})
        for (double k : {2.0, 8.0, 15.0, 25.0, 40.0})
            for (double rho : {-0.8, -0.3, 0.0, 0.4, 0.9}) {
                const SpreadContract c = base_contract(k, rho, s2);
                ++points;
                for (bool at_bs : {false, true}) {
                    const FrozenExtended fx = freeze(c, at_bs ? bs_point_params(c) : default_extended_params(c));
                    const GreeksReport a = greeks_closed_form(fx);
                    const GreeksReport n = greeks_finite_difference(fx);
                    const double p = std::max(std::fabs(a.price), 1e-300);
                    // denominators floored at 1e-3 of the Greek's natural scale, for Greeks crossing zero
                    auto err = [](double num, double an, double scale) {
                        return std::fabs(num - an) / std::max(std::fabs(an), 1e-3 * scale);
                    };
                    const double dscale = c.discount();
                    const double gscale = c.discount() / c.f1;
                    const double e1 = std::max({err(n.d_f1, a.d_f1, dscale), err(n.d_f2, a.d_f2, dscale),
                                                err(n.vega1, a.vega1, p), err(n.vega2, a.vega2, p),
                                                err(n.theta_t, a.theta_t, p), err(n.rho_corr, a.rho_corr, p),
                                                err(n.rho_r, a.rho_r, p)});
                    const double e2 = std::max({err(n.d2_f1f1, a.d2_f1f1, gscale), err(n.d2_f2f2, a.d2_f2f2, gscale),
                                                err(n.d2_f1f2, a.d2_f1f2, gscale)});
                    worst1 = std::max(worst1, e1);
                    worst2 = std::max(worst2, e2);
                    fd_bad += e1 > 1e-5 || e2 > 1e-3;

                    const PdeResiduals r = pde_residuals(fx);
                    const double scale = std::max(std::fabs(a.price), 1.0);
                    const double res = std::max(std::fabs(r.res1), std::fabs(r.res2)) / scale;
                    worst_pde = std::max(worst_pde, res);
                    pde_bad += res > 1e-8;
                    rate_bad += !(std::fabs(a.rho_r + c.t * a.price) <= 1e-14 * std::fabs(a.price));
                }
            }
    o.require(fd_bad == 0 && pde_bad == 0 && rate_bad == 0);
    o.detail << points << " points x 2 anchor sets: max first-order rel err " << worst1 << ", second-order "
             << worst2 << "; max scaled PDE residual " << worst_pde << "; rate identity failures " << rate_bad;
}

// Degenerate limits.
void criterion8(Outcome& o) {
    double worst = 0.0;
    for (double s2 : {0.15, 0.9})
        for (double rho : {-0.99, -0.5, 0.0, 0.5, 0.99}) {
            const double m = price_margrabe(base_contract(0.0, rho, s2)).value;
            const SpreadContract c = base_contract(1e-10, rho, s2);
            worst = std::max({worst, std::fabs(price_kirk(c).value - m),
                              std::fabs(price_bjerksund_stensland(c).value - m),
                              std::fabs(price_extended(c, default_extended_params(c)).value - m)});
        }
    int exact_bad = 0;
    for (double k : {-20.0, 0.0, 5.0, 50.0}) {
        SpreadContract c = base_contract(k, 0.3);
        c.sigma1 = c.sigma2 = 0.0;
        const double payoff = c.discount() * std::max(c.f1 - c.f2 - c.k, 0.0);
        exact_bad += price_monte_carlo(c, {10000, 1, false}).value != payoff;
        exact_bad += price_monte_carlo(c, {10000, 1, true}).value != payoff;
        exact_bad += price_bachelier(c).value != payoff;
    }
    o.require(worst <= 1e-6 && exact_bad == 0);
    o.detail << "K=1e-10 max |price - Margrabe| " << worst << "; zero-vol mismatches " << exact_bad;
}

// Parity normalization vs direct quadrature for K < 0.
void criterion9(Outcome& o) {
    double worst = 0.0;
    const auto contracts = random_contracts(50, kGridSeed + 1, -30.0, -0.5);
    for (const SpreadContract& c : contracts) {
        const NormalizedPrice n = price_normalized(c, Method::quadrature);
        worst = std::max(worst, std::fabs(n.result.value - price_quadrature_oracle(c).value));
    }
    o.require(worst <= 1e-9);
    o.detail << "max |normalized - direct| " << worst << " over " << contracts.size() << " contracts";
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
        {"Table 2 golden regression", criterion1},
        {"Table 1 cross-check", criterion2},
        {"Table 3 error statistics", criterion3},
        {"extended formula collapses to Bjerksund-Stensland", criterion4},
        {"Carmona-Durrleman start point and lower bound", criterion5},
        {"oracle sandwich", criterion6},
        {"Greeks and PDE identities", criterion7},
        {"degenerate reductions", criterion8},
        {"put-call parity for negative strikes", criterion9},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        failed += !o.pass;
        std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    o.detail.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
