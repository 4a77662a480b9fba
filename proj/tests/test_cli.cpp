#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "spread/cli.hpp"
#include "spread/pricers.hpp"

using namespace spread;
using nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run_cli(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"spreadopt"};
    argv.insert(argv.end(), args);
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::initializer_list<const char*> args) {
    const CliRun r = run_cli(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return json::parse(r.out);
}

SpreadContract contract_from(const json& j) {
    return {j["f1"], j["f2"], j["sigma1"], j["sigma2"], j["rho"], j["r"], j["t"], j["k"]};
}

}  // namespace

TEST(CliPrice, DefaultsToBaseSetup) {
    const json j = run_json({"price", "--k", "25", "--rho", "0.8", "--format", "json"});
    EXPECT_EQ(j["method"], "bs");
    EXPECT_NEAR(j["price"].get<double>(), 0.10301510790416836, 1e-12);
    EXPECT_EQ(j["contract"]["f1"], 112.22);
}

TEST(CliPrice, JsonRoundTripsThroughTheLibrary) {
    for (const char* method : {"bs", "kirk", "extended", "discretized", "mc", "quadrature", "cd"}) {
        const json j = run_json({"price", "--method", method, "--k", "-5", "--rho", "0.3", "--paths", "20000",
                                 "--format", "json"});
        PricingOptions o;
        o.disc = {j["options"]["disc_b"], j["options"]["disc_n"]};
        o.mc = {j["options"]["paths"], j["options"]["seed"], j["options"]["antithetic"]};
        o.quad_tol = j["options"]["quad_tol"];
        const NormalizedPrice p = price_normalized(contract_from(j["contract"]), *parse_method(method), o);
        EXPECT_EQ(j["price"].get<double>(), p.result.value) << method;
        EXPECT_TRUE(j["parity"]["swapped"].get<bool>());
    }
}

TEST(CliPrice, ExplicitAnchorsAreUsed) {
    const json j = run_json(
        {"price", "--method", "extended", "--k", "15", "--lambda", "0.1", "--mu", "-0.05", "--gamma", "0.2",
         "--format", "json"});
    EXPECT_EQ(j["options"]["lambda"], 0.1);
    SpreadContract c = contract_from(j["contract"]);
    EXPECT_EQ(j["price"].get<double>(), price_extended(c, {0.1, -0.05, 0.2}).value);
}

TEST(CliPrice, MonteCarloIsReproducible) {
    const CliRun a = run_cli({"price", "--method", "mc", "--k", "10", "--seed", "3"});
    const CliRun b = run_cli({"price", "--method", "mc", "--k", "10", "--seed", "3"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(CliPrice, ExitCodes) {
    EXPECT_EQ(run_cli({"price", "--no-such-flag"}).code, 2);
    EXPECT_EQ(run_cli({"price", "--method", "nope"}).code, 2);
    EXPECT_EQ(run_cli({"price", "--format", "yaml"}).code, 2);
    EXPECT_EQ(run_cli({"price", "--rho", "1.5"}).code, 1);
    EXPECT_EQ(run_cli({"price", "--method", "cd", "--rho", "1"}).code, 1);
    EXPECT_EQ(run_cli({"price", "--method", "margrabe", "--k", "3"}).code, 1);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(CliPrice, ConfigFileWithFlagsWinning) {
    const std::string path = ::testing::TempDir() + "spreadopt_cfg.txt";
    {
        std::ofstream f(path);
        f << "# table-2 cell\nk = 25\nrho=0.8\nmethod=kirk\n";
    }
    const json j = run_json({"price", "--config", path.c_str(), "--k", "15", "--format", "json"});
    EXPECT_EQ(j["method"], "kirk");
    EXPECT_EQ(j["contract"]["k"], 15.0);
    EXPECT_EQ(j["contract"]["rho"], 0.8);
    {
        std::ofstream f(path);
        f << "strike=25\n";
    }
    EXPECT_EQ(run_cli({"price", "--config", path.c_str()}).code, 2);
    std::remove(path.c_str());
}

TEST(CliTable, DeterministicAcrossRunsAndThreads) {
    const CliRun a = run_cli({"table", "--preset", "table1", "--format", "csv", "--paths", "20000", "--threads", "1"});
    const CliRun b = run_cli({"table", "--preset", "table1", "--format", "csv", "--paths", "20000", "--threads", "4"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.rfind("method,K,rho,price\n", 0), 0u);
    EXPECT_NE(a.out.find("\nmethod,mean_rel_err,max_rel_err,cells_used\n"), std::string::npos);
}

TEST(CliTable, JsonShapeAndZeroStrikeRow) {
    const json j = run_json({"table", "--preset", "table2", "--format", "json"});
    ASSERT_EQ(j["strikes"].size(), 6u);
    ASSERT_EQ(j["rhos"].size(), 6u);
    std::size_t k0 = 0;
    while (j["strikes"][k0] != 0.0) ++k0;
    for (const auto& m : j["methods"]) {
        ASSERT_EQ(m["prices"].size(), 6u);
        if (m["method"] == "discretized") continue;
        // at K = 0 every closed form is the exchange option
        for (std::size_t ir = 0; ir < 6; ++ir) {
            SpreadContract c{112.22, 103.05, 0.1, 0.15, j["rhos"][ir], 0.05, 1.0, 0.0};
            EXPECT_NEAR(m["prices"][k0][ir].get<double>(), price_margrabe(c).value, 1e-10) << m["method"];
        }
    }
}

TEST(CliTable, MarkdownUsesFourDecimals) {
    const CliRun r = run_cli({"table", "--preset", "table2", "--format", "markdown", "--methods", "kirk"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("| rho=0.99 |"), std::string::npos);
    EXPECT_NE(r.out.find(cli::fmt4(price_kirk({112.22, 103.05, 0.1, 0.15, 0.3, 0.05, 1.0, 5.0}).value)),
              std::string::npos);
}

TEST(CliTable, UnknownPresetIsUsageError) { EXPECT_EQ(run_cli({"table", "--preset", "table9"}).code, 2); }

TEST(CliCompare, RanksAgainstOracle) {
    const json j = run_json({"compare", "--k", "15", "--rho", "0.99", "--format", "json"});
    double kirk = -1, bs = -1;
    double prev = 0.0;
    for (const auto& row : j["methods"]) {
        if (row.contains("error")) continue;
        EXPECT_GE(row["abs_err"].get<double>(), prev);
        prev = row["abs_err"];
        if (row["method"] == "kirk") kirk = row["abs_err"];
        if (row["method"] == "bs") bs = row["abs_err"];
    }
    EXPECT_GT(kirk, bs);
    EXPECT_GE(bs, 0.0);
}

TEST(CliGreeks, ReportsPdeAtBsPoint) {
    const json j = run_json({"greeks", "--k", "15", "--rho", "0.3", "--point", "bs", "--format", "json"});
    EXPECT_LT(std::fabs(j["pde"]["res1"].get<double>()), 1e-8);
    EXPECT_NEAR(j["analytic"]["price"].get<double>(),
                price_bjerksund_stensland({112.22, 103.05, 0.1, 0.15, 0.3, 0.05, 1.0, 15.0}).value, 1e-12);
}
