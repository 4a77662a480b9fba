// Shared fixtures for the test binaries.
#pragma once

#include <cstdint>
#include <vector>

#include "spread/contract.hpp"
#include "spread/random.hpp"

namespace spread::testing {

// The forward setup used by the published comparison tables.
inline SpreadContract base_contract(double k, double rho, double sigma2 = 0.15) {
    SpreadContract c;
    c.f1 = 112.22;
    c.f2 = 103.05;
    c.sigma1 = 0.1;
    c.sigma2 = sigma2;
    c.rho = rho;
    c.r = 0.05;
    c.t = 1.0;
    c.k = k;
    return c;
}

inline double uniform(std::uint64_t seed, std::uint64_t i, double lo, double hi) {
    return lo + (hi - lo) * to_unit(splitmix64(derive_seed(seed, i, 0)));
}

// Reproducible random contracts: F in [50,150], K in [k_lo,k_hi], sigma in [0.05,1],
// rho in [-0.99,0.99], T in [0.1,3], r in [0,0.08].
inline std::vector<SpreadContract> random_contracts(std::size_t n, std::uint64_t seed, double k_lo = 0.5,
                                                    double k_hi = 30.0) {
    std::vector<SpreadContract> out;
    out.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::uint64_t s = derive_seed(seed, j, 7);
        SpreadContract c;
        c.f1 = uniform(s, 1, 50.0, 150.0);
        c.f2 = uniform(s, 2, 50.0, 150.0);
        c.k = uniform(s, 3, k_lo, k_hi);
        c.sigma1 = uniform(s, 4, 0.05, 1.0);
        c.sigma2 = uniform(s, 5, 0.05, 1.0);
        c.rho = uniform(s, 6, -0.99, 0.99);
        c.t = uniform(s, 7, 0.1, 3.0);
        c.r = uniform(s, 8, 0.0, 0.08);
        out.push_back(c);
    }
    return out;
}

inline double rel_err(double value, double reference) {
    return reference == 0.0 ? value - reference : (value - reference) / reference;
}

}  // namespace spread::testing
