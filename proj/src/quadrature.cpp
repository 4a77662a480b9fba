// SPDX-License-Identifier: MIT
#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "spread/errors.hpp"
#include "spread/math.hpp"
#include "spread/pricers.hpp"

namespace spread {

namespace {

constexpr double kRange = 40.0;  // phi(40) ~ 1e-348

}  // namespace

PriceResult price_quadrature_oracle(const SpreadContract& c, double abs_tol) {
    c.validate();
    if (!(c.sigma1 > 0.0)) throw DomainError("quadrature: sigma1 must be > 0");
    if (!(std::abs(c.rho) < 1.0)) throw DomainError("quadrature: |rho| must be < 1");
    if (!(abs_tol > 0.0)) throw ConfigError("quadrature: abs_tol must be > 0");

    const double st = std::sqrt(c.t);
    const double v = c.sigma1 * st * std::sqrt(1.0 - c.rho * c.rho);
    const double log_a0 = std::log(c.f1) - 0.5 * c.sigma1 * c.sigma1 * c.t + 0.5 * v * v;

    // Given X = x: S1 = A e^{v Z - v^2/2}, S2 + K = B, so the inner expectation is a Black-Scholes call.
    auto integrand = [&](double x) {
        const double pdf = std_normal_pdf(x);
        if (pdf == 0.0) return 0.0;
        const double log_a = log_a0 + c.sigma1 * st * c.rho * x;
        const double a = std::exp(log_a);
        const double b = c.f2 * std::exp(-0.5 * c.sigma2 * c.sigma2 * c.t + c.sigma2 * st * x) + c.k;
        double inner;
        if (b <= 0.0) {
            inner = a - b;
        } else {
            const double d1 = (log_a - std::log(b)) / v + 0.5 * v;
            inner = a * std_normal_cdf(d1) - b * std_normal_cdf(d1 - v);
        }
        return pdf * inner;
    };

    // Split at the mode and, for negative strikes, where B(x) changes sign.
    std::vector<double> cuts{-kRange, 0.0, kRange};
    if (c.k < 0.0 && c.f2 > 0.0 && c.sigma2 > 0.0) {
        const double x0 = (std::log(-c.k / c.f2) + 0.5 * c.sigma2 * c.sigma2 * c.t) / (c.sigma2 * st);
        if (std::abs(x0) < kRange && x0 != 0.0) cuts.push_back(x0);
    }
    // Conditional at-the-money points, where the inner call has its kink of width ~v.
    auto gap = [&](double x) {
        const double b = c.f2 * std::exp(-0.5 * c.sigma2 * c.sigma2 * c.t + c.sigma2 * st * x) + c.k;
        return b > 0.0 ? log_a0 + c.sigma1 * st * c.rho * x - std::log(b) : INFINITY;
    };
    constexpr int kScan = 8000;
    double xl = -kRange, gl = gap(xl);
    for (int i = 1; i <= kScan; ++i) {
        const double xr = -kRange + 2.0 * kRange * i / kScan;
        const double gr = gap(xr);
        if ((gl > 0.0) != (gr > 0.0) && std::isfinite(gl) && std::isfinite(gr)) {
            double lo = xl, hi = xr;
            for (int it = 0; it < 100 && hi - lo > 1e-15 * (1.0 + std::abs(lo)); ++it) {
                const double mid = 0.5 * (lo + hi);
                ((gap(mid) > 0.0) == (gl > 0.0) ? lo : hi) = mid;
            }
            cuts.push_back(0.5 * (lo + hi));
        }
        xl = xr;
        gl = gr;
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    using boost::math::quadrature::gauss_kronrod;
    using Rule = gauss_kronrod<double, 61>;
    // Tolerance relative to the whole integral's L1 mass, so short segments are not pushed below roundoff.
    const std::size_t n_seg = cuts.size() - 1;
    std::vector<double> seg_l1(n_seg, 0.0);
    double l1_total = 0.0;
    for (std::size_t i = 0; i < n_seg; ++i) {
        Rule::integrate(integrand, cuts[i], cuts[i + 1], 0, 0.0, nullptr, &seg_l1[i]);
        l1_total += seg_l1[i];
    }
    double total = 0.0, err_total = 0.0;
    for (std::size_t i = 0; i < n_seg; ++i) {
        const double share = seg_l1[i] > 0.0 ? l1_total / seg_l1[i] : 1.0;
        const double tol = std::min(1e-13 * std::max(share, 1.0), 1e-3);
        double err = 0.0;
        total += Rule::integrate(integrand, cuts[i], cuts[i + 1], 18, tol, &err);
        err_total += err;
    }
    const double df = c.discount();
    const double err_abs = df * err_total;
    if (!(err_abs <= abs_tol)) throw AccuracyError("quadrature: tolerance not reached");
    return {df * total, Method::quadrature, QuadDiagnostics{err_abs}};
}

}  // namespace spread
