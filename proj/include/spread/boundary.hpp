// SPDX-License-Identifier: MIT
#pragma once

#include "spread/contract.hpp"

namespace spread {

// Exercise-boundary curves in the (x, y) plane of the standard normals driving S2 and S1.
// C1 bounds the F1-digital, C2 the F2-digital, C3 the strike digital.
enum class CurveId { C1, C2, C3 };

/// y = kappa * x + delta
struct LineApprox {
    double kappa = 0.0;
    double delta = 0.0;

    double at(double x) const { return kappa * x + delta; }
};

/// Point y on curve `id` above abscissa x. Stable for large |x| (log-sum-exp).
double curve_y(const SpreadContract& c, CurveId id, double x);

/// lim_{x -> -inf} curve_y(c, id, x). Needs k > 0.
double curve_left_limit(const SpreadContract& c, CurveId id);

/// b_i(x) = w F2bar e^{s2 x} / (w F2bar e^{s2 x} + K), with w = alpha, g2, 1 for C1, C2, C3.
double slope_fraction(const SpreadContract& c, CurveId id, double x);

/// a_i(x), the companion of slope_fraction with a_i(x) b_i(x) = F2.
double shift_coefficient(const SpreadContract& c, CurveId id, double x);

/// z0^i(q, a, h): intercept of the straight-line boundary with slope q/sigma1 through the anchor h.
double z0(const SpreadContract& c, CurveId id, double q, double a, double h);

/// Chord-slope linearization of curve `id` anchored at anchor_x.
LineApprox line_for_curve(const SpreadContract& c, CurveId id, double anchor_x);

}  // namespace spread
