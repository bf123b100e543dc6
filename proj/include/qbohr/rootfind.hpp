#pragma once

#include <functional>

namespace qbohr {

struct RootOptions {
    double bisect_width = 1e-6;   // bracket width handed to Newton
    double residual_tol = 1e-14;  // stop once |f| falls below this
    int max_newton = 60;
};

/// Finds the root of f in [lo, hi], where f(lo) and f(hi) have opposite
/// signs. Bisects until the bracket is narrow, then polishes with Newton
/// steps (derivative df), falling back to bisection whenever a step leaves
/// the bracket. Throws std::invalid_argument when the bracket has no sign
/// change.
double solve_bracketed(const std::function<double(double)>& f,
                       const std::function<double(double)>& df,
                       double lo, double hi, const RootOptions& opts = {});

/// Maximizes a unimodal f on [lo, hi] by golden-section search; returns the
/// abscissa of the maximum. Endpoints are candidates.
double golden_section_max(const std::function<double(double)>& f,
                          double lo, double hi, double x_tol = 1e-12);

} // namespace qbohr
