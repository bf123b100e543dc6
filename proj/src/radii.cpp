#include "qbohr/radii.hpp"

#include "qbohr/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qbohr {

namespace {

void require_m(double m, double upper) {
    if (!(m > 0.0 && m <= upper)) {
        throw std::domain_error("exponent m out of range");
    }
}

double starlike_poly(double r) { return -1.0 + 3.0 * r - r * r; }

double halfspace_poly(double r) {
    return ((3.0 * r - 5.0) * r - 3.0) * r + 1.0;
}

} // namespace

RadiusResult radius_starlike() {
    const double v = (3.0 - std::sqrt(5.0)) / 2.0;
    return {v, RadiusMethod::ClosedForm, std::fabs(starlike_poly(v))};
}

RadiusResult radius_deriv_starlike() {
    return {0.5, RadiusMethod::ClosedForm, 0.0};
}

RadiusResult radius_classical() {
    const double v = 1.0 / 3.0;
    return {v, RadiusMethod::ClosedForm, std::fabs(v * 3.0 - 1.0)};
}

RadiusResult radius_generalized(double m) {
    require_m(m, 2.0);
    const double v = m / (2.0 + m);
    return {v, RadiusMethod::ClosedForm, std::fabs(v * (2.0 + m) - m)};
}

double infimum_objective(double t, double m) {
    if (!(t >= 0.0 && t < 1.0)) throw std::domain_error("t must lie in [0, 1)");
    require_m(m, 2.0);
    // F(t) = (1 - t^m)/(2 - t^2 - t^m); written via h = 1 - t so that both
    // the numerator and denominator stay fully accurate as t -> 1.
    const double h = 1.0 - t;
    const double num = -std::expm1(m * std::log1p(-h));
    const double den = h * (2.0 - h) + num;
    return num / den;
}

RadiusResult radius_generalized_infimum(double m, double* argmin) {
    require_m(m, 2.0);
    const double t_max = 1.0 - 1e-12;
    const int n = 4096;
    double best = infimum_objective(0.0, m);
    int best_i = 0;
    for (int i = 1; i <= n; ++i) {
        const double v = infimum_objective(t_max * i / n, m);
        if (v <= best) {
            best = v;
            best_i = i;
        }
    }
    double lo = t_max * std::max(0, best_i - 1) / n;
    double hi = t_max * std::min(n, best_i + 1) / n;
    constexpr double inv_phi = 0.6180339887498948482;
    for (int it = 0; it < 120 && hi - lo > 1e-15; ++it) {
        const double c = hi - inv_phi * (hi - lo);
        const double d = lo + inv_phi * (hi - lo);
        if (infimum_objective(c, m) < infimum_objective(d, m)) {
            hi = d;
        } else {
            lo = c;
        }
    }
    double t_star = t_max * best_i / n;
    const double mid = 0.5 * (lo + hi);
    if (infimum_objective(mid, m) < best) {
        best = infimum_objective(mid, m);
        t_star = mid;
    }
    if (argmin) *argmin = t_star;
    // convergence gap toward the open boundary, reported as the residual
    const double gap =
        std::fabs(infimum_objective(1.0 - 1e-10, m) - infimum_objective(t_max, m));
    return {best, RadiusMethod::Infimum, gap};
}

RadiusResult radius_halfspace() {
    const double v = solve_bracketed(
        halfspace_poly, [](double r) { return (9.0 * r - 10.0) * r - 3.0; }, 0.0, 0.5);
    return {v, RadiusMethod::RootFind, std::fabs(halfspace_poly(v))};
}

namespace {

double admissibility_constant_uncached(int k) {
    const auto g = [k](double x) {
        return x * (1.0 + x) * (1.0 + x) * std::pow(1.0 - x * x, 2 * k - 2);
    };
    const int n = 100000;
    double best = 0.0;
    int best_i = 0;
    for (int i = 0; i <= n; ++i) {
        const double v = g(static_cast<double>(i) / n);
        if (v > best) {
            best = v;
            best_i = i;
        }
    }
    const double lo = static_cast<double>(std::max(0, best_i - 1)) / n;
    const double hi = static_cast<double>(std::min(n, best_i + 1)) / n;
    const double x_star = golden_section_max(g, lo, hi);
    return std::max(best, g(x_star));
}

} // namespace

double admissibility_constant(int k) {
    if (k < 1) throw std::domain_error("admissibility constant: k must be >= 1");
    static std::mutex mu;
    static std::map<int, double> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(k); it != cache.end()) return it->second;
    }
    const double v = admissibility_constant_uncached(k);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(k, v);
    return v;
}

double admissibility_scale(double m) {
    require_m(m, 1.0);
    return m * (2.0 + m) / (4.0 * (m + 1.0));
}

Admissibility admissibility_condition(const std::vector<double>& d, double m) {
    const double M = admissibility_scale(m);
    const double M2 = M * M;
    double acc = 0.0;
    double M2k = M2;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] < 0.0) throw std::invalid_argument("admissibility condition: d_i must be >= 0");
        const int k = static_cast<int>(i) + 1;
        acc += 2.0 * (2.0 * k - 1.0) * admissibility_constant(k) * d[i] * M2k;
        M2k *= M2;
    }
    // 1e-12 slack keeps the exact boundary case L = m admissible in floating point
    return {acc, acc <= m + 1e-12};
}

double halfspace_proof_poly(double alpha, double r) {
    const double r2 = r * r;
    const double r3 = r2 * r;
    return 4.0 * r3 * alpha * alpha - (7.0 * r3 + 3.0 * r2 - 3.0 * r + 1.0) * alpha +
           6.0 * r3 - 2.0 * r2 - 6.0 * r + 2.0;
}

} // namespace qbohr
