#include "qbohr/rootfind.hpp"

#include <cmath>
#include <stdexcept>

namespace qbohr {

double solve_bracketed(const std::function<double(double)>& f,
                       const std::function<double(double)>& df,
                       double lo, double hi, const RootOptions& opts) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw std::invalid_argument("solve_bracketed: no sign change on bracket");
    }

    while (hi - lo > opts.bisect_width) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }

    double x = 0.5 * (lo + hi);
    double fx = f(x);
    for (int it = 0; it < opts.max_newton && std::fabs(fx) > opts.residual_tol; ++it) {
        const double d = df(x);
        double next = (d != 0.0) ? x - fx / d : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        // keep the sign-change bracket alive alongside Newton
        const double fn = f(next);
        if ((fn > 0.0) == (flo > 0.0)) {
            lo = next;
            flo = fn;
        } else {
            hi = next;
        }
        x = next;
        fx = fn;
    }
    return x;
}

double golden_section_max(const std::function<double(double)>& f,
                          double lo, double hi, double x_tol) {
    constexpr double inv_phi = 0.6180339887498948482;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > x_tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    double best = 0.5 * (a + b);
    double fbest = f(best);
    // endpoints can carry the maximum when it sits on the boundary
    if (f(lo) > fbest) {
        best = lo;
        fbest = f(lo);
    }
    if (f(hi) > fbest) {
        best = hi;
    }
    return best;
}

} // namespace qbohr
