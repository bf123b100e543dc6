#pragma once

#include <vector>

namespace qbohr {

enum class RadiusMethod { ClosedForm, RootFind, Infimum };

struct RadiusResult {
    double value = 0.0;
    RadiusMethod method = RadiusMethod::ClosedForm;
    double residual = 0.0;  ///< |defining equation| at value (RootFind) or convergence gap
};

/// (3 - sqrt 5)/2, the root in (0, 1) of r^2 - 3r + 1 = 0. Sharp radius for
/// the starlike coefficient bound |p_k| <= k.
RadiusResult radius_starlike();

/// 1/2, sharp radius under the derivative-starlike bound |p_k| <= 1.
RadiusResult radius_deriv_starlike();

/// 1/3, the classical radius for bounded slice regular functions.
RadiusResult radius_classical();

/// m/(2+m) for m in (0, 2]. Throws std::domain_error outside the range.
RadiusResult radius_generalized(double m);

/// The proof-level objective F(t) = (1 - t^m) / (2 - t^2 - t^m) whose
/// infimum over t in [0, 1) equals the generalized radius. Evaluated in a
/// cancellation-free form so the boundary limit is accurate.
double infimum_objective(double t, double m);

/// Computes the generalized radius by numerically minimizing
/// infimum_objective over [0, 1) (grid plus golden-section refinement).
/// Serves as the independent oracle for radius_generalized; agrees with it
/// to well below 1e-8. argmin receives the minimizer location.
RadiusResult radius_generalized_infimum(double m, double* argmin = nullptr);

/// The unique root in (0, 1) of 3r^3 - 5r^2 - 3r + 1 = 0 (~0.24683), sharp
/// for the half-space refinement. Bracketed bisection plus Newton polish.
RadiusResult radius_halfspace();

/// c_k = max_{x in [0,1]} x (1+x)^2 (1-x^2)^(2k-2), by dense grid (1e5
/// points) plus golden-section refinement. c_1 = 4 at x = 1. Throws for
/// k < 1.
double admissibility_constant(int k);

/// M_m = m (2+m) / (4(m+1)) for m in (0, 1] (equivalently m(2+m)/(4m+4)).
double admissibility_scale(double m);

struct Admissibility {
    double value = 0.0;  ///< L(d_1, ..., d_N)
    bool admissible = false;
};

/// L(d) = sum_k 2(2k-1) c_k d_k M_m^(2k); admissible when L <= m (with
/// 1e-12 slack so the exact boundary case stays admissible). Throws on
/// negative d_i or m outside (0, 1].
Admissibility admissibility_condition(const std::vector<double>& d, double m);

/// The proof polynomial Q(alpha, r) = 4 r^3 a^2 - (7r^3 + 3r^2 - 3r + 1) a
/// + 6r^3 - 2r^2 - 6r + 2; Q(1, r) = 3r^3 - 5r^2 - 3r + 1. Independent
/// oracle for the half-space radius.
double halfspace_proof_poly(double alpha, double r);

} // namespace qbohr
