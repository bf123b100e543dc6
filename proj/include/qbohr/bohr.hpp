#pragma once

#include "qbohr/series.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qbohr {

/// Named coefficient-bound regimes. Each kind fixes the admissible modulus
/// of p_k; membership checks use the bounds only (a superset of the analytic
/// classes, which is the safe direction for certification).
enum class ClassKind { Starlike, DerivStarlike, Bounded, HalfSpace };

struct CoefficientClass {
    ClassKind kind = ClassKind::Bounded;

    static CoefficientClass starlike() { return {ClassKind::Starlike}; }
    static CoefficientClass deriv_starlike() { return {ClassKind::DerivStarlike}; }
    static CoefficientClass bounded() { return {ClassKind::Bounded}; }
    static CoefficientClass halfspace() { return {ClassKind::HalfSpace}; }

    /// Modulus bound for p_k (k >= 1) given t = |p_0|.
    /// Starlike: k (k >= 2), DerivStarlike: 1 (k >= 2), Bounded: 1 - t^2,
    /// HalfSpace: 2(1 - t). For the first two, k = 1 returns 1 (p_1 = 1).
    double bound(int k, double p0_mod) const;

    /// Whether the class pins p_0 = 0 and p_1 = 1.
    bool normalized() const {
        return kind == ClassKind::Starlike || kind == ClassKind::DerivStarlike;
    }

    std::string name() const;
    static CoefficientClass from_name(const std::string& name);
};

struct ClassCheck {
    bool ok = true;
    int first_violation = -1;
};

/// Checks every coefficient against the class bound with 1e-12 slack;
/// reports the first violating index.
ClassCheck validate_class(const QSeries& f, const CoefficientClass& cls);

enum class SampleMode {
    Random,   ///< moduli uniform in [0, bound_k]
    Boundary  ///< moduli exactly at bound_k
};

/// Draws a random member of the bound-defined class: random coefficient
/// directions, moduli per SampleMode. Deterministic for a fixed seed.
QSeries sample_class(const CoefficientClass& cls, int order, std::uint64_t seed,
                     SampleMode mode = SampleMode::Random);

/// Weight family {omega_k}: omega_k vanishes to order k at 0 and obeys the
/// Schwarz bound |omega_k(q)| <= |q|^k. The default monomial family is
/// omega_k(q) = q^k u with |u| = 1, whose majorant on |q| = r is exactly r^k.
class WeightFamily {
public:
    static WeightFamily monomial();

    /// Wraps user-supplied series omega_1, omega_2, ... (index = k - 1).
    /// Each entry must vanish to order k and pass a sampled Schwarz check;
    /// throws std::invalid_argument otherwise. Indices beyond the list fall
    /// back to the Schwarz majorant r^k.
    static WeightFamily user_series(std::vector<QSeries> omegas);

    bool is_monomial() const { return monomial_; }

    /// sup_{|q| = r} |omega_k(q)|, by closed form for the monomial family
    /// and by a 64-slice x 64-angle sampled supremum for user series.
    double majorant(int k, double r) const;

    std::string name() const { return monomial_ ? "monomial" : "user_series"; }

private:
    WeightFamily() = default;
    bool monomial_ = true;
    std::vector<QSeries> omegas_;
};

/// Parameters of the generalized functionals.
struct BohrParams {
    double m = 1.0;              ///< exponent on |p_0|
    std::vector<double> d;       ///< Q_N coefficients d_1..d_N (all >= 0)
    WeightFamily weight = WeightFamily::monomial();

    int degree() const { return static_cast<int>(d.size()); }
};

/// The functionals certified by the suite, named by what they add to the
/// plain majorant sum.
enum class FunctionalId {
    MajorantSum,   ///< sum_k r^k |p_k|
    PoweredSum,    ///< |p_0|^m + sum_{k>=1} W_k(r) |p_k|
    RefinedSum,    ///< PoweredSum + (1/(1+|p_0|) + W_1/(1-W_1)) sum (W_k|p_k|)^2
    ImprovedSum,   ///< PoweredSum + Q_N(area sum)
    HalfSpaceSum,  ///< majorant sum + (1/(1+p_0) + r/(1-r)) sum (r^k|p_k|)^2
};

std::string functional_name(FunctionalId id);
FunctionalId functional_from_name(const std::string& name);

/// sum_{k=0}^{K} r^k |p_k|. Requires 0 <= r < 1.
double bohr_sum(const QSeries& f, double r);

/// |p_0|^m + sum_{k>=1} W_k(r) |p_k| with W_k the weight majorant.
/// Requires 0 <= r < 1 and m in (0, 2].
double powered_sum(const QSeries& f, double r, double m,
                   const WeightFamily& weight = WeightFamily::monomial());

/// PoweredSum plus the quadratic refinement term. Requires m in (0, 1].
double refined_sum(const QSeries& f, double r, double m,
                   const WeightFamily& weight = WeightFamily::monomial());

/// sum_{k>=1} k r^{2k} |p_k|^2 (the normalized area analogue).
double area_sum(const QSeries& f, double r);

/// PoweredSum plus Q_N evaluated at the area sum. Requires m in (0, 1] and
/// all d_i >= 0; admissibility of d is NOT a precondition.
double improved_sum(const QSeries& f, double r, double m, const BohrParams& params);

/// Majorant sum plus the half-space refinement. Requires p_0 real in [0, 1).
double halfspace_sum(const QSeries& f, double r);

/// Dispatch by id (uses params.m, params.d, params.weight as applicable).
double functional_value(FunctionalId id, const QSeries& f, double r,
                        const BohrParams& params);

/// Closed-form upper bound on what truncation at `order` discarded from the
/// functional, for a series in the given class with |p_0| = p0_mod.
TailBound functional_tail(FunctionalId id, const CoefficientClass& cls,
                          double p0_mod, int order, double r,
                          const BohrParams& params);

/// Tail of the area sum alone.
TailBound area_sum_tail(const CoefficientClass& cls, double p0_mod, int order,
                        double r);

/// Value of the functional when every |p_k| sits exactly at the class bound
/// (the truncation-free majorant used in the sharpness analyses).
double class_majorant(FunctionalId id, const CoefficientClass& cls, double p0_mod,
                      double r, const BohrParams& params);

/// Supremum of class_majorant over the free |p_0| in [0, 1) (classes with
/// pinned p_0 have no free parameter).
double class_sup(FunctionalId id, const CoefficientClass& cls, double r,
                 const BohrParams& params);

} // namespace qbohr
