#include "qbohr/bohr.hpp"

#include "qbohr/rng.hpp"
#include "qbohr/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qbohr {

namespace {

void require_radius(double r) {
    if (!(r >= 0.0 && r < 1.0)) {
        throw std::domain_error("radius must lie in [0, 1)");
    }
}

void require_m(double m, double upper) {
    if (!(m > 0.0 && m <= upper)) {
        throw std::domain_error("exponent m out of range");
    }
}

Quaternion random_direction(SplitMix64& g) {
    for (;;) {
        const Quaternion v{g.gaussian(), g.gaussian(), g.gaussian(), g.gaussian()};
        const double n = modulus(v);
        if (n > 1e-6) return v * (1.0 / n);
    }
}

// sum_{k > K} x^k
double geometric_tail(double x, int order) {
    if (x <= 0.0) return 0.0;
    return std::pow(x, order + 1) / (1.0 - x);
}

// sum_{k > K} k x^k
double weighted_geometric_tail(double x, int order) {
    if (x <= 0.0) return 0.0;
    const double K = static_cast<double>(order);
    return std::pow(x, order + 1) * ((K + 1.0) - K * x) / ((1.0 - x) * (1.0 - x));
}

// Upper bound on sum_{k > K} k^p x^k for p >= 2: explicit partial sum plus a
// geometric remainder (valid because the term ratio decreases toward x).
double power_tail(double x, int order, int p) {
    if (p == 0) return geometric_tail(x, order);
    if (p == 1) return weighted_geometric_tail(x, order);
    if (x <= 0.0) return 0.0;
    double acc = 0.0;
    double k = static_cast<double>(order) + 1.0;
    double xk = std::pow(x, order + 1);
    for (int it = 0; it < 2000000; ++it) {
        const double term = std::pow(k, p) * xk;
        acc += term;
        const double ratio = std::pow((k + 1.0) / k, p) * x;
        if (ratio < 1.0 && term <= 1e-18 * acc + 1e-300) {
            acc += term * ratio / (1.0 - ratio);
            break;
        }
        xk *= x;
        k += 1.0;
        if (xk == 0.0) break;
    }
    return acc;
}

// The sampled grid used for user-series weight suprema: 64 imaginary units
// times 64 angles, fixed seeds.
const std::vector<Quaternion>& slice_grid() {
    static const std::vector<Quaternion> units = [] {
        std::vector<Quaternion> v;
        v.reserve(64);
        for (std::uint64_t s = 0; s < 64; ++s) v.push_back(sample_sphere(derive_seed(0x51D5, s)));
        return v;
    }();
    return units;
}

double sampled_sup(const QSeries& omega, double r, int n_units, int n_angles) {
    double sup = 0.0;
    const auto& units = slice_grid();
    for (int s = 0; s < n_units; ++s) {
        const Quaternion& I = units[static_cast<std::size_t>(s)];
        for (int t = 0; t < n_angles; ++t) {
            const double theta = 6.283185307179586476925287 * t / n_angles;
            const Quaternion q = Quaternion::real(r * std::cos(theta)) + I * (r * std::sin(theta));
            sup = std::max(sup, modulus(evaluate(omega, q)));
        }
    }
    return sup;
}

} // namespace

double CoefficientClass::bound(int k, double p0_mod) const {
    if (k < 1) throw std::invalid_argument("coefficient bound: k must be >= 1");
    switch (kind) {
        case ClassKind::Starlike:
            return k == 1 ? 1.0 : static_cast<double>(k);
        case ClassKind::DerivStarlike:
            return 1.0;
        case ClassKind::Bounded:
            return 1.0 - p0_mod * p0_mod;
        case ClassKind::HalfSpace:
            return 2.0 * (1.0 - p0_mod);
    }
    return 0.0;
}

std::string CoefficientClass::name() const {
    switch (kind) {
        case ClassKind::Starlike: return "starlike";
        case ClassKind::DerivStarlike: return "deriv_starlike";
        case ClassKind::Bounded: return "bounded";
        case ClassKind::HalfSpace: return "halfspace";
    }
    return "?";
}

CoefficientClass CoefficientClass::from_name(const std::string& name) {
    if (name == "starlike") return starlike();
    if (name == "deriv_starlike") return deriv_starlike();
    if (name == "bounded") return bounded();
    if (name == "halfspace") return halfspace();
    throw std::invalid_argument("unknown coefficient class: " + name);
}

ClassCheck validate_class(const QSeries& f, const CoefficientClass& cls) {
    constexpr double slack = 1e-12;
    const double t = modulus(f.coeff(0));
    if (cls.normalized()) {
        if (t > slack) return {false, 0};
        if (modulus(f.coeff(1) - Quaternion::one()) > slack) return {false, 1};
    } else if (cls.kind == ClassKind::HalfSpace) {
        const Quaternion p0 = f.coeff(0);
        if (modulus(p0.im()) > slack || p0.x0 < -slack || p0.x0 >= 1.0) return {false, 0};
    } else {
        if (t >= 1.0 + slack) return {false, 0};
    }
    const int k_start = cls.normalized() ? 2 : 1;
    for (int k = k_start; k <= f.order(); ++k) {
        if (modulus(f.coeff(k)) > cls.bound(k, t) + slack) return {false, k};
    }
    return {true, -1};
}

QSeries sample_class(const CoefficientClass& cls, int order, std::uint64_t seed,
                     SampleMode mode) {
    if (order < 1) throw std::invalid_argument("sample_class: order must be >= 1");
    SplitMix64 g(seed);
    std::vector<Quaternion> c(static_cast<std::size_t>(order) + 1);
    double t = 0.0;
    int k_start = 1;
    if (cls.normalized()) {
        c[0] = Quaternion::zero();
        c[1] = Quaternion::one();
        k_start = 2;
    } else if (cls.kind == ClassKind::HalfSpace) {
        t = g.uniform01();
        c[0] = Quaternion::real(t);
    } else {
        t = g.uniform01();
        c[0] = random_direction(g) * t;
    }
    for (int k = k_start; k <= order; ++k) {
        const double bound = cls.bound(k, t);
        const double mod = (mode == SampleMode::Boundary) ? bound : g.uniform(0.0, bound);
        c[static_cast<std::size_t>(k)] = random_direction(g) * mod;
    }
    return QSeries(std::move(c));
}

WeightFamily WeightFamily::monomial() { return WeightFamily(); }

WeightFamily WeightFamily::user_series(std::vector<QSeries> omegas) {
    constexpr double vanish_tol = 1e-10;
    constexpr double schwarz_slack = 1e-9;
    for (std::size_t i = 0; i < omegas.size(); ++i) {
        const int k = static_cast<int>(i) + 1;
        for (int j = 0; j < k; ++j) {
            if (modulus(omegas[i].coeff(j)) > vanish_tol) {
                throw std::invalid_argument("weight omega_" + std::to_string(k) +
                                            " does not vanish to order " + std::to_string(k));
            }
        }
        for (int ri = 1; ri <= 9; ++ri) {
            const double r = 0.1 * ri;
            if (sampled_sup(omegas[i], r, 16, 16) > std::pow(r, k) * (1.0 + schwarz_slack) + 1e-12) {
                throw std::invalid_argument("weight omega_" + std::to_string(k) +
                                            " fails the sampled Schwarz bound");
            }
        }
    }
    WeightFamily w;
    w.monomial_ = false;
    w.omegas_ = std::move(omegas);
    return w;
}

double WeightFamily::majorant(int k, double r) const {
    if (k < 1) throw std::invalid_argument("weight majorant: k must be >= 1");
    if (monomial_ || k > static_cast<int>(omegas_.size())) return std::pow(r, k);
    return sampled_sup(omegas_[static_cast<std::size_t>(k) - 1], r, 64, 64);
}

std::string functional_name(FunctionalId id) {
    switch (id) {
        case FunctionalId::MajorantSum: return "sum";
        case FunctionalId::PoweredSum: return "powered";
        case FunctionalId::RefinedSum: return "refined";
        case FunctionalId::ImprovedSum: return "improved";
        case FunctionalId::HalfSpaceSum: return "halfspace";
    }
    return "?";
}

FunctionalId functional_from_name(const std::string& name) {
    if (name == "sum") return FunctionalId::MajorantSum;
    if (name == "powered") return FunctionalId::PoweredSum;
    if (name == "refined") return FunctionalId::RefinedSum;
    if (name == "improved") return FunctionalId::ImprovedSum;
    if (name == "halfspace") return FunctionalId::HalfSpaceSum;
    throw std::invalid_argument("unknown functional: " + name);
}

double bohr_sum(const QSeries& f, double r) {
    require_radius(r);
    double acc = 0.0;
    double rk = 1.0;
    for (int k = 0; k <= f.order(); ++k) {
        acc += rk * modulus(f.coeff(k));
        rk *= r;
    }
    return acc;
}

double powered_sum(const QSeries& f, double r, double m, const WeightFamily& weight) {
    require_radius(r);
    require_m(m, 2.0);
    double acc = std::pow(modulus(f.coeff(0)), m);
    if (weight.is_monomial()) {
        double rk = r;
        for (int k = 1; k <= f.order(); ++k) {
            acc += rk * modulus(f.coeff(k));
            rk *= r;
        }
    } else {
        for (int k = 1; k <= f.order(); ++k) {
            const double pk = modulus(f.coeff(k));
            if (pk > 0.0) acc += weight.majorant(k, r) * pk;
        }
    }
    return acc;
}

double refined_sum(const QSeries& f, double r, double m, const WeightFamily& weight) {
    require_radius(r);
    require_m(m, 1.0);
    const double base = powered_sum(f, r, m, weight);
    const double w1 = weight.is_monomial() ? r : weight.majorant(1, r);
    const double prefactor = 1.0 / (1.0 + modulus(f.coeff(0))) + w1 / (1.0 - w1);
    double quad = 0.0;
    if (weight.is_monomial()) {
        double rk = r;
        for (int k = 1; k <= f.order(); ++k) {
            const double term = rk * modulus(f.coeff(k));
            quad += term * term;
            rk *= r;
        }
    } else {
        for (int k = 1; k <= f.order(); ++k) {
            const double pk = modulus(f.coeff(k));
            if (pk > 0.0) {
                const double term = weight.majorant(k, r) * pk;
                quad += term * term;
            }
        }
    }
    return base + prefactor * quad;
}

double area_sum(const QSeries& f, double r) {
    require_radius(r);
    double acc = 0.0;
    const double r2 = r * r;
    double r2k = r2;
    for (int k = 1; k <= f.order(); ++k) {
        const double pk = modulus(f.coeff(k));
        acc += k * r2k * pk * pk;
        r2k *= r2;
    }
    return acc;
}

namespace {

double q_polynomial(const std::vector<double>& d, double w) {
    double acc = 0.0;
    double wk = w;
    for (double dk : d) {
        if (dk < 0.0) throw std::invalid_argument("Q_N coefficients must be nonnegative");
        acc += dk * wk;
        wk *= w;
    }
    return acc;
}

} // namespace

double improved_sum(const QSeries& f, double r, double m, const BohrParams& params) {
    require_radius(r);
    require_m(m, 1.0);
    return powered_sum(f, r, m, params.weight) + q_polynomial(params.d, area_sum(f, r));
}

double halfspace_sum(const QSeries& f, double r) {
    require_radius(r);
    const Quaternion p0 = f.coeff(0);
    if (modulus(p0.im()) > kZeroTol || p0.x0 < 0.0 || p0.x0 >= 1.0) {
        throw std::domain_error("halfspace_sum: p_0 must be real in [0, 1)");
    }
    const double prefactor = 1.0 / (1.0 + p0.x0) + r / (1.0 - r);
    double lin = p0.x0;
    double quad = 0.0;
    double rk = r;
    for (int k = 1; k <= f.order(); ++k) {
        const double term = rk * modulus(f.coeff(k));
        lin += term;
        quad += term * term;
        rk *= r;
    }
    return lin + prefactor * quad;
}

double functional_value(FunctionalId id, const QSeries& f, double r,
                        const BohrParams& params) {
    switch (id) {
        case FunctionalId::MajorantSum: return bohr_sum(f, r);
        case FunctionalId::PoweredSum: return powered_sum(f, r, params.m, params.weight);
        case FunctionalId::RefinedSum: return refined_sum(f, r, params.m, params.weight);
        case FunctionalId::ImprovedSum: return improved_sum(f, r, params.m, params);
        case FunctionalId::HalfSpaceSum: return halfspace_sum(f, r);
    }
    throw std::invalid_argument("unknown functional id");
}

namespace {

// tail of sum_{k > K} W_k(r) bound_k, with W_k <= r^k (Schwarz majorant)
double linear_tail(const CoefficientClass& cls, double t, int order, double r) {
    switch (cls.kind) {
        case ClassKind::Starlike: return weighted_geometric_tail(r, order);
        case ClassKind::DerivStarlike: return geometric_tail(r, order);
        case ClassKind::Bounded: return (1.0 - t * t) * geometric_tail(r, order);
        case ClassKind::HalfSpace: return 2.0 * (1.0 - t) * geometric_tail(r, order);
    }
    return 0.0;
}

// tail of sum_{k > K} (r^k bound_k)^2
double quadratic_tail(const CoefficientClass& cls, double t, int order, double r) {
    const double x = r * r;
    switch (cls.kind) {
        case ClassKind::Starlike: return power_tail(x, order, 2);
        case ClassKind::DerivStarlike: return geometric_tail(x, order);
        case ClassKind::Bounded: {
            const double b = 1.0 - t * t;
            return b * b * geometric_tail(x, order);
        }
        case ClassKind::HalfSpace: {
            const double b = 2.0 * (1.0 - t);
            return b * b * geometric_tail(x, order);
        }
    }
    return 0.0;
}

} // namespace

TailBound area_sum_tail(const CoefficientClass& cls, double p0_mod, int order, double r) {
    require_radius(r);
    const double x = r * r;
    switch (cls.kind) {
        case ClassKind::Starlike: return {power_tail(x, order, 3)};
        case ClassKind::DerivStarlike: return {weighted_geometric_tail(x, order)};
        case ClassKind::Bounded: {
            const double b = 1.0 - p0_mod * p0_mod;
            return {b * b * weighted_geometric_tail(x, order)};
        }
        case ClassKind::HalfSpace: {
            const double b = 2.0 * (1.0 - p0_mod);
            return {b * b * weighted_geometric_tail(x, order)};
        }
    }
    return {0.0};
}

TailBound functional_tail(FunctionalId id, const CoefficientClass& cls,
                          double p0_mod, int order, double r,
                          const BohrParams& params) {
    require_radius(r);
    const double t = p0_mod;
    switch (id) {
        case FunctionalId::MajorantSum:
        case FunctionalId::PoweredSum:
            return {linear_tail(cls, t, order, r)};
        case FunctionalId::RefinedSum: {
            const double prefactor = 1.0 / (1.0 + t) + r / (1.0 - r);
            return {linear_tail(cls, t, order, r) +
                    prefactor * quadratic_tail(cls, t, order, r)};
        }
        case FunctionalId::ImprovedSum: {
            // Q_N is nondecreasing, so bounding its argument from above by the
            // full class majorant makes the increment a valid tail bound.
            const double s_maj = [&] {
                const double r2 = r * r;
                switch (cls.kind) {
                    case ClassKind::Bounded: {
                        const double c = 1.0 - t * t;
                        return c * c * r2 / ((1.0 - r2) * (1.0 - r2));
                    }
                    case ClassKind::HalfSpace: {
                        const double c = 2.0 * (1.0 - t);
                        return c * c * r2 / ((1.0 - r2) * (1.0 - r2));
                    }
                    case ClassKind::DerivStarlike:
                        return r2 / ((1.0 - r2) * (1.0 - r2));
                    case ClassKind::Starlike:
                        return power_tail(r2, 0, 3);
                }
                return 0.0;
            }();
            const double s_tail = area_sum_tail(cls, t, order, r).value;
            const double q_increment =
                q_polynomial(params.d, s_maj + s_tail) - q_polynomial(params.d, s_maj);
            return {linear_tail(cls, t, order, r) + q_increment};
        }
        case FunctionalId::HalfSpaceSum: {
            const double prefactor = 1.0 / (1.0 + t) + r / (1.0 - r);
            return {linear_tail(cls, t, order, r) +
                    prefactor * quadratic_tail(cls, t, order, r)};
        }
    }
    return {0.0};
}

double class_majorant(FunctionalId id, const CoefficientClass& cls, double p0_mod,
                      double r, const BohrParams& params) {
    require_radius(r);
    const double t = cls.normalized() ? 0.0 : p0_mod;
    const double r2 = r * r;
    const double omr = 1.0 - r;
    const double omr2 = 1.0 - r2;
    const double lin = [&] {
        switch (cls.kind) {
            case ClassKind::Starlike: return r + r2 * (2.0 - r) / (omr * omr);
            case ClassKind::DerivStarlike: return r + r2 / omr;
            case ClassKind::Bounded: return (1.0 - t * t) * r / omr;
            case ClassKind::HalfSpace: return 2.0 * (1.0 - t) * r / omr;
        }
        return 0.0;
    }();
    switch (id) {
        case FunctionalId::MajorantSum:
            return cls.normalized() ? lin : t + lin;
        case FunctionalId::PoweredSum:
            return cls.normalized() ? lin : std::pow(t, params.m) + lin;
        case FunctionalId::RefinedSum: {
            if (cls.kind != ClassKind::Bounded) {
                throw std::invalid_argument("refined majorant defined for the bounded class");
            }
            const double b = 1.0 - t * t;
            const double prefactor = 1.0 / (1.0 + t) + r / omr;
            return std::pow(t, params.m) + lin + prefactor * b * b * r2 / omr2;
        }
        case FunctionalId::ImprovedSum: {
            if (cls.kind != ClassKind::Bounded) {
                throw std::invalid_argument("improved majorant defined for the bounded class");
            }
            const double b = 1.0 - t * t;
            const double s = b * b * r2 / (omr2 * omr2);
            return std::pow(t, params.m) + lin + q_polynomial(params.d, s);
        }
        case FunctionalId::HalfSpaceSum: {
            if (cls.kind != ClassKind::HalfSpace) {
                throw std::invalid_argument("halfspace majorant defined for the halfspace class");
            }
            const double b = 2.0 * (1.0 - t);
            const double prefactor = 1.0 / (1.0 + t) + r / omr;
            return t + lin + prefactor * b * b * r2 / omr2;
        }
    }
    throw std::invalid_argument("unknown functional id");
}

double class_sup(FunctionalId id, const CoefficientClass& cls, double r,
                 const BohrParams& params) {
    require_radius(r);
    if (cls.normalized()) return class_majorant(id, cls, 0.0, r, params);
    const auto value = [&](double t) { return class_majorant(id, cls, t, r, params); };
    const double t_max = 1.0 - 1e-9;
    const int n = 2048;
    double best = value(0.0);
    int best_i = 0;
    for (int i = 1; i <= n; ++i) {
        const double v = value(t_max * i / n);
        if (v >= best) {
            best = v;
            best_i = i;
        }
    }
    const double lo = t_max * std::max(0, best_i - 1) / n;
    const double hi = t_max * std::min(n, best_i + 1) / n;
    const double t_star = golden_section_max(value, lo, hi);
    return std::max(best, value(t_star));
}

} // namespace qbohr
