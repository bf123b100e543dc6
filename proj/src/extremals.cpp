#include "qbohr/extremals.hpp"

#include "qbohr/radii.hpp"

#include <cmath>
#include <stdexcept>

namespace qbohr {

namespace {

void require_spec(const ExtremalSpec& spec) {
    if (spec.order < 1) throw std::invalid_argument("extremal spec: order must be >= 1");
    if (std::fabs(modulus(spec.u) - 1.0) > 1e-12) {
        throw std::invalid_argument("extremal spec: |u| must be 1");
    }
    switch (spec.family) {
        case Family::MobiusLike:
            if (!(spec.a > 0.0 && spec.a < 1.0)) {
                throw std::invalid_argument("extremal spec: a must lie in (0, 1)");
            }
            break;
        case Family::HalfSpaceMap:
            // a = 1 is the degenerate constant-1 limit and is allowed
            if (!(spec.a > 0.0 && spec.a <= 1.0)) {
                throw std::invalid_argument("extremal spec: a must lie in (0, 1]");
            }
            break;
        default:
            break;
    }
}

// prepends a zero coefficient: g(q) -> q * g(q) for left series
QSeries shift_up(const QSeries& g, int target_order) {
    std::vector<Quaternion> c(static_cast<std::size_t>(target_order) + 1);
    for (int k = 1; k <= target_order; ++k) c[static_cast<std::size_t>(k)] = g.coeff(k - 1);
    return QSeries(std::move(c));
}

} // namespace

std::string family_name(Family family) {
    switch (family) {
        case Family::StarlikeKoebe: return "starlike_koebe";
        case Family::GeomCayley: return "geom_cayley";
        case Family::MobiusLike: return "mobius_like";
        case Family::HalfSpaceMap: return "halfspace_map";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "starlike_koebe") return Family::StarlikeKoebe;
    if (name == "geom_cayley") return Family::GeomCayley;
    if (name == "mobius_like") return Family::MobiusLike;
    if (name == "halfspace_map") return Family::HalfSpaceMap;
    throw std::invalid_argument("unknown extremal family: " + name);
}

QSeries build(const ExtremalSpec& spec) {
    require_spec(spec);
    const int K = spec.order;
    std::vector<Quaternion> c(static_cast<std::size_t>(K) + 1);
    switch (spec.family) {
        case Family::StarlikeKoebe: {
            Quaternion upow = Quaternion::one();  // u^{k-1}
            for (int k = 1; k <= K; ++k) {
                c[static_cast<std::size_t>(k)] = upow * static_cast<double>(k);
                upow = upow * spec.u;
            }
            break;
        }
        case Family::GeomCayley: {
            Quaternion upow = Quaternion::one();
            for (int k = 1; k <= K; ++k) {
                c[static_cast<std::size_t>(k)] = upow;
                upow = upow * spec.u;
            }
            break;
        }
        case Family::MobiusLike: {
            c[0] = Quaternion::real(spec.a);
            double apow = 1.0;  // a^{k-1}
            const double scale = 1.0 - spec.a * spec.a;
            for (int k = 1; k <= K; ++k) {
                c[static_cast<std::size_t>(k)] = spec.u * (-scale * apow);
                apow *= spec.a;
            }
            break;
        }
        case Family::HalfSpaceMap: {
            c[0] = Quaternion::real(spec.a);
            const double scale = 2.0 * (1.0 - spec.a);
            for (int k = 1; k <= K; ++k) {
                c[static_cast<std::size_t>(k)] = spec.u * (-scale);
            }
            break;
        }
    }
    return QSeries(std::move(c));
}

QSeries build_via_star(const ExtremalSpec& spec) {
    require_spec(spec);
    const int K = spec.order;
    switch (spec.family) {
        case Family::StarlikeKoebe: {
            const QSeries base({Quaternion::one(), -spec.u});
            const QSeries rec = regular_reciprocal(base, K);
            return shift_up(star_product(rec, rec, K - 1), K);
        }
        case Family::GeomCayley: {
            const QSeries base({Quaternion::one(), -spec.u});
            return shift_up(regular_reciprocal(base, K - 1), K);
        }
        case Family::MobiusLike: {
            const QSeries denom({Quaternion::one(), Quaternion::real(-spec.a)});
            const QSeries numer({Quaternion::real(spec.a), Quaternion::real(-1.0)});
            const QSeries real_part = star_product(regular_reciprocal(denom, K), numer, K);
            std::vector<Quaternion> c(static_cast<std::size_t>(K) + 1);
            c[0] = real_part.coeff(0);
            for (int k = 1; k <= K; ++k) c[static_cast<std::size_t>(k)] = real_part.coeff(k) * spec.u;
            return QSeries(std::move(c));
        }
        case Family::HalfSpaceMap: {
            const QSeries denom({Quaternion::one(), Quaternion::real(-1.0)});
            const QSeries geom = shift_up(regular_reciprocal(denom, K - 1), K);
            std::vector<Quaternion> c(static_cast<std::size_t>(K) + 1);
            c[0] = Quaternion::real(spec.a);
            const double scale = -2.0 * (1.0 - spec.a);
            for (int k = 1; k <= K; ++k) c[static_cast<std::size_t>(k)] = geom.coeff(k) * spec.u * scale;
            return QSeries(std::move(c));
        }
    }
    throw std::invalid_argument("unknown extremal family");
}

CoefficientClass paired_class(Family family) {
    switch (family) {
        case Family::StarlikeKoebe: return CoefficientClass::starlike();
        case Family::GeomCayley: return CoefficientClass::deriv_starlike();
        case Family::MobiusLike: return CoefficientClass::bounded();
        case Family::HalfSpaceMap: return CoefficientClass::halfspace();
    }
    throw std::invalid_argument("unknown extremal family");
}

double closed_form_value(Family family, FunctionalId id, double r, double a,
                         const BohrParams& params) {
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("radius must lie in [0, 1)");
    const double r2 = r * r;
    const double omr = 1.0 - r;
    switch (family) {
        case Family::StarlikeKoebe:
            if (id == FunctionalId::MajorantSum) return r + (2.0 - r) * r2 / (omr * omr);
            break;
        case Family::GeomCayley:
            if (id == FunctionalId::MajorantSum) return r + r2 / omr;
            break;
        case Family::MobiusLike: {
            const double b = 1.0 - a * a;
            switch (id) {
                case FunctionalId::MajorantSum:
                    return a + b * r / (1.0 - a * r);
                case FunctionalId::PoweredSum:
                    return std::pow(a, params.m) + b * r / (1.0 - a * r);
                case FunctionalId::RefinedSum:
                    // the quadratic refinement telescopes against the geometric sum
                    return std::pow(a, params.m) + b * r / omr;
                case FunctionalId::ImprovedSum: {
                    double acc = std::pow(a, params.m) + b * r / (1.0 - a * r);
                    const double s = b * r / (1.0 - a * a * r2);
                    double s2k = s * s;
                    for (double dk : params.d) {
                        acc += dk * s2k;
                        s2k *= s * s;
                    }
                    return acc;
                }
                default:
                    break;
            }
            break;
        }
        case Family::HalfSpaceMap:
            if (id == FunctionalId::HalfSpaceSum) {
                const double b = 2.0 * (1.0 - a);
                return a + b * r / omr +
                       (1.0 / (1.0 + a) + r / omr) * b * b * r2 / (1.0 - r2);
            }
            break;
    }
    throw std::invalid_argument("closed_form_value: undefined family/functional pairing");
}

TheoremInfo theorem_info(const std::string& id) {
    const std::vector<double> up = {0.9, 0.99, 0.999};
    const std::vector<double> down = {0.1, 0.01, 0.001};
    if (id == "1.1") {
        return {id, CoefficientClass::starlike(), FunctionalId::MajorantSum,
                Family::StarlikeKoebe, false, {}};
    }
    if (id == "1.2") {
        return {id, CoefficientClass::deriv_starlike(), FunctionalId::MajorantSum,
                Family::GeomCayley, false, {}};
    }
    if (id == "1.3") {
        // close-to-convex shares the starlike coefficient bound and extremal
        return {id, CoefficientClass::starlike(), FunctionalId::MajorantSum,
                Family::StarlikeKoebe, false, {}};
    }
    if (id == "B") {
        return {id, CoefficientClass::bounded(), FunctionalId::MajorantSum,
                Family::MobiusLike, true, up};
    }
    if (id == "1.4") {
        return {id, CoefficientClass::bounded(), FunctionalId::PoweredSum,
                Family::MobiusLike, true, up};
    }
    if (id == "1.5") {
        return {id, CoefficientClass::bounded(), FunctionalId::RefinedSum,
                Family::MobiusLike, true, up};
    }
    if (id == "1.6") {
        return {id, CoefficientClass::bounded(), FunctionalId::ImprovedSum,
                Family::MobiusLike, true, up};
    }
    if (id == "1.7") {
        // the violating members sit at small a (alpha = 1 - p_0 near 1)
        return {id, CoefficientClass::halfspace(), FunctionalId::HalfSpaceSum,
                Family::HalfSpaceMap, true, down};
    }
    throw std::invalid_argument("unknown theorem id: " + id);
}

double theorem_radius(const std::string& id, double m) {
    if (id == "1.1" || id == "1.3") return radius_starlike().value;
    if (id == "1.2") return radius_deriv_starlike().value;
    if (id == "B") return radius_classical().value;
    if (id == "1.4" || id == "1.5" || id == "1.6") return radius_generalized(m).value;
    if (id == "1.7") return radius_halfspace().value;
    throw std::invalid_argument("unknown theorem id: " + id);
}

Witness sharpness_witness(const std::string& theorem_id, double r,
                          const BohrParams& params) {
    const TheoremInfo info = theorem_info(theorem_id);
    const double radius = theorem_radius(theorem_id, params.m);
    if (!(r > radius)) {
        throw std::invalid_argument(
            "sharpness_witness: no witness exists at or below the radius");
    }
    ExtremalSpec spec;
    spec.family = info.family;
    spec.u = Quaternion::unit_i();
    spec.order = 2048;
    if (!info.has_parameter) {
        spec.a = 0.0;
        const double value = closed_form_value(info.family, info.functional, r, 0.0, params);
        if (value > 1.0) return {spec, r, value};
        throw std::runtime_error("sharpness_witness: extremal does not exceed 1 at r");
    }
    for (double a : info.ladder) {
        const double value = closed_form_value(info.family, info.functional, r, a, params);
        if (value > 1.0) {
            spec.a = a;
            return {spec, r, value};
        }
    }
    throw std::runtime_error("sharpness_witness: no ladder member exceeds 1 at r");
}

} // namespace qbohr
