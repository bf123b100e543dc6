#include "qbohr/quaternion.hpp"
#include "qbohr/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace qbohr {

double SplitMix64::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform01();
    double u2 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double mag = std::sqrt(-2.0 * std::log(u1));
    spare_ = mag * std::sin(6.283185307179586476925287 * u2);
    has_spare_ = true;
    return mag * std::cos(6.283185307179586476925287 * u2);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed ^ (0xA3C59AC2B54E9CD5ull * (index + 1)));
    return g.next();
}

double modulus(const Quaternion& q) { return std::sqrt(q.norm_sq()); }

Quaternion inverse(const Quaternion& q) {
    const double n2 = q.norm_sq();
    if (n2 <= kZeroTol * kZeroTol) {
        throw std::domain_error("quaternion inverse: zero has no inverse");
    }
    return conj(q) * (1.0 / n2);
}

SliceForm slice_decompose(const Quaternion& q) {
    SliceForm s;
    s.x = q.x0;
    const Quaternion im = q.im();
    const double y = modulus(im);
    s.y = y;
    if (y >= kNearRealTol) {
        s.imag_unit = im * (1.0 / y);
    } else {
        s.imag_unit = Quaternion::unit_i();
    }
    return s;
}

Quaternion sample_sphere(std::uint64_t seed) {
    SplitMix64 g(seed);
    for (;;) {
        const double a = g.gaussian();
        const double b = g.gaussian();
        const double c = g.gaussian();
        const double n = std::sqrt(a * a + b * b + c * c);
        if (n > 1e-6) return {0.0, a / n, b / n, c / n};
    }
}

Quaternion sample_boundary(std::uint64_t seed) {
    SplitMix64 g(seed);
    for (;;) {
        const double a = g.gaussian();
        const double b = g.gaussian();
        const double c = g.gaussian();
        const double d = g.gaussian();
        const double n = std::sqrt(a * a + b * b + c * c + d * d);
        if (n > 1e-6) return {a / n, b / n, c / n, d / n};
    }
}

} // namespace qbohr
