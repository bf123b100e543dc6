#pragma once

#include <cstdint>

namespace qbohr {

/// Modulus threshold below which a value is treated as zero by every
/// "nonzero" precondition in the library.
inline constexpr double kZeroTol = 1e-12;

/// Threshold below which the imaginary part of a quaternion is considered
/// degenerate for slice decomposition.
inline constexpr double kNearRealTol = 1e-9;

/// A quaternion q = x0 + x1 i + x2 j + x3 k over binary64 reals.
///
/// Multiplication follows i^2 = j^2 = k^2 = ijk = -1; it is associative and
/// not commutative. Values are immutable in spirit: all operations are pure.
struct Quaternion {
    double x0 = 0.0;
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double r, double i, double j, double k)
        : x0(r), x1(i), x2(j), x3(k) {}

    static constexpr Quaternion real(double r) { return {r, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion unit_i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion unit_j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion unit_k() { return {0.0, 0.0, 0.0, 1.0}; }
    static constexpr Quaternion zero() { return {}; }
    static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }

    constexpr double re() const { return x0; }
    constexpr Quaternion im() const { return {0.0, x1, x2, x3}; }

    constexpr double norm_sq() const { return x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3; }

    constexpr bool operator==(const Quaternion&) const = default;
};

constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.x0 + b.x0, a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
}

constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.x0 - b.x0, a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
}

constexpr Quaternion operator-(const Quaternion& a) {
    return {-a.x0, -a.x1, -a.x2, -a.x3};
}

constexpr Quaternion operator*(const Quaternion& a, double s) {
    return {a.x0 * s, a.x1 * s, a.x2 * s, a.x3 * s};
}

constexpr Quaternion operator*(double s, const Quaternion& a) { return a * s; }

/// Hamilton product. |a*b| = |a||b| holds to rounding.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
            a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x3 - a.x3 * b.x2,
            a.x0 * b.x2 - a.x1 * b.x3 + a.x2 * b.x0 + a.x3 * b.x1,
            a.x0 * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.x0};
}

constexpr Quaternion mul(const Quaternion& a, const Quaternion& b) { return a * b; }

constexpr Quaternion conj(const Quaternion& q) { return {q.x0, -q.x1, -q.x2, -q.x3}; }

double modulus(const Quaternion& q);

/// Multiplicative inverse conj(q)/|q|^2.
/// Throws std::domain_error when |q| <= kZeroTol.
Quaternion inverse(const Quaternion& q);

/// The decomposition q = x + y I with y >= 0 and I a unit imaginary
/// quaternion (I^2 = -1).
struct SliceForm {
    double x = 0.0;
    double y = 0.0;
    Quaternion imag_unit = Quaternion::unit_i();

    Quaternion recompose() const { return Quaternion::real(x) + imag_unit * y; }
};

/// Splits q into (Re q, |Im q|, Im q / |Im q|). When |Im q| < kNearRealTol
/// the direction is degenerate and the default unit I = i is returned, so
/// decomposition is deterministic for (near-)real inputs.
SliceForm slice_decompose(const Quaternion& q);

/// Deterministic sample from the sphere of unit imaginary quaternions
/// {q : q^2 = -1}.
Quaternion sample_sphere(std::uint64_t seed);

/// Deterministic sample from the unit-modulus boundary |u| = 1.
Quaternion sample_boundary(std::uint64_t seed);

} // namespace qbohr
