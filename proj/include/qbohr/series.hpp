#pragma once

#include "qbohr/quaternion.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace qbohr {

/// A truncated left power series f(q) = sum_{k=0}^{K} q^k p_k with
/// quaternion coefficients. Powers of q multiply from the LEFT; the
/// coefficient sits on the right. Immutable after construction.
class QSeries {
public:
    QSeries() : coeffs_(1) {}
    explicit QSeries(std::vector<Quaternion> coeffs);

    /// Truncation degree K (trailing zero coefficients are permitted).
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// p_k; zero for k beyond the stored order.
    const Quaternion& coeff(int k) const;

    const std::vector<Quaternion>& coeffs() const { return coeffs_; }

    /// The constant series 1 (unit of the *-algebra).
    static QSeries unit();

    /// The series c * q^k.
    static QSeries monomial(int k, const Quaternion& c);

private:
    std::vector<Quaternion> coeffs_;
};

/// Upper bound on the part of a majorant sum discarded by truncation.
struct TailBound {
    double value = 0.0;
};

/// Evaluates f at q with a right-to-left accumulator (acc <- q*acc + p_k),
/// which preserves the left position of the powers of q exactly.
Quaternion evaluate(const QSeries& f, const Quaternion& q);

/// Regular (*-)product: coefficient c_k = sum_n p_n a_{k-n} with f's
/// coefficients on the left. Result order is the sum of the operand orders,
/// or max_order when a nonnegative truncation is requested.
QSeries star_product(const QSeries& f, const QSeries& h, int max_order = -1);

/// f^c: conjugates every coefficient.
QSeries regular_conjugate(const QSeries& f);

/// f^s = f * f^c = f^c * f; its coefficients are real up to rounding.
QSeries symmetrization(const QSeries& f);

/// Regular reciprocal truncated to order k_out, computed by inverting the
/// real-coefficient symmetrization recursively and star-multiplying by f^c.
/// (g * f) and (f * g) equal the unit series up to order k_out.
/// Throws std::domain_error when |p_0| <= kZeroTol.
QSeries regular_reciprocal(const QSeries& f, int k_out);

/// Slice derivative: p_k -> (k+1) p_{k+1}; order drops by one.
QSeries slice_derivative(const QSeries& f);

/// Conjugates q by f^c(q): returns f^c(q)^{-1} q f^c(q). Modulus-preserving;
/// pairs the *-product with the pointwise product. Throws std::domain_error
/// when |f^c(q)| <= kZeroTol.
Quaternion conjugation_transform(const QSeries& f, const Quaternion& q);

/// Parses the series literal format: a JSON array of [x0,x1,x2,x3]
/// quadruples, index = power of q. Throws std::invalid_argument on
/// malformed input.
QSeries parse_series(const std::string& json_text);

/// Serializes to the quadruple-array literal format.
std::string series_to_json(const QSeries& f);

} // namespace qbohr
