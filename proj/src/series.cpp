#include "qbohr/series.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace qbohr {

namespace {
const Quaternion kZeroQuaternion{};
}

QSeries::QSeries(std::vector<Quaternion> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.resize(1);
}

const Quaternion& QSeries::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZeroQuaternion;
    return coeffs_[static_cast<std::size_t>(k)];
}

QSeries QSeries::unit() { return QSeries({Quaternion::one()}); }

QSeries QSeries::monomial(int k, const Quaternion& c) {
    std::vector<Quaternion> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return QSeries(std::move(v));
}

Quaternion evaluate(const QSeries& f, const Quaternion& q) {
    const int K = f.order();
    Quaternion acc = f.coeff(K);
    for (int k = K - 1; k >= 0; --k) {
        acc = q * acc + f.coeff(k);
    }
    return acc;
}

QSeries star_product(const QSeries& f, const QSeries& h, int max_order) {
    const int full = f.order() + h.order();
    const int K = (max_order >= 0 && max_order < full) ? max_order : full;
    std::vector<Quaternion> c(static_cast<std::size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) {
        Quaternion s{};
        const int lo = std::max(0, k - h.order());
        const int hi = std::min(k, f.order());
        for (int n = lo; n <= hi; ++n) {
            s = s + f.coeff(n) * h.coeff(k - n);
        }
        c[static_cast<std::size_t>(k)] = s;
    }
    return QSeries(std::move(c));
}

QSeries regular_conjugate(const QSeries& f) {
    std::vector<Quaternion> c(f.coeffs().size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = conj(f.coeffs()[k]);
    return QSeries(std::move(c));
}

QSeries symmetrization(const QSeries& f) { return star_product(f, regular_conjugate(f)); }

QSeries regular_reciprocal(const QSeries& f, int k_out) {
    if (k_out < 0) throw std::invalid_argument("regular_reciprocal: negative output order");
    if (modulus(f.coeff(0)) <= kZeroTol) {
        throw std::domain_error("regular_reciprocal: reciprocal undefined at origin (|p_0| ~ 0)");
    }
    const QSeries fs = symmetrization(f);
    // The symmetrization has real coefficients; invert the real series.
    std::vector<double> s(static_cast<std::size_t>(k_out) + 1, 0.0);
    for (int k = 0; k <= k_out; ++k) s[static_cast<std::size_t>(k)] = fs.coeff(k).x0;
    std::vector<double> b(static_cast<std::size_t>(k_out) + 1, 0.0);
    b[0] = 1.0 / s[0];
    for (int k = 1; k <= k_out; ++k) {
        double acc = 0.0;
        for (int j = 1; j <= k; ++j) acc += s[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(k - j)];
        b[static_cast<std::size_t>(k)] = -acc / s[0];
    }
    std::vector<Quaternion> inv(b.size());
    for (std::size_t k = 0; k < b.size(); ++k) inv[k] = Quaternion::real(b[k]);
    return star_product(QSeries(std::move(inv)), regular_conjugate(f), k_out);
}

QSeries slice_derivative(const QSeries& f) {
    const int K = f.order();
    std::vector<Quaternion> c(static_cast<std::size_t>(std::max(K, 1)));
    for (int k = 0; k < K; ++k) {
        c[static_cast<std::size_t>(k)] = f.coeff(k + 1) * static_cast<double>(k + 1);
    }
    return QSeries(std::move(c));
}

Quaternion conjugation_transform(const QSeries& f, const Quaternion& q) {
    const Quaternion w = evaluate(regular_conjugate(f), q);
    if (modulus(w) <= kZeroTol) {
        throw std::domain_error("conjugation_transform: f^c vanishes at q");
    }
    return inverse(w) * q * w;
}

QSeries parse_series(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("series literal: ") + e.what());
    }
    if (!j.is_array()) throw std::invalid_argument("series literal: expected an array of quadruples");
    std::vector<Quaternion> c;
    c.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 4) {
            throw std::invalid_argument("series literal: each coefficient must be [x0,x1,x2,x3]");
        }
        for (const auto& v : item) {
            if (!v.is_number()) throw std::invalid_argument("series literal: components must be numbers");
        }
        c.push_back({item[0].get<double>(), item[1].get<double>(), item[2].get<double>(),
                     item[3].get<double>()});
    }
    if (c.empty()) c.push_back({});
    return QSeries(std::move(c));
}

std::string series_to_json(const QSeries& f) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& p : f.coeffs()) {
        j.push_back({p.x0, p.x1, p.x2, p.x3});
    }
    return j.dump();
}

} // namespace qbohr
