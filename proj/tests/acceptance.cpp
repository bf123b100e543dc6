// Acceptance suite: runs every certification criterion at its stated
// tolerance and prints one PASS/FAIL line per criterion.

#include "qbohr/bohr.hpp"
#include "qbohr/extremals.hpp"
#include "qbohr/harness.hpp"
#include "qbohr/radii.hpp"
#include "qbohr/rng.hpp"
#include "qbohr/series.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace qbohr;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Check {
    Outcome& out;

    void require(bool cond, const std::string& what) {
        if (!cond && out.ok) {
            out.ok = false;
            out.detail = what;
        }
    }

    void within(double value, double expect, double tol, const std::string& what) {
        if (!(std::fabs(value - expect) <= tol)) {
            std::ostringstream os;
            os << what << ": got " << value << ", want " << expect << " +/- " << tol;
            require(false, os.str());
        }
    }
};

Quaternion random_quaternion(SplitMix64& g, double scale = 1.0) {
    return {g.uniform(-scale, scale), g.uniform(-scale, scale), g.uniform(-scale, scale),
            g.uniform(-scale, scale)};
}

QSeries random_series(SplitMix64& g, int order, double scale = 1.0) {
    std::vector<Quaternion> c(static_cast<std::size_t>(order) + 1);
    for (auto& p : c) p = random_quaternion(g, scale);
    return QSeries(std::move(c));
}

// ---- criterion 1: radius constants ---------------------------------------

Outcome criterion_radii() {
    Outcome out;
    Check check{out};
    check.within(radius_halfspace().value, 0.24683, 5e-6, "R*");
    check.within(radius_starlike().value, 0.38196601125010515, 1e-12, "(3-sqrt5)/2");
    check.within(radius_deriv_starlike().value, 0.5, 0.0, "1/2");
    check.within(radius_classical().value, 1.0 / 3.0, 1e-15, "1/3");
    for (double m : {0.1, 0.5, 1.0, 2.0}) {
        const double closed = radius_generalized(m).value;
        check.within(closed, m / (2.0 + m), 1e-15, "R_m closed form");
        check.within(radius_generalized_infimum(m).value, closed, 1e-8, "R_m infimum oracle");
    }
    return out;
}

// ---- criterion 2: extremal equality at the radius -------------------------

Outcome criterion_equality() {
    Outcome out;
    Check check{out};
    const double r_star = radius_starlike().value;
    check.within(closed_form_value(Family::StarlikeKoebe, FunctionalId::MajorantSum, r_star,
                                   0.0, {}),
                 1.0, 1e-12, "starlike majorant at its radius");
    check.require(
        closed_form_value(Family::GeomCayley, FunctionalId::MajorantSum, 0.5, 0.0, {}) == 1.0,
        "cayley majorant at 1/2 must equal 1 exactly");
    for (double m : {0.1, 0.5, 1.0, 2.0}) {
        BohrParams params;
        params.m = m;
        const double rm = radius_generalized(m).value;
        check.within(
            closed_form_value(Family::MobiusLike, FunctionalId::PoweredSum, rm, 0.999, params),
            1.0, 1e-2, "powered sum ladder at R_m");
        if (m <= 1.0) {
            check.within(closed_form_value(Family::MobiusLike, FunctionalId::RefinedSum, rm,
                                           0.999, params),
                         1.0, 1e-2, "refined sum ladder at R_m");
        }
    }
    check.within(closed_form_value(Family::HalfSpaceMap, FunctionalId::HalfSpaceSum,
                                   radius_halfspace().value, 0.999, {}),
                 1.0, 1e-2, "halfspace sum at R*");
    return out;
}

// ---- criterion 3: sharpness witnesses -------------------------------------

Outcome criterion_witnesses() {
    Outcome out;
    Check check{out};
    for (const std::string id : {"1.1", "1.2", "1.3", "B", "1.4", "1.5", "1.6", "1.7"}) {
        BohrParams params;
        if (id == "1.6") params.d = {8.0 / 9.0};
        const double r = theorem_radius(id, params.m) + 0.01;
        const Witness w = sharpness_witness(id, r, params);
        check.require(w.value > 1.0, "witness for theorem " + id + " must exceed 1");
        // the designated ladder end works as well
        const TheoremInfo info = theorem_info(id);
        const double a_end = id == "1.7" ? 0.001 : 0.999;
        if (info.has_parameter) {
            check.require(
                closed_form_value(info.family, info.functional, r, a_end, params) > 1.0,
                "designated extremal for theorem " + id + " must exceed 1");
        }
    }
    return out;
}

// ---- criterion 4: class-certification sweeps -------------------------------

Outcome criterion_certification() {
    Outcome out;
    Check check{out};
    for (const PlannedRun& run : default_verification_plan(256, 32, 2048)) {
        const VerificationReport report = verify(run.theorem_id, run.opts, 7);
        std::ostringstream label;
        label << "theorem " << run.theorem_id << " (m=" << run.opts.params.m << ")";
        check.require(report.verdict == Verdict::Certified, label.str() + " not certified");
        check.require(report.max_value + report.tail_bound <= 1.0 + 1e-9,
                      label.str() + " exceeds 1 + 1e-9");
        check.require(verdict_exit_code(report.verdict) == 0, label.str() + " exit code");
    }
    return out;
}

// ---- criterion 5: algebra oracle suite -------------------------------------

Outcome criterion_algebra() {
    Outcome out;
    Check check{out};
    SplitMix64 g(20240811);

    // star-product pointwise identity, 1e-9 over 1e3 cases
    int tested = 0;
    while (tested < 1000) {
        const QSeries f = random_series(g, 8);
        const QSeries h = random_series(g, 8);
        const Quaternion q = sample_boundary(g.next()) * g.uniform(0.05, 0.8);
        const Quaternion fq = evaluate(f, q);
        if (modulus(fq) < 1e-6) continue;
        ++tested;
        const Quaternion expect = fq * evaluate(h, inverse(fq) * q * fq);
        check.require(modulus(evaluate(star_product(f, h), q) - expect) <= 1e-9,
                      "star-product pointwise identity");
    }

    // symmetrization realness at 1e-12 (coefficients scaled to <= 1)
    for (int it = 0; it < 200; ++it) {
        std::vector<Quaternion> c(11);
        for (auto& p : c) p = sample_boundary(g.next()) * g.uniform01();
        const QSeries fs = symmetrization(QSeries(std::move(c)));
        for (const auto& p : fs.coeffs()) {
            check.require(modulus(p.im()) <= 1e-12 * 11.0, "symmetrization realness");
        }
    }

    // reciprocal identity to order 64 at 1e-10
    for (int it = 0; it < 100; ++it) {
        std::vector<Quaternion> c(33);
        c[0] = sample_boundary(g.next());
        double bound = 0.2;
        for (std::size_t k = 1; k < c.size(); ++k) {
            c[k] = sample_boundary(g.next()) * g.uniform(0.0, bound);
            bound *= 0.5;
        }
        const QSeries f(std::move(c));
        const QSeries left = star_product(regular_reciprocal(f, 64), f, 64);
        check.require(modulus(left.coeff(0) - Quaternion::one()) <= 1e-10,
                      "reciprocal identity at order 0");
        for (int k = 1; k <= 64; ++k) {
            check.require(modulus(left.coeff(k)) <= 1e-10, "reciprocal identity");
        }
    }

    // transform inversion at 1e-10
    for (int it = 0; it < 500; ++it) {
        const QSeries f = random_series(g, 6);
        const Quaternion q = sample_boundary(g.next()) * g.uniform(0.0, 0.9);
        const Quaternion back =
            conjugation_transform(regular_conjugate(f), conjugation_transform(f, q));
        check.require(modulus(back - q) <= 1e-10, "transform inversion");
    }

    // slice-restriction equivalence against the complex power-sum oracle
    for (int it = 0; it < 1000; ++it) {
        std::vector<Quaternion> c(17);
        for (auto& p : c) p = {g.uniform(-1.0, 1.0), g.uniform(-1.0, 1.0), 0.0, 0.0};
        const QSeries f(std::move(c));
        const oracles::cplx z{g.uniform(-0.65, 0.65), g.uniform(-0.65, 0.65)};
        const oracles::cplx expect = oracles::eval_power_sum(oracles::slice_coeffs(f), z);
        const Quaternion got = evaluate(f, oracles::from_slice_i(z));
        check.require(std::abs(oracles::to_slice_i(got) - expect) <= 1e-10,
                      "slice-restriction equivalence");
        check.require(std::fabs(got.x2) + std::fabs(got.x3) <= 1e-12, "slice preservation");
    }
    return out;
}

// ---- criterion 6: admissibility constants ----------------------------------

Outcome criterion_constants() {
    Outcome out;
    Check check{out};
    check.within(admissibility_constant(1), 4.0, 1e-12, "c_1");
    check.within(admissibility_constant(2), 0.6429023402004155, 1e-9, "c_2 vs grid oracle");
    double prev = admissibility_constant(1);
    for (int k = 2; k <= 10; ++k) {
        const double ck = admissibility_constant(k);
        check.require(ck <= prev + 1e-12, "c_k nonincreasing");
        prev = ck;
    }
    const Admissibility adm = admissibility_condition({8.0 / 9.0}, 1.0);
    check.within(adm.value, 1.0, 1e-12, "boundary admissibility value");
    check.require(adm.admissible, "boundary case must be admissible");
    return out;
}

// ---- criterion 7: area-sum bound -------------------------------------------

Outcome criterion_area_bound() {
    Outcome out;
    Check check{out};
    int violations = 0;
    for (int i = 0; i < 1000; ++i) {
        const QSeries f =
            sample_class(CoefficientClass::bounded(), 512, derive_seed(0xA5EA, i));
        const double t = modulus(f.coeff(0));
        const double b = 1.0 - t * t;
        for (double r : {0.1, 0.2, 0.3}) {
            const double bound = b * b * r * r / ((1.0 - r * r) * (1.0 - r * r));
            const double tail = area_sum_tail(CoefficientClass::bounded(), t, 512, r).value;
            if (!(area_sum(f, r) <= bound + tail + 1e-12)) ++violations;
        }
    }
    check.require(violations == 0,
                  "area-sum bound violated " + std::to_string(violations) + " times");
    return out;
}

} // namespace

int main() {
    struct Criterion {
        int number;
        const char* label;
        std::function<Outcome()> run;
        double budget_ms;
    };
    const std::vector<Criterion> criteria = {
        {1, "radius constants", criterion_radii, 1000.0},
        {2, "extremal equality at the radius", criterion_equality, 1000.0},
        {3, "sharpness witnesses", criterion_witnesses, 1000.0},
        {4, "class-certification sweeps", criterion_certification, 60000.0},
        {5, "algebra oracle suite", criterion_algebra, 60000.0},
        {6, "admissibility constants", criterion_constants, 60000.0},
        {7, "area-sum bound", criterion_area_bound, 60000.0},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.ok = false;
            out.detail = std::string("exception: ") + e.what();
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        if (ms > c.budget_ms) {
            out.ok = false;
            out.detail = "runtime budget exceeded";
        }
        std::printf("[%s] criterion %d: %s (%.0f ms)%s%s\n", out.ok ? "PASS" : "FAIL", c.number,
                    c.label, ms, out.detail.empty() ? "" : " -- ", out.detail.c_str());
        if (!out.ok) ++failures;
    }
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
