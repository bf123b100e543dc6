#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qbohr/bohr.hpp"
#include "qbohr/cli.hpp"
#include "qbohr/extremals.hpp"
#include "qbohr/harness.hpp"
#include "qbohr/radii.hpp"
#include "qbohr/series.hpp"

#include <sstream>

namespace py = pybind11;
using namespace qbohr;

namespace {

std::string quaternion_repr(const Quaternion& q) {
    std::ostringstream os;
    os << "Quaternion(" << q.x0 << ", " << q.x1 << ", " << q.x2 << ", " << q.x3 << ")";
    return os.str();
}

QSeries series_from_quadruples(const std::vector<std::vector<double>>& rows) {
    std::vector<Quaternion> c;
    c.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.size() != 4) throw std::invalid_argument("each coefficient must be [x0,x1,x2,x3]");
        c.push_back({row[0], row[1], row[2], row[3]});
    }
    return QSeries(std::move(c));
}

std::vector<std::vector<double>> series_to_quadruples(const QSeries& f) {
    std::vector<std::vector<double>> rows;
    rows.reserve(f.coeffs().size());
    for (const auto& p : f.coeffs()) rows.push_back({p.x0, p.x1, p.x2, p.x3});
    return rows;
}

BohrParams make_params(double m, const std::vector<double>& d) {
    BohrParams params;
    params.m = m;
    params.d = d;
    return params;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Slice-regular Bohr inequality toolkit over the quaternions";

    py::class_<Quaternion>(m, "Quaternion")
        .def(py::init<>())
        .def(py::init<double, double, double, double>(), py::arg("x0"), py::arg("x1"),
             py::arg("x2"), py::arg("x3"))
        .def_readonly("x0", &Quaternion::x0)
        .def_readonly("x1", &Quaternion::x1)
        .def_readonly("x2", &Quaternion::x2)
        .def_readonly("x3", &Quaternion::x3)
        .def("re", &Quaternion::re)
        .def("im", &Quaternion::im)
        .def("__add__", [](const Quaternion& a, const Quaternion& b) { return a + b; })
        .def("__sub__", [](const Quaternion& a, const Quaternion& b) { return a - b; })
        .def("__mul__", [](const Quaternion& a, const Quaternion& b) { return a * b; })
        .def("__rmul__", [](const Quaternion& a, double s) { return a * s; })
        .def("__neg__", [](const Quaternion& a) { return -a; })
        .def("__eq__", [](const Quaternion& a, const Quaternion& b) { return a == b; })
        .def("__repr__", &quaternion_repr);

    m.def("mul", &mul, py::arg("a"), py::arg("b"));
    m.def("conj", [](const Quaternion& q) { return conj(q); }, py::arg("q"));
    m.def("modulus", &modulus, py::arg("q"));
    m.def("inverse", &inverse, py::arg("q"));
    m.def(
        "slice_decompose",
        [](const Quaternion& q) {
            const SliceForm s = slice_decompose(q);
            return py::make_tuple(s.x, s.y, s.imag_unit);
        },
        py::arg("q"), "Returns (x, y, I) with q = x + y*I.");
    m.def("sample_sphere", &sample_sphere, py::arg("seed"));
    m.def("sample_boundary", &sample_boundary, py::arg("seed"));

    py::class_<QSeries>(m, "QSeries")
        .def(py::init(&series_from_quadruples), py::arg("coefficients"),
             "Builds from a list of [x0,x1,x2,x3] quadruples, index = power of q.")
        .def("order", &QSeries::order)
        .def("coeff", &QSeries::coeff, py::arg("k"))
        .def("coefficients", &series_to_quadruples)
        .def("__len__", [](const QSeries& f) { return f.coeffs().size(); })
        .def("__repr__", [](const QSeries& f) { return "QSeries(" + series_to_json(f) + ")"; });

    m.def("evaluate", &evaluate, py::arg("f"), py::arg("q"));
    m.def("star_product", &star_product, py::arg("f"), py::arg("h"), py::arg("max_order") = -1);
    m.def("regular_conjugate", &regular_conjugate, py::arg("f"));
    m.def("symmetrization", &symmetrization, py::arg("f"));
    m.def("regular_reciprocal", &regular_reciprocal, py::arg("f"), py::arg("k_out"));
    m.def("slice_derivative", &slice_derivative, py::arg("f"));
    m.def("conjugation_transform", &conjugation_transform, py::arg("f"), py::arg("q"));
    m.def("parse_series", &parse_series, py::arg("json_text"));
    m.def("series_to_json", &series_to_json, py::arg("f"));

    m.def("bohr_sum", &bohr_sum, py::arg("f"), py::arg("r"));
    m.def(
        "powered_sum",
        [](const QSeries& f, double r, double m_) { return powered_sum(f, r, m_); },
        py::arg("f"), py::arg("r"), py::arg("m") = 1.0);
    m.def(
        "refined_sum",
        [](const QSeries& f, double r, double m_) { return refined_sum(f, r, m_); },
        py::arg("f"), py::arg("r"), py::arg("m") = 1.0);
    m.def("area_sum", &area_sum, py::arg("f"), py::arg("r"));
    m.def(
        "improved_sum",
        [](const QSeries& f, double r, double m_, const std::vector<double>& d) {
            return improved_sum(f, r, m_, make_params(m_, d));
        },
        py::arg("f"), py::arg("r"), py::arg("m") = 1.0, py::arg("d") = std::vector<double>{});
    m.def("halfspace_sum", &halfspace_sum, py::arg("f"), py::arg("r"));

    m.def(
        "validate_class",
        [](const QSeries& f, const std::string& cls) {
            const ClassCheck check = validate_class(f, CoefficientClass::from_name(cls));
            return py::make_tuple(check.ok, check.first_violation);
        },
        py::arg("f"), py::arg("cls"),
        "Returns (ok, first_violating_index); classes: starlike, deriv_starlike, bounded, halfspace.");
    m.def(
        "sample_class",
        [](const std::string& cls, int order, std::uint64_t seed, bool boundary) {
            return sample_class(CoefficientClass::from_name(cls), order, seed,
                                boundary ? SampleMode::Boundary : SampleMode::Random);
        },
        py::arg("cls"), py::arg("order"), py::arg("seed"), py::arg("boundary") = false);

    py::class_<RadiusResult>(m, "RadiusResult")
        .def_readonly("value", &RadiusResult::value)
        .def_readonly("residual", &RadiusResult::residual)
        .def_property_readonly("method",
                               [](const RadiusResult& r) {
                                   switch (r.method) {
                                       case RadiusMethod::ClosedForm: return "closed-form";
                                       case RadiusMethod::RootFind: return "root-find";
                                       case RadiusMethod::Infimum: return "infimum";
                                   }
                                   return "?";
                               })
        .def("__repr__", [](const RadiusResult& r) {
            return "RadiusResult(value=" + std::to_string(r.value) + ")";
        });

    m.def("radius_starlike", &radius_starlike);
    m.def("radius_deriv_starlike", &radius_deriv_starlike);
    m.def("radius_classical", &radius_classical);
    m.def("radius_generalized", &radius_generalized, py::arg("m"));
    m.def(
        "radius_generalized_infimum",
        [](double m_) {
            double argmin = 0.0;
            const RadiusResult res = radius_generalized_infimum(m_, &argmin);
            return py::make_tuple(res, argmin);
        },
        py::arg("m"));
    m.def("radius_halfspace", &radius_halfspace);
    m.def("infimum_objective", &infimum_objective, py::arg("t"), py::arg("m"));
    m.def("admissibility_constant", &admissibility_constant, py::arg("k"));
    m.def("admissibility_scale", &admissibility_scale, py::arg("m"));
    m.def(
        "admissibility_condition",
        [](const std::vector<double>& d, double m_) {
            const Admissibility adm = admissibility_condition(d, m_);
            return py::make_tuple(adm.value, adm.admissible);
        },
        py::arg("d"), py::arg("m"));
    m.def("halfspace_proof_poly", &halfspace_proof_poly, py::arg("alpha"), py::arg("r"));

    m.def(
        "build_extremal",
        [](const std::string& family, double a, const Quaternion& u, int order) {
            return build({family_from_name(family), a, u, order});
        },
        py::arg("family"), py::arg("a") = 0.5, py::arg("u") = Quaternion::unit_i(),
        py::arg("order") = 64,
        "Families: starlike_koebe, geom_cayley, mobius_like, halfspace_map.");
    m.def(
        "closed_form_value",
        [](const std::string& family, const std::string& functional, double r, double a,
           double m_, const std::vector<double>& d) {
            return closed_form_value(family_from_name(family), functional_from_name(functional),
                                     r, a, make_params(m_, d));
        },
        py::arg("family"), py::arg("functional"), py::arg("r"), py::arg("a") = 0.5,
        py::arg("m") = 1.0, py::arg("d") = std::vector<double>{});
    m.def("theorem_radius", &theorem_radius, py::arg("theorem_id"), py::arg("m") = 1.0);
    m.def(
        "sharpness_witness",
        [](const std::string& theorem_id, double r, double m_, const std::vector<double>& d) {
            const Witness w = sharpness_witness(theorem_id, r, make_params(m_, d));
            return py::make_tuple(family_name(w.spec.family), w.spec.a, w.value);
        },
        py::arg("theorem_id"), py::arg("r"), py::arg("m") = 1.0,
        py::arg("d") = std::vector<double>{},
        "Returns (family, a, value) with value > 1.");

    m.def(
        "verify",
        [](const std::string& theorem_id, double m_, const std::vector<double>& d,
           std::uint64_t seed, int samples, int radii, int order) {
            VerifyOptions opts;
            opts.params = make_params(m_, d);
            opts.samples = samples;
            opts.radii = radii;
            opts.order = order;
            const VerificationReport report = verify(theorem_id, opts, seed);
            py::module_ json = py::module_::import("json");
            return json.attr("loads")(report_to_json(report));
        },
        py::arg("theorem_id"), py::arg("m") = 1.0, py::arg("d") = std::vector<double>{},
        py::arg("seed") = 7, py::arg("samples") = 256, py::arg("radii") = 32,
        py::arg("order") = 2048, "Runs one certification and returns the report as a dict.");

    m.def(
        "cli_main",
        [](const std::vector<std::string>& args) {
            std::vector<const char*> argv;
            argv.push_back("qbohr");
            for (const auto& a : args) argv.push_back(a.c_str());
            return cli_main(static_cast<int>(argv.size()), argv.data());
        },
        py::arg("args"), "Invokes the command-line tool in-process.");
}
