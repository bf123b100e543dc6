#include "qbohr/harness.hpp"

#include "qbohr/radii.hpp"
#include "qbohr/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <thread>

namespace qbohr {

namespace {

void require_grid(const std::vector<double>& r_grid) {
    double prev = -1.0;
    for (double r : r_grid) {
        if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("invalid grid (r must lie in [0,1))");
        if (!(r > prev)) throw std::invalid_argument("invalid grid (r must be strictly increasing)");
        prev = r;
    }
}

double class_p0(const CoefficientClass& cls, const QSeries& f) {
    if (cls.kind == ClassKind::HalfSpace) return f.coeff(0).x0;
    return modulus(f.coeff(0));
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Certified: return "certified";
        case Verdict::Violated: return "violated";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

int verdict_exit_code(Verdict v) { return v == Verdict::Violated ? 1 : 0; }

std::vector<double> parallel_map(int n, const std::function<double(int)>& fn) {
    std::vector<double> out(static_cast<std::size_t>(std::max(n, 0)));
    if (n <= 0) return out;
    const unsigned hw = std::thread::hardware_concurrency();
    const int workers = std::max(1, std::min<int>(n, hw ? static_cast<int>(hw) : 1));
    if (workers == 1) {
        for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(i);
        return out;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int i = w; i < n; i += workers) out[static_cast<std::size_t>(i)] = fn(i);
        });
    }
    for (auto& t : pool) t.join();
    return out;
}

VerificationReport verify(const std::string& theorem_id, const VerifyOptions& opts,
                          std::uint64_t seed) {
    if (opts.radii < 1 || opts.samples < 0 || opts.order < 1) {
        throw std::invalid_argument("verify: invalid grid options");
    }
    const TheoremInfo info = theorem_info(theorem_id);
    const double radius = theorem_radius(theorem_id, opts.params.m);

    VerificationReport report;
    report.theorem_id = theorem_id;
    report.params = opts.params;
    report.class_name = info.cls.name();
    report.radius = radius;
    report.grid.sample_count = opts.samples;
    report.grid.seed = seed;
    report.grid.order = opts.order;
    report.grid.r_values.reserve(static_cast<std::size_t>(opts.radii));
    for (int j = 1; j <= opts.radii; ++j) {
        report.grid.r_values.push_back(radius * j / opts.radii);
    }

    if (theorem_id == "1.6") {
        const Admissibility adm = admissibility_condition(opts.params.d, opts.params.m);
        if (!adm.admissible) {
            report.verdict = Verdict::Inconclusive;
            report.note = "L(d) > m: admissibility condition fails (L = " +
                          format_double(adm.value) + ")";
            return report;
        }
    }

    // Evaluation set: extremal family across the a-ladder, then class samples.
    struct Candidate {
        QSeries series;
        std::string source;
    };
    std::vector<Candidate> candidates;
    const Quaternion u = sample_boundary(derive_seed(seed, 0xE0));
    if (info.has_parameter) {
        for (double a : info.ladder) {
            ExtremalSpec spec{info.family, a, u, opts.order};
            candidates.push_back({build(spec), "extremal a=" + format_double(a)});
        }
    } else {
        ExtremalSpec spec{info.family, 0.5, u, opts.order};
        candidates.push_back({build(spec), "extremal"});
    }
    for (int i = 0; i < opts.samples; ++i) {
        candidates.push_back({sample_class(info.cls, opts.order, derive_seed(seed, 1000 + i)),
                              "sample " + std::to_string(i)});
    }

    // worst value + tail per candidate over the grid; folded in index order
    const int n = static_cast<int>(candidates.size());
    std::vector<double> worst(static_cast<std::size_t>(n));
    std::vector<double> worst_r(static_cast<std::size_t>(n));
    std::vector<double> worst_value(static_cast<std::size_t>(n));
    std::vector<double> worst_tail(static_cast<std::size_t>(n));
    parallel_map(n, [&](int i) {
        const QSeries& f = candidates[static_cast<std::size_t>(i)].series;
        const double p0 = class_p0(info.cls, f);
        double w = -1.0;
        for (double r : report.grid.r_values) {
            const double v = functional_value(info.functional, f, r, opts.params);
            const double tail =
                functional_tail(info.functional, info.cls, p0, opts.order, r, opts.params).value;
            if (v + tail > w) {
                w = v + tail;
                worst_r[static_cast<std::size_t>(i)] = r;
                worst_value[static_cast<std::size_t>(i)] = v;
                worst_tail[static_cast<std::size_t>(i)] = tail;
            }
        }
        worst[static_cast<std::size_t>(i)] = w;
        return w;
    });
    int arg = 0;
    for (int i = 1; i < n; ++i) {
        if (worst[static_cast<std::size_t>(i)] > worst[static_cast<std::size_t>(arg)]) arg = i;
    }
    report.max_value = worst_value[static_cast<std::size_t>(arg)];
    report.max_value_r = worst_r[static_cast<std::size_t>(arg)];
    report.max_value_source = candidates[static_cast<std::size_t>(arg)].source;
    report.tail_bound = worst_tail[static_cast<std::size_t>(arg)];

    const bool bound_holds = worst[static_cast<std::size_t>(arg)] <= 1.0 + 1e-9;

    try {
        const Witness w = sharpness_witness(theorem_id, radius + 0.01, opts.params);
        report.witness_found = true;
        report.witness_spec = w.spec;
        report.witness_r = w.r;
        report.witness_value = w.value;
    } catch (const std::runtime_error&) {
        report.witness_found = false;
    }

    if (!bound_holds) {
        report.verdict = Verdict::Violated;
        report.note = "functional + tail exceeds 1 + 1e-9 below the radius";
    } else if (report.witness_found && report.witness_value > 1.0) {
        report.verdict = Verdict::Certified;
    } else {
        report.verdict = Verdict::Inconclusive;
        report.note = "bound holds but no sharpness witness was found";
    }
    return report;
}

std::string report_to_json(const VerificationReport& report, int indent) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["theorem_id"] = report.theorem_id;
    j["params"] = {{"m", report.params.m},
                   {"n", report.params.degree()},
                   {"d", report.params.d},
                   {"class", report.class_name},
                   {"weight", report.params.weight.name()}};
    j["radius"] = report.radius;
    j["grid"] = {{"r_values", report.grid.r_values},
                 {"sample_count", report.grid.sample_count},
                 {"seed", report.grid.seed},
                 {"order", report.grid.order}};
    j["max_value"] = report.max_value;
    j["max_value_r"] = report.max_value_r;
    j["max_value_source"] = report.max_value_source;
    j["tail_bound"] = report.tail_bound;
    if (report.witness_found) {
        j["witness"] = {{"family", family_name(report.witness_spec.family)},
                        {"a", report.witness_spec.a},
                        {"u", {report.witness_spec.u.x0, report.witness_spec.u.x1,
                               report.witness_spec.u.x2, report.witness_spec.u.x3}},
                        {"order", report.witness_spec.order},
                        {"r", report.witness_r},
                        {"value", report.witness_value}};
    } else {
        j["witness"] = nullptr;
    }
    j["verdict"] = verdict_name(report.verdict);
    j["note"] = report.note;
    return j.dump(indent);
}

SweepTable sweep_extremal(const ExtremalSpec& spec, FunctionalId id,
                          const BohrParams& params, const std::vector<double>& r_grid) {
    require_grid(r_grid);
    const QSeries f = build(spec);
    const CoefficientClass cls = paired_class(spec.family);
    return sweep_series(f, id, params, r_grid, &cls, spec.order);
}

SweepTable sweep_series(const QSeries& f, FunctionalId id, const BohrParams& params,
                        const std::vector<double>& r_grid,
                        const CoefficientClass* tail_class, int order) {
    require_grid(r_grid);
    SweepTable table;
    table.rows.reserve(r_grid.size());
    const int K = order >= 0 ? order : f.order();
    for (double r : r_grid) {
        SweepRow row;
        row.r = r;
        row.value = functional_value(id, f, r, params);
        row.tail = tail_class
                       ? functional_tail(id, *tail_class, class_p0(*tail_class, f), K, r, params).value
                       : 0.0;
        row.margin = 1.0 - row.value;
        table.rows.push_back(row);
    }
    return table;
}

SweepTable sweep_class(const CoefficientClass& cls, FunctionalId id,
                       const BohrParams& params, const std::vector<double>& r_grid) {
    require_grid(r_grid);
    SweepTable table;
    table.rows.reserve(r_grid.size());
    for (double r : r_grid) {
        SweepRow row;
        row.r = r;
        row.value = class_sup(id, cls, r, params);
        row.tail = 0.0;
        row.margin = 1.0 - row.value;
        table.rows.push_back(row);
    }
    return table;
}

std::string sweep_to_csv(const SweepTable& table) {
    std::string out = "r,value,tail,margin\n";
    for (const SweepRow& row : table.rows) {
        out += format_double(row.r) + "," + format_double(row.value) + "," +
               format_double(row.tail) + "," + format_double(row.margin) + "\n";
    }
    return out;
}

std::vector<PlannedRun> default_verification_plan(int samples, int radii, int order) {
    std::vector<PlannedRun> plan;
    const auto add = [&](const std::string& id, double m, std::vector<double> d = {}) {
        VerifyOptions opts;
        opts.params.m = m;
        opts.params.d = std::move(d);
        opts.radii = radii;
        opts.samples = samples;
        opts.order = order;
        plan.push_back({id, opts});
    };
    add("1.1", 1.0);
    add("1.2", 1.0);
    add("1.3", 1.0);
    add("B", 1.0);
    for (double m : {0.1, 0.5, 1.0, 2.0}) add("1.4", m);
    for (double m : {0.1, 0.5, 1.0}) add("1.5", m);
    add("1.6", 1.0, {8.0 / 9.0});
    add("1.6", 1.0, {0.5, 1.0});
    add("1.6", 1.0, {0.5, 1.0, 2.0});
    add("1.6", 0.5, {1.0, 1.0, 1.0});
    add("1.7", 1.0);
    return plan;
}

} // namespace qbohr
