#include "qbohr/cli.hpp"

#include "qbohr/harness.hpp"
#include "qbohr/radii.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace qbohr {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Quaternion parse_u(const std::string& text) {
    if (text == "1") return Quaternion::one();
    if (text == "i") return Quaternion::unit_i();
    if (text == "j") return Quaternion::unit_j();
    if (text == "k") return Quaternion::unit_k();
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(std::stod(item));
    if (parts.size() != 4) {
        throw std::invalid_argument("expected u as x0,x1,x2,x3 or one of 1,i,j,k");
    }
    return {parts[0], parts[1], parts[2], parts[3]};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << content;
}

std::vector<double> linspace(double lo, double hi, int steps) {
    std::vector<double> grid;
    if (steps < 1) return grid;
    if (steps == 1) {
        grid.push_back(lo);
        return grid;
    }
    grid.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        grid.push_back(lo + (hi - lo) * i / (steps - 1));
    }
    return grid;
}

struct ConfigFile {
    std::string theorem;
    double m = 1.0;
    bool has_m = false;
    std::vector<double> d;
    WeightFamily weight = WeightFamily::monomial();
    QSeries series;
    bool has_series = false;
    ExtremalSpec extremal;
    bool has_extremal = false;
};

ConfigFile load_config(const std::string& path) {
    ConfigFile cfg;
    const nlohmann::json j = nlohmann::json::parse(read_file(path));
    if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");
    if (j.contains("theorem")) cfg.theorem = j.at("theorem").get<std::string>();
    if (j.contains("m")) {
        cfg.m = j.at("m").get<double>();
        cfg.has_m = true;
    }
    if (j.contains("d")) cfg.d = j.at("d").get<std::vector<double>>();
    if (j.contains("n")) {
        cfg.d.resize(j.at("n").get<std::size_t>(), 0.0);
    }
    if (j.contains("family")) {
        cfg.has_extremal = true;
        cfg.extremal.family = family_from_name(j.at("family").get<std::string>());
        if (j.contains("a")) cfg.extremal.a = j.at("a").get<double>();
        if (j.contains("u")) {
            const auto& u = j.at("u");
            if (!u.is_array() || u.size() != 4) {
                throw std::invalid_argument("config: u must be a [x0,x1,x2,x3] quadruple");
            }
            cfg.extremal.u = {u[0].get<double>(), u[1].get<double>(), u[2].get<double>(),
                              u[3].get<double>()};
        }
        if (j.contains("k")) cfg.extremal.order = j.at("k").get<int>();
    }
    if (j.contains("weight") && !j.at("weight").is_null()) {
        const auto& w = j.at("weight");
        if (w.is_string() && w.get<std::string>() == "monomial") {
            cfg.weight = WeightFamily::monomial();
        } else if (w.is_array()) {
            std::vector<QSeries> omegas;
            for (const auto& lit : w) omegas.push_back(parse_series(lit.dump()));
            cfg.weight = WeightFamily::user_series(std::move(omegas));
        } else {
            throw std::invalid_argument("config: weight must be \"monomial\" or an array of series literals");
        }
    }
    if (j.contains("series")) {
        cfg.series = parse_series(j.at("series").dump());
        cfg.has_series = true;
    }
    return cfg;
}

void print_radius_line(const std::string& label, const RadiusResult& res) {
    const char* method = res.method == RadiusMethod::ClosedForm ? "closed-form"
                         : res.method == RadiusMethod::RootFind ? "root-find"
                                                                : "infimum";
    std::cout << label << " = " << fmt(res.value) << "  residual = " << fmt(res.residual)
              << "  method = " << method << "\n";
}

int run_verify_plan(const std::vector<PlannedRun>& plan, std::uint64_t seed,
                    const std::string& json_path) {
    nlohmann::ordered_json all = nlohmann::ordered_json::array();
    int code = 0;
    for (const PlannedRun& run : plan) {
        const VerificationReport report = verify(run.theorem_id, run.opts, seed);
        code = std::max(code, verdict_exit_code(report.verdict));
        std::ostringstream params;
        params << "m=" << run.opts.params.m;
        if (!run.opts.params.d.empty()) {
            params << " d=";
            for (std::size_t i = 0; i < run.opts.params.d.size(); ++i) {
                params << (i ? "," : "") << run.opts.params.d[i];
            }
        }
        std::cout << "theorem " << report.theorem_id << " (" << params.str()
                  << "): " << verdict_name(report.verdict)
                  << "  max=" << fmt(report.max_value) << " at r=" << fmt(report.max_value_r)
                  << " [" << report.max_value_source << "]";
        if (report.witness_found) {
            std::cout << "  witness a=" << fmt(report.witness_spec.a) << " value="
                      << fmt(report.witness_value) << " at r=" << fmt(report.witness_r);
        }
        if (!report.note.empty()) std::cout << "  (" << report.note << ")";
        std::cout << "\n";
        all.push_back(nlohmann::ordered_json::parse(report_to_json(report)));
    }
    if (!json_path.empty()) {
        write_file(json_path, plan.size() == 1 ? all[0].dump(2) + "\n" : all.dump(2) + "\n");
    }
    return code;
}

} // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"slice-regular Bohr inequality toolkit over the quaternions"};
    app.require_subcommand(1);
    app.fallthrough(true);

    std::uint64_t seed = 7;
    int order = 2048;
    std::string json_path;
    std::string csv_path;
    app.add_option("--seed", seed, "deterministic seed for samples and grids");
    app.add_option("--order", order, "series truncation degree K");
    app.add_option("--json", json_path, "write JSON output to this path");
    app.add_option("--csv", csv_path, "write CSV output to this path");

    int exit_code = 0;

    // radius
    auto* cmd_radius = app.add_subcommand("radius", "sharp radii and their defining equations");
    std::string radius_theorem;
    double radius_m = 1.0;
    bool radius_all = false;
    bool radius_infimum = false;
    cmd_radius->add_option("--theorem", radius_theorem, "theorem id (1.1 1.2 1.3 B 1.4 1.5 1.6 1.7)");
    cmd_radius->add_option("--m", radius_m, "exponent m for the generalized radius");
    cmd_radius->add_flag("--all", radius_all, "print every radius");
    cmd_radius->add_flag("--infimum", radius_infimum, "use the infimum oracle for m-dependent radii");
    cmd_radius->callback([&] {
        const auto radius_for = [&](const std::string& id) {
            if (id == "1.4" || id == "1.5" || id == "1.6") {
                return radius_infimum ? radius_generalized_infimum(radius_m)
                                      : radius_generalized(radius_m);
            }
            if (id == "1.1" || id == "1.3") return radius_starlike();
            if (id == "1.2") return radius_deriv_starlike();
            if (id == "B") return radius_classical();
            if (id == "1.7") return radius_halfspace();
            throw std::invalid_argument("unknown theorem id: " + id);
        };
        if (radius_all) {
            for (const std::string id : {"1.1", "1.2", "1.3", "B", "1.4", "1.7"}) {
                print_radius_line("R(" + id + (id == "1.4" ? ", m=" + fmt(radius_m) : "") + ")",
                                  radius_for(id));
            }
            return;
        }
        if (radius_theorem.empty()) throw CLI::ValidationError("radius", "--theorem or --all required");
        print_radius_line("R(" + radius_theorem + ")", radius_for(radius_theorem));
    });

    // constants
    auto* cmd_constants = app.add_subcommand("constants", "admissibility constants c_k, M_m, L(d)");
    std::string ck_range = "1..5";
    double constants_m = 1.0;
    std::vector<double> constants_d;
    cmd_constants->add_option("--ck", ck_range, "range of k, e.g. 1..5 or 3");
    cmd_constants->add_option("--m", constants_m, "exponent m in (0, 1]");
    cmd_constants->add_option("--d", constants_d, "Q_N coefficients d_1..d_N")->delimiter(',');
    cmd_constants->callback([&] {
        int lo = 1, hi = 1;
        const auto dots = ck_range.find("..");
        if (dots == std::string::npos) {
            lo = hi = std::stoi(ck_range);
        } else {
            lo = std::stoi(ck_range.substr(0, dots));
            hi = std::stoi(ck_range.substr(dots + 2));
        }
        for (int k = lo; k <= hi; ++k) {
            std::cout << "c_" << k << " = " << fmt(admissibility_constant(k)) << "\n";
        }
        std::cout << "M_" << fmt(constants_m) << " = " << fmt(admissibility_scale(constants_m))
                  << "\n";
        std::cout << "R_" << fmt(constants_m) << " = "
                  << fmt(radius_generalized(constants_m).value) << "\n";
        if (!constants_d.empty()) {
            const Admissibility adm = admissibility_condition(constants_d, constants_m);
            std::cout << "L(d) = " << fmt(adm.value) << "  admissible = "
                      << (adm.admissible ? "yes" : "no") << "\n";
        }
    });

    // sum
    auto* cmd_sum = app.add_subcommand("sum", "evaluate a functional on a series at radius r");
    std::string sum_series;
    std::string sum_series_file;
    std::string sum_config;
    std::string sum_functional = "sum";
    std::string sum_class;
    double sum_r = 0.0;
    double sum_m = 1.0;
    std::vector<double> sum_d;
    cmd_sum->add_option("--series", sum_series, "series literal: [[x0,x1,x2,x3], ...]");
    cmd_sum->add_option("--series-file", sum_series_file, "path to a series literal");
    cmd_sum->add_option("--config", sum_config, "config file with a series entry");
    cmd_sum->add_option("--r", sum_r, "radius in [0, 1)")->required();
    cmd_sum->add_option("--functional", sum_functional, "sum|powered|refined|improved|halfspace");
    cmd_sum->add_option("--m", sum_m, "exponent m");
    cmd_sum->add_option("--d", sum_d, "Q_N coefficients")->delimiter(',');
    cmd_sum->add_option("--class", sum_class, "coefficient class for the tail bound");
    cmd_sum->callback([&] {
        BohrParams params;
        params.m = sum_m;
        params.d = sum_d;
        QSeries f;
        if (!sum_config.empty()) {
            const ConfigFile cfg = load_config(sum_config);
            if (!cfg.has_series) throw std::invalid_argument("config has no series entry");
            f = cfg.series;
            if (cfg.has_m && cmd_sum->count("--m") == 0) params.m = cfg.m;
            if (!cfg.d.empty() && sum_d.empty()) params.d = cfg.d;
            params.weight = cfg.weight;
        } else if (!sum_series_file.empty()) {
            f = parse_series(read_file(sum_series_file));
        } else if (!sum_series.empty()) {
            f = parse_series(sum_series);
        } else {
            throw CLI::ValidationError("sum", "--series, --series-file, or --config required");
        }
        const FunctionalId id = functional_from_name(sum_functional);
        const double value = functional_value(id, f, sum_r, params);
        std::cout << "value = " << fmt(value) << "\n";
        if (!sum_class.empty()) {
            const CoefficientClass cls = CoefficientClass::from_name(sum_class);
            const double p0 = cls.kind == ClassKind::HalfSpace ? f.coeff(0).x0
                                                               : modulus(f.coeff(0));
            const double tail = functional_tail(id, cls, p0, f.order(), sum_r, params).value;
            std::cout << "tail <= " << fmt(tail) << "\n";
        }
    });

    // sweep
    auto* cmd_sweep = app.add_subcommand("sweep", "tabulate value/tail/margin over a radius grid");
    std::string sweep_family;
    std::string sweep_class_name;
    std::string sweep_series_text;
    std::string sweep_series_file;
    std::string sweep_functional = "sum";
    std::string sweep_u = "i";
    double sweep_a = 0.5;
    double sweep_m = 1.0;
    std::vector<double> sweep_d;
    double sweep_rmin = 0.05;
    double sweep_rmax = 0.3;
    int sweep_steps = 16;
    cmd_sweep->add_option("--family", sweep_family,
                          "extremal family: starlike_koebe|geom_cayley|mobius_like|halfspace_map");
    cmd_sweep->add_option("--class", sweep_class_name, "class supremum sweep");
    cmd_sweep->add_option("--series", sweep_series_text, "series literal");
    cmd_sweep->add_option("--series-file", sweep_series_file, "path to a series literal");
    cmd_sweep->add_option("--functional", sweep_functional, "sum|powered|refined|improved|halfspace");
    cmd_sweep->add_option("--a", sweep_a, "family parameter a");
    cmd_sweep->add_option("--u", sweep_u, "boundary quaternion (1|i|j|k or x0,x1,x2,x3)");
    cmd_sweep->add_option("--m", sweep_m, "exponent m");
    cmd_sweep->add_option("--d", sweep_d, "Q_N coefficients")->delimiter(',');
    cmd_sweep->add_option("--rmin", sweep_rmin, "grid start");
    cmd_sweep->add_option("--rmax", sweep_rmax, "grid end (< 1)");
    cmd_sweep->add_option("--steps", sweep_steps, "grid size");
    cmd_sweep->callback([&] {
        BohrParams params;
        params.m = sweep_m;
        params.d = sweep_d;
        const FunctionalId id = functional_from_name(sweep_functional);
        const std::vector<double> grid = linspace(sweep_rmin, sweep_rmax, sweep_steps);
        SweepTable table;
        if (!sweep_family.empty()) {
            ExtremalSpec spec;
            spec.family = family_from_name(sweep_family);
            spec.a = sweep_a;
            spec.u = parse_u(sweep_u);
            spec.order = order;
            table = sweep_extremal(spec, id, params, grid);
        } else if (!sweep_class_name.empty()) {
            table = sweep_class(CoefficientClass::from_name(sweep_class_name), id, params, grid);
        } else if (!sweep_series_text.empty() || !sweep_series_file.empty()) {
            const QSeries f = parse_series(!sweep_series_text.empty() ? sweep_series_text
                                                                       : read_file(sweep_series_file));
            table = sweep_series(f, id, params, grid);
        } else {
            throw CLI::ValidationError("sweep", "--family, --class, or --series required");
        }
        const std::string csv = sweep_to_csv(table);
        if (!csv_path.empty()) {
            write_file(csv_path, csv);
        } else {
            std::cout << csv;
        }
    });

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "certify a theorem over grids and samples");
    std::string verify_theorem;
    std::string verify_config;
    bool verify_all = false;
    double verify_m = 1.0;
    std::vector<double> verify_d;
    int verify_samples = 256;
    int verify_radii = 32;
    cmd_verify->add_option("--theorem", verify_theorem, "theorem id");
    cmd_verify->add_flag("--all", verify_all, "run the default plan over every theorem id");
    cmd_verify->add_option("--m", verify_m, "exponent m");
    cmd_verify->add_option("--d", verify_d, "Q_N coefficients")->delimiter(',');
    cmd_verify->add_option("--samples", verify_samples, "class samples per run");
    cmd_verify->add_option("--radii", verify_radii, "grid points up to the radius");
    cmd_verify->add_option("--config", verify_config, "config file {theorem, m, n, d, weight}");
    cmd_verify->callback([&] {
        std::vector<PlannedRun> plan;
        if (verify_all) {
            plan = default_verification_plan(verify_samples, verify_radii, order);
        } else {
            std::string id = verify_theorem;
            BohrParams params;
            params.m = verify_m;
            params.d = verify_d;
            if (!verify_config.empty()) {
                const ConfigFile cfg = load_config(verify_config);
                if (id.empty()) id = cfg.theorem;
                if (cfg.has_m && cmd_verify->count("--m") == 0) params.m = cfg.m;
                if (verify_d.empty()) params.d = cfg.d;
                params.weight = cfg.weight;
            }
            if (id.empty()) throw CLI::ValidationError("verify", "--theorem, --all, or --config required");
            const bool explicit_params = cmd_verify->count("--m") > 0 ||
                                         !params.d.empty() || !verify_config.empty();
            if (explicit_params) {
                VerifyOptions opts;
                opts.params = params;
                opts.samples = verify_samples;
                opts.radii = verify_radii;
                opts.order = order;
                plan.push_back({id, opts});
            } else {
                for (PlannedRun& run : default_verification_plan(verify_samples, verify_radii, order)) {
                    if (run.theorem_id == id) plan.push_back(std::move(run));
                }
                if (plan.empty()) throw std::invalid_argument("unknown theorem id: " + id);
            }
        }
        exit_code = run_verify_plan(plan, seed, json_path);
    });

    // extremal
    auto* cmd_extremal = app.add_subcommand("extremal", "emit an extremal family as a series literal");
    std::string extremal_family = "mobius_like";
    std::string extremal_u = "i";
    std::string extremal_config;
    double extremal_a = 0.5;
    cmd_extremal->add_option("--family", extremal_family, "family name");
    cmd_extremal->add_option("--a", extremal_a, "family parameter a");
    cmd_extremal->add_option("--u", extremal_u, "boundary quaternion");
    cmd_extremal->add_option("--config", extremal_config,
                             "config file {family, a, u, k}");
    cmd_extremal->callback([&] {
        ExtremalSpec spec;
        if (!extremal_config.empty()) {
            const ConfigFile cfg = load_config(extremal_config);
            if (!cfg.has_extremal) throw std::invalid_argument("config has no family entry");
            spec = cfg.extremal;
            if (cmd_extremal->count("--a") > 0) spec.a = extremal_a;
        } else {
            spec.family = family_from_name(extremal_family);
            spec.a = extremal_a;
            spec.u = parse_u(extremal_u);
            spec.order = order;
        }
        const std::string literal = series_to_json(build(spec));
        if (!json_path.empty()) {
            write_file(json_path, literal + "\n");
        } else {
            std::cout << literal << "\n";
        }
    });

    int code = exit_code;
    try {
        app.parse(argc, argv);
        code = exit_code;
    } catch (const CLI::CallForHelp& e) {
        code = app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        code = 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        code = 2;
    }
    std::cout.flush();
    std::cerr.flush();
    return code;
}

} // namespace qbohr
