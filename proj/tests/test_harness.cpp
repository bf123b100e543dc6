#include "qbohr/harness.hpp"

#include "qbohr/cli.hpp"
#include "qbohr/radii.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <set>
#include <fstream>
#include <sstream>

using namespace qbohr;

namespace {

VerifyOptions quick_options(double m = 1.0, std::vector<double> d = {}) {
    VerifyOptions opts;
    opts.params.m = m;
    opts.params.d = std::move(d);
    opts.samples = 24;
    opts.radii = 8;
    opts.order = 512;
    return opts;
}

int run_cli(std::initializer_list<const char*> args) {
    std::vector<const char*> argv = {"qbohr"};
    argv.insert(argv.end(), args.begin(), args.end());
    return cli_main(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("classical theorem certifies with the ladder maximum at the radius") {
    const VerificationReport report = verify("B", quick_options(), 7);
    CHECK(report.verdict == Verdict::Certified);
    CHECK(report.max_value <= 1.0 + 1e-9);
    CHECK(report.max_value > 1.0 - 1e-2);  // the a = 0.999 rung sits just under 1
    CHECK(report.max_value_r == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(report.witness_found);
    CHECK(report.witness_value > 1.0);
    CHECK(report.grid.r_values.size() == 8);
}

TEST_CASE("derivative-starlike theorem reports the closed-form witness") {
    const VerificationReport report = verify("1.2", quick_options(), 7);
    CHECK(report.verdict == Verdict::Certified);
    CHECK(report.witness_r == doctest::Approx(0.51).epsilon(1e-12));
    CHECK(report.witness_value == doctest::Approx(0.51 + 0.51 * 0.51 / 0.49).epsilon(1e-12));
}

TEST_CASE("half-space theorem certifies with the descending witness ladder") {
    const VerificationReport report = verify("1.7", quick_options(), 7);
    CHECK(report.verdict == Verdict::Certified);
    CHECK(report.witness_spec.a <= 0.1);
    CHECK(report.witness_value > 1.0);
}

TEST_CASE("inadmissible d makes the improved-sum verification inconclusive") {
    const VerificationReport report = verify("1.6", quick_options(1.0, {1.0, 0.01}), 7);
    CHECK(report.verdict == Verdict::Inconclusive);
    CHECK(report.note.find("L(d) > m") != std::string::npos);
}

TEST_CASE("unknown ids and invalid grids are rejected") {
    CHECK_THROWS_AS(verify("2.4", quick_options(), 7), std::invalid_argument);
    VerifyOptions bad = quick_options();
    bad.radii = 0;
    CHECK_THROWS_AS(verify("B", bad, 7), std::invalid_argument);
}

TEST_CASE("reports are byte-identical across runs with the same inputs") {
    const VerificationReport a = verify("1.4", quick_options(0.5), 99);
    const VerificationReport b = verify("1.4", quick_options(0.5), 99);
    CHECK(report_to_json(a) == report_to_json(b));

    const VerificationReport c = verify("1.4", quick_options(0.5), 100);
    CHECK(report_to_json(a) != report_to_json(c));  // the seed is part of the identity
}

TEST_CASE("report JSON carries the versioned schema") {
    const VerificationReport report = verify("1.5", quick_options(0.5), 7);
    const nlohmann::json j = nlohmann::json::parse(report_to_json(report));
    CHECK(j.at("schema").get<int>() == 1);
    CHECK(j.at("theorem_id").get<std::string>() == "1.5");
    CHECK(j.at("params").at("m").get<double>() == 0.5);
    CHECK(j.at("params").at("class").get<std::string>() == "bounded");
    CHECK(j.at("params").at("weight").get<std::string>() == "monomial");
    CHECK(j.at("grid").at("r_values").size() == 8);
    CHECK(j.at("grid").at("sample_count").get<int>() == 24);
    CHECK(j.at("grid").at("seed").get<std::uint64_t>() == 7);
    CHECK(j.at("grid").at("order").get<int>() == 512);
    CHECK(j.at("radius").get<double>() == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(j.contains("max_value"));
    CHECK(j.contains("tail_bound"));
    CHECK(j.at("witness").at("value").get<double>() > 1.0);
    CHECK(j.at("verdict").get<std::string>() == "certified");
}

TEST_CASE("sweep of the Koebe family keeps nonnegative margins up to the radius") {
    ExtremalSpec spec;
    spec.family = Family::StarlikeKoebe;
    spec.order = 1024;
    std::vector<double> grid;
    for (double r = 0.1; r <= 0.3801; r += 0.02) grid.push_back(r);
    const SweepTable table = sweep_extremal(spec, FunctionalId::MajorantSum, {}, grid);
    REQUIRE(table.rows.size() == grid.size());
    for (const SweepRow& row : table.rows) {
        CHECK(row.margin >= 0.0);
        CHECK(row.value == doctest::Approx(1.0 - row.margin).epsilon(1e-15));
    }
    CHECK(table.rows.back().margin < 0.02);  // margin closes toward the radius
}

TEST_CASE("sweep of the Mobius family shows the violation beyond the radius") {
    ExtremalSpec spec;
    spec.family = Family::MobiusLike;
    spec.a = 0.999;
    spec.order = 4096;
    BohrParams params;
    params.m = 1.0;
    const SweepTable table = sweep_extremal(spec, FunctionalId::PoweredSum, params, {0.34});
    REQUIRE(table.rows.size() == 1);
    CHECK(table.rows[0].margin < 0.0);
}

TEST_CASE("empty and invalid sweep grids") {
    const SweepTable empty = sweep_class(CoefficientClass::bounded(), FunctionalId::MajorantSum,
                                         {}, {});
    CHECK(empty.rows.empty());
    CHECK_THROWS_AS(
        sweep_class(CoefficientClass::bounded(), FunctionalId::MajorantSum, {}, {0.5, 0.4}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        sweep_class(CoefficientClass::bounded(), FunctionalId::MajorantSum, {}, {0.5, 1.0}),
        std::invalid_argument);
}

TEST_CASE("CSV round-trips 17 significant digits") {
    ExtremalSpec spec;
    spec.family = Family::GeomCayley;
    spec.order = 256;
    const SweepTable table =
        sweep_extremal(spec, FunctionalId::MajorantSum, {}, {0.125, 0.25, 0.375});
    const std::string csv = sweep_to_csv(table);
    std::istringstream lines(csv);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "r,value,tail,margin");
    std::string line;
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
        double r = 0.0, value = 0.0, tail = 0.0, margin = 0.0;
        REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &r, &value, &tail, &margin) == 4);
        CHECK(r == table.rows[rows].r);            // bit-exact round trip
        CHECK(value == table.rows[rows].value);
        CHECK(margin == table.rows[rows].margin);
        ++rows;
    }
    CHECK(rows == table.rows.size());
}

TEST_CASE("parallel map preserves index order") {
    const auto out = parallel_map(257, [](int i) { return static_cast<double>(i) * i; });
    REQUIRE(out.size() == 257);
    for (int i = 0; i < 257; ++i) CHECK(out[static_cast<std::size_t>(i)] == double(i) * i);
    CHECK(parallel_map(0, [](int) { return 0.0; }).empty());
}

TEST_CASE("default plan covers every theorem id") {
    const auto plan = default_verification_plan();
    std::set<std::string> ids;
    for (const auto& run : plan) ids.insert(run.theorem_id);
    CHECK(ids == std::set<std::string>{"1.1", "1.2", "1.3", "B", "1.4", "1.5", "1.6", "1.7"});
    for (const auto& run : plan) {
        if (run.theorem_id == "1.6") {
            CHECK(admissibility_condition(run.opts.params.d, run.opts.params.m).admissible);
        }
    }
}

TEST_CASE("verdict exit-code mapping") {
    CHECK(verdict_exit_code(Verdict::Certified) == 0);
    CHECK(verdict_exit_code(Verdict::Inconclusive) == 0);
    CHECK(verdict_exit_code(Verdict::Violated) == 1);
}

TEST_CASE("cli exit codes") {
    CHECK(run_cli({"radius", "--theorem", "1.7"}) == 0);
    CHECK(run_cli({"radius", "--theorem", "nope"}) == 2);
    CHECK(run_cli({"--definitely-not-a-flag"}) == 2);
    CHECK(run_cli({}) == 2);  // a subcommand is required
    CHECK(run_cli({"sum", "--series", "[[0.25,0,0,0]]", "--r", "0.5"}) == 0);
    CHECK(run_cli({"sum", "--series", "not json", "--r", "0.5"}) == 2);
    CHECK(run_cli({"--order", "256", "verify", "--theorem", "1.2", "--samples", "8", "--radii",
                   "4"}) == 0);
}

TEST_CASE("cli verify writes the report file") {
    const std::string path = "/tmp/qbohr_test_report.json";
    std::remove(path.c_str());
    CHECK(run_cli({"--order", "256", "--seed", "5", "--json", path.c_str(), "verify",
                   "--theorem", "1.4", "--m", "0.5", "--samples", "8", "--radii", "4"}) == 0);
    const nlohmann::json j = nlohmann::json::parse(slurp(path));
    CHECK(j.at("theorem_id") == "1.4");
    CHECK(j.at("verdict") == "certified");
    CHECK(j.at("grid").at("seed").get<std::uint64_t>() == 5);
    std::remove(path.c_str());
}

TEST_CASE("cli verify accepts the config file format") {
    const std::string path = "/tmp/qbohr_test_config.json";
    {
        std::ofstream out(path);
        out << R"({"theorem": "1.6", "m": 1.0, "n": 1, "d": [0.5], "weight": "monomial"})";
    }
    CHECK(run_cli({"--order", "256", "verify", "--config", path.c_str(), "--samples", "8",
                   "--radii", "4"}) == 0);
    std::remove(path.c_str());
}

TEST_CASE("cli sweep writes csv") {
    const std::string path = "/tmp/qbohr_test_sweep.csv";
    std::remove(path.c_str());
    CHECK(run_cli({"--csv", path.c_str(), "sweep", "--family", "geom_cayley", "--functional",
                   "sum", "--rmin", "0.1", "--rmax", "0.4", "--steps", "4"}) == 0);
    const std::string csv = slurp(path);
    CHECK(csv.rfind("r,value,tail,margin\n", 0) == 0);
    std::remove(path.c_str());
}

TEST_CASE("cli extremal accepts the spec config format") {
    const std::string cfg = "/tmp/qbohr_test_extremal_cfg.json";
    const std::string out = "/tmp/qbohr_test_extremal_cfg_out.json";
    {
        std::ofstream f(cfg);
        f << R"({"family": "mobius_like", "a": 0.5, "u": [0,1,0,0], "k": 6})";
    }
    CHECK(run_cli({"--json", out.c_str(), "extremal", "--config", cfg.c_str()}) == 0);
    const QSeries f = parse_series(slurp(out));
    CHECK(f.order() == 6);
    CHECK(modulus(f.coeff(0) - Quaternion::real(0.5)) < 1e-15);
    CHECK(modulus(f.coeff(1) - Quaternion{0.0, -0.75, 0.0, 0.0}) < 1e-15);
    std::remove(cfg.c_str());
    std::remove(out.c_str());
}

TEST_CASE("cli extremal emits the series literal") {
    const std::string path = "/tmp/qbohr_test_extremal.json";
    std::remove(path.c_str());
    CHECK(run_cli({"--order", "4", "--json", path.c_str(), "extremal", "--family",
                   "starlike_koebe", "--u", "i"}) == 0);
    const QSeries f = parse_series(slurp(path));
    CHECK(f.order() == 4);
    CHECK(modulus(f.coeff(2) - Quaternion{0.0, 2.0, 0.0, 0.0}) < 1e-15);
    std::remove(path.c_str());
}
