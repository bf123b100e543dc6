#pragma once

#include "qbohr/bohr.hpp"
#include "qbohr/extremals.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qbohr {

struct GridSpec {
    std::vector<double> r_values;
    int sample_count = 256;
    std::uint64_t seed = 0;
    int order = 2048;
};

enum class Verdict { Certified, Violated, Inconclusive };

std::string verdict_name(Verdict v);

/// Scripted exit-code contract: 0 for Certified and Inconclusive runs,
/// 1 for Violated (usage errors exit 2 at the CLI layer).
int verdict_exit_code(Verdict v);

struct VerifyOptions {
    BohrParams params;  ///< m, d, weight
    int radii = 32;     ///< grid {radius * j / radii : j = 1..radii}
    int samples = 256;  ///< seeded class samples
    int order = 2048;   ///< truncation degree
};

/// Everything needed to reproduce and audit one certification run.
struct VerificationReport {
    std::string theorem_id;
    BohrParams params;
    std::string class_name;
    double radius = 0.0;
    GridSpec grid;
    double max_value = 0.0;  ///< largest functional value seen below the radius
    double max_value_r = 0.0;
    std::string max_value_source;
    double tail_bound = 0.0;  ///< truncation tail at the maximizing point
    bool witness_found = false;
    ExtremalSpec witness_spec;
    double witness_r = 0.0;
    double witness_value = 0.0;
    Verdict verdict = Verdict::Inconclusive;
    std::string note;
};

/// Certifies one theorem: evaluates its functional on the paired extremal
/// ladder and on seeded class samples over the radius grid, then seeks a
/// sharpness witness at radius + 0.01. Deterministic for fixed inputs.
/// Theorem "1.6" reports Inconclusive when the d-coefficients fail the
/// admissibility condition.
VerificationReport verify(const std::string& theorem_id, const VerifyOptions& opts,
                          std::uint64_t seed);

/// Serializes the report to the versioned JSON schema (snake_case keys,
/// "schema": 1). Byte-identical across runs with the same inputs.
std::string report_to_json(const VerificationReport& report, int indent = 2);

struct SweepRow {
    double r = 0.0;
    double value = 0.0;
    double tail = 0.0;
    double margin = 0.0;  ///< 1 - value
};

struct SweepTable {
    std::vector<SweepRow> rows;
};

/// Grid must be strictly increasing with every r in [0, 1); empty grids
/// yield empty tables.
SweepTable sweep_extremal(const ExtremalSpec& spec, FunctionalId id,
                          const BohrParams& params, const std::vector<double>& r_grid);

/// Sweep of an explicit series; the tail column requires a class and is 0
/// when none is supplied.
SweepTable sweep_series(const QSeries& f, FunctionalId id, const BohrParams& params,
                        const std::vector<double>& r_grid,
                        const CoefficientClass* tail_class = nullptr, int order = -1);

/// Sweep of the class supremum (truncation-free majorant; tail = 0).
SweepTable sweep_class(const CoefficientClass& cls, FunctionalId id,
                       const BohrParams& params, const std::vector<double>& r_grid);

/// CSV with header r,value,tail,margin and 17 significant digits.
std::string sweep_to_csv(const SweepTable& table);

/// Runs fn(i) for i in [0, n) across a worker pool and returns the results
/// in index order, so reductions are deterministic regardless of the number
/// of workers.
std::vector<double> parallel_map(int n, const std::function<double(int)>& fn);

struct PlannedRun {
    std::string theorem_id;
    VerifyOptions opts;
};

/// The default certification configuration: every theorem id with its
/// m-ladder and admissible d-coefficients. This is what `verify --all` runs.
std::vector<PlannedRun> default_verification_plan(int samples = 256, int radii = 32,
                                                  int order = 2048);

} // namespace qbohr
