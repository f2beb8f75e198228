#ifndef BILAV_EXPERIMENT_HPP
#define BILAV_EXPERIMENT_HPP

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bilav/conditions.hpp"
#include "bilav/curve.hpp"
#include "bilav/version.hpp"

namespace bilav {

/// Everything needed to reproduce a run.  Timings are informational and are
/// excluded from the digest.
struct ExperimentManifest {
    std::string command;
    std::string curve_spec;    ///< e.g. "y,y^2"; empty for table curves
    std::string curve_table1;  ///< CSV path (y,value) for phi1
    std::string curve_table2;  ///< CSV path (y,value) for phi2
    std::vector<u64> primes;
    std::vector<u64> h_sample; ///< empty = module default policy
    u64 seed = 1;
    std::vector<double> deltas;
    u64 trials = 100;
    u64 restarts = 8;
    u64 iters = 200;
    double beta_target = 1.5;
    double c_thr = 2.0;
    u64 diag_cap = 4;
    double c_const = 1.0;      ///< density threshold constant
    double gamma_const = 0.125;
    std::string format = "csv";
    std::string out = "report";
    u64 workers = 0;           ///< 0 = hardware parallelism
    double budget_secs = 600.0;
    std::string version = kVersion;
    std::map<std::string, double> timings_ms;

    ConditionThresholds thresholds() const;
};

nlohmann::json manifest_to_json(const ExperimentManifest& m, bool include_timings = true);
ExperimentManifest manifest_from_json(const nlohmann::json& j);

/// FNV-1a over the canonical manifest serialization (timings excluded).
std::string manifest_digest(const ExperimentManifest& m);

/// Cells are preformatted strings; floats use 17 significant digits.
struct ReportTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> cells;
};

std::string format_double(double v);

/// CSV: header, rows, then a trailing `# manifest_digest=` comment.
/// JSON: {manifest, digest, rows}.
std::string render_report(const ReportTable& table, const std::string& format,
                          const ExperimentManifest& manifest);

/// Writes render_report() to path.
void emit_report(const ReportTable& table, const std::string& format,
                 const std::string& path, const ExperimentManifest& manifest);

/// Parses the curve mini-grammar: comma-separated polynomials in y with `^`
/// powers and integer coefficients ("y,y^2", "y^2,y^3+2y").
FpPoly poly_from_expr(const std::string& expr, const PrimeField& field);
Curve curve_from_spec(const std::string& spec, const PrimeField& field);

/// Two-column CSV (y,value) per component; the two files must cover the same
/// y set, which becomes the curve domain.
Curve curve_from_tables_csv(const std::string& path1, const std::string& path2,
                            const PrimeField& field);

/// Runs the sub-command named in the manifest, writes <out>.csv and
/// <out>.json, records timings, and returns the table.
ReportTable run_experiment(ExperimentManifest& manifest);

} // namespace bilav

#endif
