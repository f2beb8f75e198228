#include "bilav/experiment.hpp"

#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "bilav/bilinear.hpp"
#include "bilav/degeneracy.hpp"
#include "bilav/deviation_bound.hpp"
#include "bilav/expsum.hpp"
#include "bilav/gram.hpp"
#include "bilav/kernel.hpp"
#include "bilav/parallel.hpp"
#include "bilav/rng.hpp"
#include "bilav/roth.hpp"

namespace bilav {

namespace {

using nlohmann::json;

class Budget {
public:
    explicit Budget(double secs)
        : t0_(std::chrono::steady_clock::now()), secs_(secs) {}

    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         t0_)
            .count();
    }

    void check(const char* where) const {
        if (secs_ > 0.0 && elapsed_ms() > secs_ * 1000.0) {
            throw BudgetExceeded(std::string("wall-clock budget exceeded during ") + where);
        }
    }

private:
    std::chrono::steady_clock::time_point t0_;
    double secs_;
};

std::string join_row(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ',';
        line += cells[i];
    }
    return line;
}

std::string fmt_u64(u64 v) { return std::to_string(v); }

u64 fnv1a(const std::string& bytes) {
    u64 h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

Curve make_curve(const ExperimentManifest& m, const PrimeField& field) {
    if (!m.curve_table1.empty() || !m.curve_table2.empty()) {
        if (m.curve_table1.empty() || m.curve_table2.empty()) {
            throw InvalidCurve("table curves need both component files");
        }
        return curve_from_tables_csv(m.curve_table1, m.curve_table2, field);
    }
    if (m.curve_spec.empty()) throw InvalidCurve("no curve specification given");
    return curve_from_spec(m.curve_spec, field);
}

std::vector<u64> shift_list(const ExperimentManifest& m, u64 p) {
    std::vector<u64> hs;
    if (!m.h_sample.empty()) {
        for (u64 h : m.h_sample) {
            if (h % p != 0) hs.push_back(h % p);
        }
        return hs;
    }
    const ConditionThresholds t = m.thresholds();
    if (p <= t.h_full_limit) {
        for (u64 h = 1; h < p; ++h) hs.push_back(h);
        return hs;
    }
    Rng rng(m.seed ^ 0x68u);
    std::vector<bool> seen(p, false);
    while (hs.size() < std::min<u64>(t.h_sample, p - 1)) {
        const u64 h = 1 + rng.next_below(p - 1);
        if (!seen[h]) {
            seen[h] = true;
            hs.push_back(h);
        }
    }
    return hs;
}

ReportTable cmd_gauss(const ExperimentManifest& m, Budget& budget) {
    ReportTable t;
    t.header = {"p", "re", "im", "abs", "sqrt_p", "p_mod_4"};
    for (u64 p : m.primes) {
        budget.check("gauss");
        PrimeField f(p);
        cplx g{0.0, 0.0};
        for (u64 z = 0; z < p; ++z) g += f.ep_u(f.mul(z, z));
        t.cells.push_back({fmt_u64(p), format_double(g.real()), format_double(g.imag()),
                           format_double(std::abs(g)),
                           format_double(std::sqrt(static_cast<double>(p))),
                           fmt_u64(p % 4)});
    }
    return t;
}

ReportTable cmd_kernel(const ExperimentManifest& m, Budget& budget) {
    ReportTable t;
    t.header = {"p", "max_kernel", "weil_const", "build_msec"};
    const u64 workers = m.workers ? m.workers : default_workers();
    for (u64 p : m.primes) {
        budget.check("kernel");
        PrimeField f(p);
        const Curve curve = make_curve(m, f);
        const auto t0 = std::chrono::steady_clock::now();
        const KernelTable table = build_kernel_table(curve, KernelBuild::fast, workers);
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        double kmax = 0.0;
        for (u64 x = 0; x < p; ++x) {
            for (u64 y = 1; y < p; ++y) kmax = std::max(kmax, std::abs(table.at(x, y)));
        }
        t.cells.push_back({fmt_u64(p), format_double(kmax),
                           format_double(kmax * std::sqrt(static_cast<double>(p))),
                           format_double(ms)});
    }
    return t;
}

ReportTable cmd_conditions(const ExperimentManifest& m, Budget& budget) {
    ReportTable t;
    t.header = {"p",           "theta_hat",   "alpha_hat",   "beta_hat",
                "gamma",       "const_theta", "const_alpha", "const_beta",
                "diag_max_row", "diag_max_col"};
    for (u64 p : m.primes) {
        budget.check("conditions");
        PrimeField f(p);
        const Curve curve = make_curve(m, f);
        const ConditionReport rep = verify_conditions(curve, m.h_sample, m.thresholds());
        t.cells.push_back({fmt_u64(p), format_double(rep.theta_hat),
                           format_double(rep.alpha_hat), format_double(rep.beta_hat),
                           format_double(rep.gamma), format_double(rep.const_theta),
                           format_double(rep.const_alpha), format_double(rep.const_beta),
                           fmt_u64(rep.diag_max_row), fmt_u64(rep.diag_max_col)});
    }
    return t;
}

ReportTable cmd_gram(const ExperimentManifest& m, Budget& budget) {
    ReportTable t;
    t.header = {"p",           "h",           "flagged_pairs",     "max_row_count",
                "max_col_count", "offdiag_max", "predicted_pairs", "predicted_max_row",
                "predicted_max_col"};
    const u64 workers = m.workers ? m.workers : default_workers();
    for (u64 p : m.primes) {
        PrimeField f(p);
        const Curve curve = make_curve(m, f);
        const KernelTable kernel = build_kernel_table(curve, KernelBuild::fast, workers);
        const double thr = m.c_thr * std::pow(static_cast<double>(p), -m.beta_target);
        const bool predict = curve.meta() && 4 * curve.meta()->d2 < p && p <= 512 &&
                             !(curve.meta()->d1 == curve.meta()->d2 &&
                               curve.meta()->lead1 == curve.meta()->lead2);
        for (u64 h : shift_list(m, p)) {
            budget.check("gram");
            const GramTable gram = fourfold_gram(kernel, h);
            const DiagonalSet ds = detect_diagonal(gram, m.beta_target, m.c_thr);
            double offmax = 0.0;
            for (u64 y = 0; y < p; ++y) {
                for (u64 yp = 0; yp < p; ++yp) {
                    const double a = std::abs(gram.at(y, yp));
                    if (a <= thr) offmax = std::max(offmax, a);
                }
            }
            std::vector<std::string> row{fmt_u64(p),
                                         fmt_u64(h),
                                         fmt_u64(ds.pairs.size()),
                                         fmt_u64(ds.max_row_count),
                                         fmt_u64(ds.max_col_count),
                                         format_double(offmax)};
            if (predict) {
                const DiagonalSet pb = predicted_bad_pairs(curve, h);
                row.push_back(fmt_u64(pb.pairs.size()));
                row.push_back(fmt_u64(pb.max_row_count));
                row.push_back(fmt_u64(pb.max_col_count));
            } else {
                row.insert(row.end(), {"", "", ""});
            }
            t.cells.push_back(std::move(row));
        }
    }
    return t;
}

ReportTable cmd_katz(const ExperimentManifest& m, Budget& budget) {
    ReportTable t;
    t.header = {"p", "h", "y", "yp", "re", "im", "abs", "ratio", "predicted_bad"};
    for (u64 p : m.primes) {
        PrimeField f(p);
        const Curve curve = make_curve(m, f);
        const bool predict = curve.meta() && 4 * curve.meta()->d2 < p &&
                             !(curve.meta()->d1 == curve.meta()->d2 &&
                               curve.meta()->lead1 == curve.meta()->lead2);
        const double p32 = std::pow(static_cast<double>(p), 1.5);
        Rng rng(mix64(m.seed, p));
        for (u64 k = 0; k < m.trials; ++k) {
            budget.check("katz-sum");
            const u64 h = 1 + rng.next_below(p - 1);
            const u64 y = rng.next_below(p);
            const u64 yp = rng.next_below(p);
            const cplx s = constrained_exp_sum(curve, ConstrainedSumSpec{y, yp, h});
            std::vector<std::string> row{
                fmt_u64(p), fmt_u64(h),
                fmt_u64(y), fmt_u64(yp),
                format_double(s.real()), format_double(s.imag()),
                format_double(std::abs(s)), format_double(std::abs(s) / p32)};
            row.push_back(predict ? (is_predicted_bad(curve, h, y, yp) ? "1" : "0") : "");
            t.cells.push_back(std::move(row));
        }
    }
    return t;
}

ReportTable cmd_norm_scan(const ExperimentManifest& m, Budget& budget) {
    ReportTable t;
    t.header = {"p", "lower_bound", "restarts", "power_iters", "residual", "scaled_p18"};
    for (u64 p : m.primes) {
        budget.check("norm-scan");
        PrimeField f(p);
        const Curve curve = make_curve(m, f);
        const DeviationEstimate est =
            deviation_norm_lower_bound(curve, m.restarts, m.iters, m.seed);
        t.cells.push_back({fmt_u64(p), format_double(est.lower_bound),
                           fmt_u64(est.restarts), fmt_u64(est.iterations),
                           format_double(est.residual),
                           format_double(est.lower_bound *
                                         std::pow(static_cast<double>(p), 0.125))});
    }
    return t;
}

ReportTable cmd_roth(const ExperimentManifest& m, Budget& budget) {
    ReportTable t;
    t.header = {"p",     "delta_target", "trial",           "delta",
                "triplets", "delta_cubed_p2", "implication_lhs", "implication_rhs",
                "delta_min"};
    std::vector<double> deltas = m.deltas;
    if (deltas.empty()) deltas.push_back(0.3);
    for (u64 p : m.primes) {
        PrimeField f(p);
        const Curve curve = make_curve(m, f);
        for (std::size_t di = 0; di < deltas.size(); ++di) {
            const u64 dseed = mix64(m.seed, 0xD0 + di);
            for (u64 trial = 0; trial < m.trials; ++trial) {
                budget.check("roth");
                const SubsetA a = random_subset(p, deltas[di], mix64(dseed, trial));
                const RothReport rep = implication_check(curve, a, m.gamma_const, m.c_const);
                t.cells.push_back({fmt_u64(p), format_double(deltas[di]), fmt_u64(trial),
                                   format_double(rep.delta), fmt_u64(rep.triplet_count),
                                   format_double(rep.delta_cubed_p2),
                                   format_double(rep.implication_lhs),
                                   format_double(rep.implication_rhs),
                                   format_double(rep.delta_min)});
            }
        }
    }
    return t;
}

} // namespace

ConditionThresholds ExperimentManifest::thresholds() const {
    ConditionThresholds t;
    t.beta_target = beta_target;
    t.c_thr = c_thr;
    t.diag_cap = diag_cap;
    t.seed = seed;
    t.workers = workers ? workers : default_workers();
    return t;
}

json manifest_to_json(const ExperimentManifest& m, bool include_timings) {
    json j;
    j["command"] = m.command;
    j["curve"] = m.curve_spec;
    j["curve_table1"] = m.curve_table1;
    j["curve_table2"] = m.curve_table2;
    j["primes"] = m.primes;
    j["h_sample"] = m.h_sample;
    j["seed"] = m.seed;
    j["deltas"] = m.deltas;
    j["trials"] = m.trials;
    j["restarts"] = m.restarts;
    j["iters"] = m.iters;
    j["beta_target"] = m.beta_target;
    j["c_thr"] = m.c_thr;
    j["diag_cap"] = m.diag_cap;
    j["c_const"] = m.c_const;
    j["gamma_const"] = m.gamma_const;
    j["format"] = m.format;
    j["out"] = m.out;
    j["workers"] = m.workers;
    j["budget_secs"] = m.budget_secs;
    j["version"] = m.version;
    if (include_timings) j["timings_ms"] = m.timings_ms;
    return j;
}

ExperimentManifest manifest_from_json(const json& j) {
    ExperimentManifest m;
    m.command = j.value("command", "");
    m.curve_spec = j.value("curve", "");
    m.curve_table1 = j.value("curve_table1", "");
    m.curve_table2 = j.value("curve_table2", "");
    m.primes = j.value("primes", std::vector<u64>{});
    m.h_sample = j.value("h_sample", std::vector<u64>{});
    m.seed = j.value("seed", u64{1});
    m.deltas = j.value("deltas", std::vector<double>{});
    m.trials = j.value("trials", u64{100});
    m.restarts = j.value("restarts", u64{8});
    m.iters = j.value("iters", u64{200});
    m.beta_target = j.value("beta_target", 1.5);
    m.c_thr = j.value("c_thr", 2.0);
    m.diag_cap = j.value("diag_cap", u64{4});
    m.c_const = j.value("c_const", 1.0);
    m.gamma_const = j.value("gamma_const", 0.125);
    m.format = j.value("format", "csv");
    m.out = j.value("out", "report");
    m.workers = j.value("workers", u64{0});
    m.budget_secs = j.value("budget_secs", 600.0);
    m.version = j.value("version", std::string(kVersion));
    if (j.contains("timings_ms")) {
        m.timings_ms = j.at("timings_ms").get<std::map<std::string, double>>();
    }
    return m;
}

std::string manifest_digest(const ExperimentManifest& m) {
    const u64 h = fnv1a(manifest_to_json(m, false).dump());
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string render_report(const ReportTable& table, const std::string& format,
                          const ExperimentManifest& manifest) {
    if (table.cells.empty()) throw std::invalid_argument("render_report: no rows");
    for (const auto& row : table.cells) {
        if (row.size() != table.header.size()) {
            throw std::logic_error("render_report: ragged row");
        }
    }
    const std::string digest = manifest_digest(manifest);
    if (format == "csv") {
        std::string text = join_row(table.header) + '\n';
        for (const auto& row : table.cells) text += join_row(row) + '\n';
        text += "# manifest_digest=" + digest + '\n';
        return text;
    }
    if (format == "json") {
        json j;
        j["manifest"] = manifest_to_json(manifest, true);
        j["digest"] = digest;
        json rows = json::array();
        for (const auto& row : table.cells) {
            json obj;
            for (std::size_t i = 0; i < row.size(); ++i) obj[table.header[i]] = row[i];
            rows.push_back(std::move(obj));
        }
        j["rows"] = std::move(rows);
        return j.dump(2) + '\n';
    }
    throw std::invalid_argument("render_report: unknown format " + format);
}

void emit_report(const ReportTable& table, const std::string& format,
                 const std::string& path, const ExperimentManifest& manifest) {
    const std::string text = render_report(table, format, manifest);
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoFailure("emit_report: cannot open " + path);
    out << text;
    out.flush();
    if (!out) throw IoFailure("emit_report: write failed for " + path);
}

FpPoly poly_from_expr(const std::string& expr, const PrimeField& field) {
    std::string s;
    for (char c : expr) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.empty()) throw InvalidCurve("empty polynomial expression");

    std::vector<i64> raw(1, 0);
    std::size_t i = 0;
    const u64 p = field.p();
    auto read_uint = [&](const char* what) -> u64 {
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) {
            throw InvalidCurve(std::string("expected ") + what + " in '" + expr + "'");
        }
        u64 v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            if (v > (u64{1} << 60)) throw InvalidCurve("number too large in '" + expr + "'");
            v = v * 10 + static_cast<u64>(s[i] - '0');
            ++i;
        }
        return v;
    };

    bool first = true;
    while (i < s.size()) {
        i64 sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw InvalidCurve("expected + or - in '" + expr + "'");
        }
        first = false;

        u64 coef = 1;
        bool saw_coef = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coef = read_uint("coefficient") % p;
            saw_coef = true;
        }
        u64 exp = 0;
        if (i < s.size() && s[i] == 'y') {
            ++i;
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                exp = read_uint("exponent");
                if (exp > 100000) throw InvalidCurve("exponent too large in '" + expr + "'");
            }
        } else if (!saw_coef) {
            throw InvalidCurve("expected term in '" + expr + "'");
        }
        if (exp >= raw.size()) raw.resize(exp + 1, 0);
        raw[exp] += sign * static_cast<i64>(coef % p);
    }
    return make_poly(field, raw);
}

Curve curve_from_spec(const std::string& spec, const PrimeField& field) {
    const std::size_t comma = spec.find(',');
    if (comma == std::string::npos || spec.find(',', comma + 1) != std::string::npos) {
        throw InvalidCurve("curve spec needs exactly two comma-separated components");
    }
    FpPoly phi1 = poly_from_expr(spec.substr(0, comma), field);
    FpPoly phi2 = poly_from_expr(spec.substr(comma + 1), field);
    return Curve::from_polys(field, std::move(phi1), std::move(phi2));
}

namespace {

std::vector<std::pair<u64, u64>> load_two_col(const std::string& path,
                                              const PrimeField& field) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open curve table " + path);
    std::vector<std::pair<u64, u64>> rows;
    std::string line;
    bool any = false;
    while (std::getline(in, line)) {
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos || line[a] == '#') continue;
        const std::size_t comma = line.find(',', a);
        if (comma == std::string::npos) {
            if (!any) continue; // tolerate a header line
            throw InvalidCurve("bad curve table line in " + path + ": " + line);
        }
        try {
            const long long y = std::stoll(line.substr(a, comma - a));
            const long long v = std::stoll(line.substr(comma + 1));
            rows.emplace_back(static_cast<u64>(field.reduce(y)),
                              static_cast<u64>(field.reduce(v)));
            any = true;
        } catch (const std::exception&) {
            if (any) throw InvalidCurve("bad curve table line in " + path + ": " + line);
            // else: header line, skip
        }
    }
    if (rows.empty()) throw InvalidCurve("curve table " + path + " has no data rows");
    return rows;
}

} // namespace

Curve curve_from_tables_csv(const std::string& path1, const std::string& path2,
                            const PrimeField& field) {
    const auto rows1 = load_two_col(path1, field);
    const auto rows2 = load_two_col(path2, field);
    const u64 p = field.p();
    std::vector<int> seen1(p, 0), seen2(p, 0);
    std::vector<u64> eval1(p, 0), eval2(p, 0);
    for (const auto& [y, v] : rows1) {
        if (seen1[y]++) throw InvalidCurve("duplicate y in " + path1);
        eval1[y] = v;
    }
    for (const auto& [y, v] : rows2) {
        if (seen2[y]++) throw InvalidCurve("duplicate y in " + path2);
        eval2[y] = v;
    }
    std::vector<u64> domain;
    for (u64 y = 0; y < p; ++y) {
        if (seen1[y] != seen2[y]) {
            throw InvalidCurve("curve tables cover different y sets");
        }
        if (seen1[y]) domain.push_back(y);
    }
    return Curve::from_tables(field, std::move(eval1), std::move(eval2), std::move(domain));
}

ReportTable run_experiment(ExperimentManifest& manifest) {
    if (manifest.primes.empty()) {
        throw std::invalid_argument("run_experiment: no primes given");
    }
    Budget budget(manifest.budget_secs);
    ReportTable table;
    if (manifest.command == "gauss") {
        table = cmd_gauss(manifest, budget);
    } else if (manifest.command == "kernel") {
        table = cmd_kernel(manifest, budget);
    } else if (manifest.command == "conditions") {
        table = cmd_conditions(manifest, budget);
    } else if (manifest.command == "gram") {
        table = cmd_gram(manifest, budget);
    } else if (manifest.command == "katz-sum") {
        table = cmd_katz(manifest, budget);
    } else if (manifest.command == "norm-scan") {
        table = cmd_norm_scan(manifest, budget);
    } else if (manifest.command == "roth") {
        table = cmd_roth(manifest, budget);
    } else {
        throw std::invalid_argument("unknown command: " + manifest.command);
    }
    manifest.timings_ms["total_ms"] = budget.elapsed_ms();
    emit_report(table, "csv", manifest.out + ".csv", manifest);
    emit_report(table, "json", manifest.out + ".json", manifest);
    return table;
}

} // namespace bilav
