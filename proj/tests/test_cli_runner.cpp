#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "bilav/experiment.hpp"

using namespace bilav;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
    const fs::path dir =
        fs::temp_directory_path() / ("bilav_tests_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(BILAV_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int st = std::system(cmd.c_str());
    REQUIRE(st != -1);
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

} // namespace

TEST_CASE("polynomial expressions") {
    PrimeField f(101);
    CHECK(poly_from_expr("y", f).coeffs == std::vector<u64>{0, 1});
    CHECK(poly_from_expr("y^2", f).coeffs == std::vector<u64>{0, 0, 1});
    CHECK(poly_from_expr("y^3+2y", f).coeffs == std::vector<u64>{0, 2, 0, 1});
    CHECK(poly_from_expr("-y^2+3", f).coeffs == std::vector<u64>{3, 0, 100});
    CHECK(poly_from_expr("2y", f).coeffs == std::vector<u64>{0, 2});
    CHECK(poly_from_expr(" y^2 - y ", f).coeffs == std::vector<u64>{0, 100, 1});
    CHECK(poly_from_expr("5", f).coeffs == std::vector<u64>{5});
    CHECK(poly_from_expr("y^2+y^2", f).coeffs == std::vector<u64>{0, 0, 2});

    for (const char* bad : {"", "x", "y^^2", "y+", "+", "y^", "yy", "2^3", "y^2.5"}) {
        CHECK_THROWS_AS(poly_from_expr(bad, f), InvalidCurve);
    }
}

TEST_CASE("curve specifications") {
    PrimeField f(101);
    const Curve c = curve_from_spec("y,y^2", f);
    REQUIRE(c.meta().has_value());
    CHECK(c.meta()->d1 == 1);
    CHECK(c.meta()->d2 == 2);

    const Curve spaced = curve_from_spec(" y , y^3+2y ", f);
    CHECK(spaced.meta()->d2 == 3);

    CHECK_THROWS_AS(curve_from_spec("y", f), InvalidCurve);
    CHECK_THROWS_AS(curve_from_spec("y,y,y", f), InvalidCurve);
    CHECK_THROWS_AS(curve_from_spec("y,2y", f), InvalidCurve);   // linearly dependent
    CHECK_THROWS_AS(curve_from_spec("1,y^2", f), InvalidCurve);  // constant component
}

TEST_CASE("manifest serialization and digests") {
    ExperimentManifest m;
    m.command = "conditions";
    m.curve_spec = "y,y^2";
    m.primes = {101, 211};
    m.h_sample = {1, 5};
    m.seed = 9;
    m.deltas = {0.2, 0.4};
    m.trials = 7;
    m.restarts = 3;
    m.iters = 50;
    m.beta_target = 1.4;
    m.c_thr = 1.5;
    m.diag_cap = 6;
    m.c_const = 2.0;
    m.gamma_const = 0.1;
    m.format = "json";
    m.out = "somewhere";
    m.workers = 2;
    m.budget_secs = 12.5;
    m.timings_ms["total_ms"] = 17.0;

    const ExperimentManifest r = manifest_from_json(manifest_to_json(m));
    CHECK(r.command == m.command);
    CHECK(r.curve_spec == m.curve_spec);
    CHECK(r.primes == m.primes);
    CHECK(r.h_sample == m.h_sample);
    CHECK(r.seed == m.seed);
    CHECK(r.deltas == m.deltas);
    CHECK(r.trials == m.trials);
    CHECK(r.restarts == m.restarts);
    CHECK(r.iters == m.iters);
    CHECK(r.beta_target == m.beta_target);
    CHECK(r.c_thr == m.c_thr);
    CHECK(r.diag_cap == m.diag_cap);
    CHECK(r.c_const == m.c_const);
    CHECK(r.gamma_const == m.gamma_const);
    CHECK(r.format == m.format);
    CHECK(r.out == m.out);
    CHECK(r.workers == m.workers);
    CHECK(r.budget_secs == m.budget_secs);
    CHECK(r.version == m.version);
    CHECK(r.timings_ms.at("total_ms") == 17.0);

    // defaults fill in for absent keys
    const ExperimentManifest d = manifest_from_json(nlohmann::json::object());
    CHECK(d.trials == 100);
    CHECK(d.beta_target == 1.5);
    CHECK(d.format == "csv");

    const std::string dig = manifest_digest(m);
    CHECK(dig.size() == 16);
    CHECK(dig.find_first_not_of("0123456789abcdef") == std::string::npos);

    ExperimentManifest timed = m;
    timed.timings_ms["extra_ms"] = 99.0;
    CHECK(manifest_digest(timed) == dig); // timings never affect the digest

    ExperimentManifest reseeded = m;
    reseeded.seed = 10;
    CHECK(manifest_digest(reseeded) != dig);
}

TEST_CASE("floating point cell format") {
    CHECK(format_double(kExponentInf) == "inf");
    CHECK(format_double(2.0) == "2");
    CHECK(std::strtod(format_double(0.1).c_str(), nullptr) == 0.1);
    const double v = 3.605551275463989;
    CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
}

TEST_CASE("report rendering") {
    ExperimentManifest m;
    m.command = "gauss";
    m.primes = {13};
    const std::string dig = manifest_digest(m);

    ReportTable t;
    t.header = {"p", "value"};
    t.cells = {{"13", "3.5"}, {"17", "4.1"}};

    const std::string csv = render_report(t, "csv", m);
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "p,value");
    std::getline(lines, line);
    CHECK(line == "13,3.5");
    std::getline(lines, line);
    CHECK(line == "17,4.1");
    std::getline(lines, line);
    CHECK(line == "# manifest_digest=" + dig);

    const nlohmann::json j = nlohmann::json::parse(render_report(t, "json", m));
    CHECK(j.at("digest").get<std::string>() == dig);
    REQUIRE(j.at("rows").size() == 2);
    CHECK(j.at("rows")[0].at("p").get<std::string>() == "13");
    CHECK(j.at("rows")[1].at("value").get<std::string>() == "4.1");
    CHECK(j.at("manifest").at("command").get<std::string>() == "gauss");

    ReportTable empty;
    empty.header = {"p"};
    CHECK_THROWS_AS(render_report(empty, "csv", m), std::invalid_argument);

    ReportTable ragged = t;
    ragged.cells.push_back({"only-one"});
    CHECK_THROWS_AS(render_report(ragged, "csv", m), std::logic_error);

    CHECK_THROWS_AS(render_report(t, "xml", m), std::invalid_argument);
}

TEST_CASE("table curves from files") {
    PrimeField f(13);
    const fs::path dir = scratch_dir();
    std::string t1 = "y,value\n";
    std::string t2 = "y,value\n";
    for (u64 y = 1; y < 13; ++y) {
        t1 += std::to_string(y) + "," + std::to_string(y) + "\n";
        t2 += std::to_string(y) + "," + std::to_string(f.inv(y)) + "\n";
    }
    write_file(dir / "id.csv", t1);
    write_file(dir / "inv.csv", t2);

    const Curve c = curve_from_tables_csv((dir / "id.csv").string(),
                                          (dir / "inv.csv").string(), f);
    CHECK(c.domain().size() == 12);
    CHECK(!c.meta().has_value());
    CHECK(c.eval1()[5] == 5);
    CHECK(c.eval2()[5] == 8); // 5 * 8 = 40 = 1 mod 13

    write_file(dir / "dup.csv", t1 + "3,3\n");
    CHECK_THROWS_AS(
        curve_from_tables_csv((dir / "dup.csv").string(), (dir / "inv.csv").string(), f),
        InvalidCurve);

    write_file(dir / "short.csv", std::string("y,value\n1,1\n2,2\n"));
    CHECK_THROWS_AS(
        curve_from_tables_csv((dir / "id.csv").string(), (dir / "short.csv").string(), f),
        InvalidCurve);

    write_file(dir / "junk.csv", std::string("y,value\n1,not-a-number\n"));
    CHECK_THROWS_AS(
        curve_from_tables_csv((dir / "junk.csv").string(), (dir / "junk.csv").string(), f),
        InvalidCurve);

    CHECK_THROWS_AS(curve_from_tables_csv((dir / "absent.csv").string(),
                                          (dir / "inv.csv").string(), f),
                    IoFailure);
}

TEST_CASE("experiment driver writes twin reports") {
    const fs::path dir = scratch_dir();
    ExperimentManifest m;
    m.command = "gauss";
    m.primes = {13};
    m.out = (dir / "gauss_run").string();

    const ReportTable t = run_experiment(m);
    REQUIRE(t.header.size() == 6);
    CHECK(t.header[0] == "p");
    REQUIRE(t.cells.size() == 1);
    CHECK(t.cells[0][0] == "13");
    const double re = std::strtod(t.cells[0][1].c_str(), nullptr);
    const double im = std::strtod(t.cells[0][2].c_str(), nullptr);
    CHECK(re == doctest::Approx(std::sqrt(13.0)).epsilon(1e-9));
    CHECK(std::abs(im) < 1e-9);
    CHECK(m.timings_ms.count("total_ms") == 1);

    REQUIRE(fs::exists(dir / "gauss_run.csv"));
    REQUIRE(fs::exists(dir / "gauss_run.json"));
    const std::string csv = read_file(dir / "gauss_run.csv");
    CHECK(csv.rfind("p,re,im,abs,sqrt_p,p_mod_4\n", 0) == 0);
    CHECK(csv.find("# manifest_digest=" + manifest_digest(m)) != std::string::npos);
    const nlohmann::json j = nlohmann::json::parse(read_file(dir / "gauss_run.json"));
    CHECK(j.at("digest").get<std::string>() == manifest_digest(m));
    CHECK(j.at("manifest").at("timings_ms").contains("total_ms"));

    ExperimentManifest strict = m;
    strict.budget_secs = 1e-12;
    strict.timings_ms.clear();
    CHECK_THROWS_AS(run_experiment(strict), BudgetExceeded);

    ExperimentManifest unknown = m;
    unknown.command = "frobnicate";
    unknown.timings_ms.clear();
    CHECK_THROWS_AS(run_experiment(unknown), std::invalid_argument);
}

TEST_CASE("process exit codes") {
    const fs::path dir = scratch_dir();
    const std::string out = " --out " + (dir / "cli_run").string();
    CHECK(run_cli("gauss --p 13" + out) == 0);
    CHECK(run_cli("--version") == 0);
    CHECK(run_cli("--help") == 0);
    CHECK(run_cli("gauss --p 15" + out) == 2);          // composite modulus
    CHECK(run_cli("") == 2);                            // missing subcommand
    CHECK(run_cli("gauss --p 13 --budget-secs 1e-12" + out) == 3);
    CHECK(run_cli("conditions --p 31" + out) == 2);     // no curve given
    CHECK(run_cli("kernel --curve y,y^2 --p 31" + out) == 0);
}
