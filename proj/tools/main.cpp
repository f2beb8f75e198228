#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bilav/experiment.hpp"
#include "bilav/version.hpp"

namespace {

struct Cli {
    bilav::ExperimentManifest m;
    std::vector<std::string> tables;
};

void add_common(CLI::App* sub, Cli& c) {
    sub->add_option("--curve", c.m.curve_spec,
                    "curve as two comma-separated polynomials in y, e.g. \"y,y^2\"");
    sub->add_option("--curve-table", c.tables,
                    "two CSV files (y,value), one per curve component")
        ->expected(2);
    sub->add_option("--primes,--p", c.m.primes, "primes to run")->delimiter(',');
    sub->add_option("--h-sample", c.m.h_sample, "explicit shift values h")->delimiter(',');
    sub->add_option("--beta-target", c.m.beta_target, "off-diagonal decay target");
    sub->add_option("--c-thr", c.m.c_thr, "diagonal detection constant");
    sub->add_option("--diag-cap", c.m.diag_cap, "allowed diagonal row/col count");
    sub->add_option("--delta", c.m.deltas, "subset densities")->delimiter(',');
    sub->add_option("--trials", c.m.trials, "number of sampled trials");
    sub->add_option("--seed", c.m.seed, "base seed");
    sub->add_option("--restarts", c.m.restarts, "maximization restarts");
    sub->add_option("--iters", c.m.iters, "power-iteration cap");
    sub->add_option("--c-const", c.m.c_const, "density threshold constant");
    sub->add_option("--gamma", c.m.gamma_const, "decay exponent for the threshold");
    sub->add_option("--format", c.m.format, "stdout format: csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", c.m.out, "output path stem (writes .csv and .json)");
    sub->add_option("--workers", c.m.workers, "worker threads (0 = hardware)");
    sub->add_option("--budget-secs", c.m.budget_secs, "wall-clock budget in seconds");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-field bilinear average laboratory"};
    app.set_version_flag("--version", bilav::kVersion);
    app.require_subcommand(1);

    Cli c;
    for (const char* name : {"kernel", "conditions", "gram", "katz-sum", "norm-scan",
                             "roth", "gauss"}) {
        add_common(app.add_subcommand(name), c);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    c.m.command = app.get_subcommands().front()->get_name();
    if (c.tables.size() == 2) {
        c.m.curve_table1 = c.tables[0];
        c.m.curve_table2 = c.tables[1];
    }

    try {
        const bilav::ReportTable table = bilav::run_experiment(c.m);
        std::cout << bilav::render_report(table, c.m.format, c.m);
        std::cerr << "wrote " << c.m.out << ".csv and " << c.m.out << ".json\n";
        return 0;
    } catch (const bilav::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
