#include "qalcove/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace qalcove;

namespace {

void add_case_options(CLI::App *cmd, CaseSpec &spec) {
    cmd->add_option("--type", spec.type,
                    "root system token, e.g. A2 (verify sweeps accept a "
                    "comma-separated list)");
    cmd->add_option("--lambda", spec.lambda,
                    "weight as comma-separated fundamental coefficients");
    cmd->add_option("--w", spec.w, "Weyl word (\"s1 s2\", \"1 2\", \"e\") or all");
    cmd->add_option("--order", spec.order,
                    "auto, or a JSON file with a reflection order");
    cmd->add_option("--format", spec.format, "markdown | json | dot");
    cmd->add_option("--truncate-par", spec.truncate_par,
                    "partition-size truncation for series output");
    cmd->add_option("--sweep", spec.sweep, "coefficient range min..max");
    cmd->add_option("--cap", spec.cap, "inversion-set size cap");
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"exact computations in the quantum alcove model: admissible "
                 "subsets, interpolated QLS paths, the forgetful map between "
                 "them, and the graded-character term identity"};
    app.require_subcommand(1);

    CaseSpec spec;
    std::string kind;

    auto *table = app.add_subcommand("table", "render a statistics table");
    table->add_option("kind", kind, "admissible | forgetful | image | stats")
        ->required();
    add_case_options(table, spec);

    auto *enumerate = app.add_subcommand("enumerate", "stream an enumeration");
    enumerate
        ->add_option("kind", kind, "iqls | ils | qbg | chain | inversions | series")
        ->required();
    add_case_options(enumerate, spec);

    auto *verify = app.add_subcommand("verify", "run the invariant suite");
    add_case_options(verify, spec);

    CLI11_PARSE(app, argc, argv);

    try {
        if (table->parsed()) {
            std::cout << cmd_table(kind, spec);
            return 0;
        }
        if (enumerate->parsed()) {
            std::cout << cmd_enumerate(kind, spec);
            return 0;
        }
        auto outcome = cmd_verify(spec);
        std::cout << outcome.report;
        return outcome.exit_code;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
