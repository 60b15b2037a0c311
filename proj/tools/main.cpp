#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cosdyn/cli.hpp"

using cosdyn::cli::Command;
using cosdyn::cli::RunConfig;

namespace {

struct FlagVars {
    std::string config_path;
    std::string phi;
    std::vector<std::string> weights;
    std::vector<std::string> gs;
    std::string K;
    std::int64_t horizon = 0;
    double eps = 0.0;
    std::string strategy;
    std::uint64_t seed = 0;
    std::string f, h;
    std::vector<std::int64_t> ns;
    std::string kind;
    double y = 0.0;
    double y_max = 0.0;
    int points = 0;
    int trials = 0;
    std::string json_path, csv_path;
};

void add_output_options(CLI::App* cmd, FlagVars& v) {
    cmd->add_option("--json", v.json_path, "write the JSON report to this file");
    cmd->add_option("--csv", v.csv_path, "write CSV rows to this file");
}

void add_setup_options(CLI::App* cmd, FlagVars& v, bool repeatable) {
    cmd->add_option("--phi", v.phi, "Young function preset or expression");
    auto* w = cmd->add_option("--weight", v.weights,
                              "weight preset (paper-step) or expression in x");
    auto* g = cmd->add_option("--g", v.gs, "group element, e.g. 1 or [1,-2]");
    if (!repeatable) {
        w->expected(0, 1);
        g->expected(0, 1);
    }
}

void add_check_options(CLI::App* cmd, FlagVars& v) {
    cmd->add_option("--K", v.K, "finite set, a range a..b or [[p],[q],...]");
    cmd->add_option("--horizon", v.horizon, "largest n to evaluate");
    cmd->add_option("--eps", v.eps, "decay threshold for the criterion quantities");
    cmd->add_option("--seed", v.seed, "seed recorded with the run");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted-translation cosine operator dynamics on Orlicz sequence spaces"};
    app.require_subcommand(0, 1);
    FlagVars v;
    app.add_option("--config", v.config_path, "TOML or JSON file with run options");

    auto* norm = app.add_subcommand("norm", "evaluate a sequence norm");
    norm->add_option("--phi", v.phi, "Young function preset or expression");
    norm->add_option("--f", v.f, "sequence literal, e.g. [{[0],1},{[1],1}]");
    norm->add_option("--kind", v.kind, "orlicz | luxemburg | modular | dual-bound");
    norm->add_option("--trials", v.trials, "random starts for the dual bound");
    norm->add_option("--seed", v.seed, "seed for the dual bound");
    norm->add_option("--json", v.json_path, "write the JSON report to this file");

    auto* conj = app.add_subcommand("conjugate", "evaluate the complementary function");
    conj->add_option("--phi", v.phi, "Young function preset or expression");
    conj->add_option("--y", v.y, "single evaluation point");
    conj->add_option("--y-max", v.y_max, "table range [0, y_max]");
    conj->add_option("--points", v.points, "table size");
    add_output_options(conj, v);

    auto* trans = app.add_subcommand("check-transitive", "transitivity criterion evidence");
    add_setup_options(trans, v, false);
    add_check_options(trans, v);
    trans->add_option("--strategy", v.strategy, "all_plus | all_minus | greedy");
    add_output_options(trans, v);

    auto* mix = app.add_subcommand("check-mixing", "mixing criterion evidence");
    add_setup_options(mix, v, false);
    add_check_options(mix, v);
    add_output_options(mix, v);

    auto* dsum = app.add_subcommand("check-direct-sum",
                                    "joint criterion for a direct sum of operators");
    add_setup_options(dsum, v, true);
    add_check_options(dsum, v);
    dsum->add_option("--strategy", v.strategy, "all_plus | all_minus | greedy");
    add_output_options(dsum, v);

    auto* wit = app.add_subcommand("witness", "construct and verify the approximants");
    add_setup_options(wit, v, false);
    wit->add_option("--f", v.f, "target sequence in U");
    wit->add_option("--h", v.h, "target sequence in V");
    wit->add_option("--ns", v.ns, "checkpoints; default derives them from the criterion");
    wit->add_option("--strategy", v.strategy, "all_plus | all_minus | greedy");
    wit->add_option("--horizon", v.horizon, "horizon for derived checkpoints");
    wit->add_option("--eps", v.eps, "eps for derived checkpoints");
    add_output_options(wit, v);

    auto* repro = app.add_subcommand("reproduce-example",
                                     "run the built-in step-weight example end to end");
    repro->add_option("--horizon", v.horizon, "largest n to evaluate");
    repro->add_option("--eps", v.eps, "decay threshold");
    add_output_options(repro, v);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage errors map to status 1
    }

    RunConfig cfg;
    try {
        if (!v.config_path.empty()) cosdyn::cli::apply_config_file(cfg, v.config_path);

        CLI::App* active = nullptr;
        for (auto* sub : {norm, conj, trans, mix, dsum, wit, repro}) {
            if (sub->parsed()) active = sub;
        }
        if (active == norm) cfg.command = Command::norm;
        else if (active == conj) cfg.command = Command::conjugate;
        else if (active == trans) cfg.command = Command::check_transitive;
        else if (active == mix) cfg.command = Command::check_mixing;
        else if (active == dsum) cfg.command = Command::check_direct_sum;
        else if (active == wit) cfg.command = Command::witness;
        else if (active == repro) cfg.command = Command::reproduce_example;
        else if (v.config_path.empty()) {
            std::cerr << app.help() << std::flush;
            return 1;
        }

        const auto set = [&](const char* name) {
            return active != nullptr && active->count(name) > 0;
        };
        if (set("--phi")) cfg.phi = v.phi;
        if (set("--weight")) cfg.weights = v.weights;
        if (set("--g")) cfg.gs = v.gs;
        if (set("--K")) cfg.K = v.K;
        if (set("--horizon")) cfg.horizon = v.horizon;
        if (set("--eps")) cfg.eps = v.eps;
        if (set("--strategy")) cfg.strategy = v.strategy;
        if (set("--seed")) cfg.seed = v.seed;
        if (set("--f")) cfg.f = v.f;
        if (set("--h")) cfg.h = v.h;
        if (set("--ns")) cfg.ns = v.ns;
        if (set("--kind")) cfg.kind = v.kind;
        if (set("--y")) cfg.y = v.y;
        if (set("--y-max")) cfg.y_max = v.y_max;
        if (set("--points")) cfg.points = v.points;
        if (set("--trials")) cfg.trials = v.trials;
        if (set("--json")) cfg.json_path = v.json_path;
        if (set("--csv")) cfg.csv_path = v.csv_path;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    return cosdyn::cli::run_command(cfg, std::cout, std::cerr);
}
