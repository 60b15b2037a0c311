#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cosdyn/ops.hpp"
#include "cosdyn/young.hpp"

namespace cosdyn::cli {

enum class Command {
    norm,
    conjugate,
    check_transitive,
    check_mixing,
    check_direct_sum,
    witness,
    reproduce_example,
};

Command command_from_string(const std::string& s);
std::string to_string(Command c);

/// Everything a run needs, as unparsed specs; resolution (presets,
/// expressions, point lists) happens inside run_command so bad input maps to
/// exit status 1 with a message.
struct RunConfig {
    Command command = Command::reproduce_example;
    std::string phi = "paper-entropy";
    std::vector<std::string> weights;  // one per component; checks need >= 1
    std::vector<std::string> gs;       // "[1]" or bare "1"; broadcast if one
    std::string K;                     // "a..b" or "[[p],[q]]"
    std::int64_t horizon = 80;
    double eps = 1e-6;
    std::string strategy = "greedy";
    std::uint64_t seed = 0;
    std::string f, h;                 // sequence literals
    std::vector<std::int64_t> ns;     // witness checkpoints; empty = derive
    std::string kind = "orlicz";      // norm kind
    std::optional<double> y;          // conjugate: single evaluation point
    double y_max = 20.0;
    int points = 200;
    int trials = 4;
    std::string json_path;
    std::string csv_path;
};

/// Merges a config file (JSON object, or a flat TOML subset of
/// `key = value` lines) into `config`. Unknown keys are an error.
void apply_config_file(RunConfig& config, const std::string& path);

/// Exit status: 0 computed/satisfied, 2 violated, 3 inconclusive,
/// 1 usage or precondition error. Reports go to `out`, diagnostics to `err`.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Preset name, or an expression validated through the sampled
/// Young-function invariants.
YoungFunction resolve_phi(const std::string& spec);

/// Preset name `paper-step`, or an expression in the point coordinate
/// (dimension 1 unless the expression is constant).
Weight resolve_weight(const std::string& spec);

GroupElement parse_group_element(const std::string& spec);
FiniteSet parse_point_set(const std::string& spec);
/// `[{[0],1},{[1],-2}]` or a JSON array of {point, value} records.
FinSeq parse_sequence(const std::string& spec);

}  // namespace cosdyn::cli
