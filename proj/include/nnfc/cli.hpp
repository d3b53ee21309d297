#pragma once

#include <optional>
#include <string>

namespace nnfc {

enum class Command { Decide, Prune, Verify, OracleCheck, PipelineDump };

std::optional<Command> parse_command(const std::string& name);

struct RunConfig {
    Command command = Command::Decide;
    std::string input_path; // empty: stdin
    bool emit_certificate = false;
    bool json = false;
    bool oracle = false;
    bool trace = false;
    int max_model_size = 2;
};

namespace exit_code {
constexpr int ok = 0;
constexpr int usage = 1;
constexpr int contradictory = 10;
constexpr int satisfiable = 20;
constexpr int unknown = 30;
constexpr int oracle_mismatch = 40;
} // namespace exit_code

struct RunResult {
    int code = exit_code::ok;
    std::string out;
};

RunResult run(const RunConfig& config, const std::string& input);

} // namespace nnfc
