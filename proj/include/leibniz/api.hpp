#pragma once

#include <string>
#include <vector>

#include "leibniz/field.hpp"

namespace leibniz {

struct RunResult {
    /// {command, input_digest, seed, budget, results, findings, exit_status[, error]}
    json report;
    int exit_code = 0;
    /// Requested rendering ("json" or "text").
    std::string format = "json";
    /// Set by --output for commands other than `corpus`.
    std::string output_path;
};

/// Runs one command line (without the program name):
///   check | analyze | decompose | a-algebra | battery | cyclic | frattini | enumerate | corpus
/// with --format {json,text}, --seed, --budget, --field, --output.
/// Exit codes: 0 success, 1 a mathematical property failed, 2 unsupported, 3 input error.
RunResult run_command(const std::vector<std::string>& args);

/// Indented key/value rendering of a report.
std::string render_text(const json& report);

/// The report in the requested format, newline-terminated.
std::string render(const RunResult& result);

} // namespace leibniz
