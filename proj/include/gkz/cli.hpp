#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "gkz/curves.hpp"
#include "gkz/orlov.hpp"
#include "gkz/toric.hpp"

namespace gkz::cli {

using nlohmann::json;

struct ToricInput {
    toric::GitProblem problem;
    toric::RatVec character;
    lattice::Int twist_d = 0;
};

struct OrlovInput {
    orlov::CISpec spec;
};

struct CurvesPnInput {
    std::vector<lattice::Rat> weights;
    curves::Group group = curves::Group::SL2;
};

struct CurvesFmInput {
    curves::FmLinearization lin;
};

struct ProblemFile {
    std::variant<ToricInput, OrlovInput, CurvesPnInput, CurvesFmInput> payload;
    json echo;  // normal form of the input, embedded in every report
};

// Validated problem from a JSON document; diagnostics name the offending
// field. Presets resolve to their normal form here.
ProblemFile parse_input(const json& doc);
ProblemFile parse_input_text(const std::string& text);

ProblemFile resolve_preset(const std::string& name,
                           const std::vector<std::string>& parameters);

struct RunOptions {
    int seed = 0;
    lattice::Int twist_d = 0;
};

// Dispatch a command against a parsed problem. Commands: fan, chamber, k0,
// collection, orlov, curves-count, curves-abyss.
json run(const ProblemFile& problem, const std::string& command, const RunOptions& opts);

// Render a report: canonical json, a text summary, or (for fan) a DOT graph.
std::string emit(const json& report, const std::string& format);

// Full command-line entry point; returns the process exit code
// (0 success, 2 domain error, 64 usage).
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string version();

}  // namespace gkz::cli
