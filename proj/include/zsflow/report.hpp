#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zsflow/flow.hpp"
#include "zsflow/graph.hpp"

namespace zsflow {

inline constexpr const char* kVersion = "1.0.0";

using Fields = std::vector<std::pair<std::string, std::string>>;

// Structured text report. Sections and keys are written in insertion order;
// the only run-dependent line is "wall_time_ms".
struct RunReport {
    std::string command;
    std::optional<std::uint64_t> seed;
    std::string input;
    std::string format;
    Fields parameters;
    Fields outcome;
    double wall_time_ms = 0.0;
    std::optional<IntFlow> flow;
};

std::string render_report(const RunReport& report, const MultiGraph& g);

struct LoadedReport {
    std::map<std::string, std::map<std::string, std::string>> sections;
    std::optional<ParsedFlow> flow;

    std::optional<std::string> get(const std::string& section, const std::string& key) const;
};

// Parses a rendered report. An embedded flow is re-verified against the
// edges it lists and the report is rejected (InvalidInput) if it fails.
LoadedReport load_report(std::string_view text);

// True if the text carries a "[flow]" section, i.e. is a report rather than
// a bare flow file.
bool looks_like_report(std::string_view text);

// Report text without its timing lines, for reproducibility checks.
std::string strip_timing(std::string_view report_text);

}  // namespace zsflow
