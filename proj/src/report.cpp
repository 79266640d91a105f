#include "zsflow/report.hpp"

#include <iomanip>
#include <sstream>

namespace zsflow {

namespace {

constexpr std::string_view kFlowSection = "[flow]";

void write_fields(std::ostream& os, const Fields& fields) {
    for (const auto& [key, value] : fields) os << key << ": " << value << '\n';
}

}  // namespace

std::string render_report(const RunReport& report, const MultiGraph& g) {
    std::ostringstream os;
    os << "# zsflow report\n";
    os << "command: " << report.command << '\n';
    os << "version: " << kVersion << '\n';
    os << "seed: " << (report.seed ? std::to_string(*report.seed) : std::string("none")) << '\n';
    os << "input: " << report.input << '\n';
    os << "format: " << report.format << '\n';
    os << "[parameters]\n";
    write_fields(os, report.parameters);
    os << "[graph]\n";
    os << "n: " << g.vertex_count() << '\n';
    os << "m: " << g.edge_count() << '\n';
    auto r = regular_degree(g);
    os << "r: " << (r ? std::to_string(*r) : std::string("irregular")) << '\n';
    os << "[outcome]\n";
    write_fields(os, report.outcome);
    os << "wall_time_ms: " << std::fixed << std::setprecision(3) << report.wall_time_ms << '\n';
    if (report.flow) {
        os << kFlowSection << '\n';
        os << write_flow(g, *report.flow);
    }
    return os.str();
}

std::optional<std::string> LoadedReport::get(const std::string& section,
                                             const std::string& key) const {
    auto s = sections.find(section);
    if (s == sections.end()) return std::nullopt;
    auto k = s->second.find(key);
    if (k == s->second.end()) return std::nullopt;
    return k->second;
}

bool looks_like_report(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line == kFlowSection || line == "# zsflow report") return true;
    }
    return false;
}

LoadedReport load_report(std::string_view text) {
    LoadedReport out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::string section = "header";
    std::string flow_text;
    bool in_flow = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (in_flow) {
            flow_text += line;
            flow_text += '\n';
            continue;
        }
        if (line.empty() || line.front() == '#') continue;
        if (line == kFlowSection) {
            in_flow = true;
            continue;
        }
        if (line.front() == '[' && line.back() == ']') {
            section = line.substr(1, line.size() - 2);
            continue;
        }
        auto colon = line.find(": ");
        if (colon == std::string::npos) throw InvalidInput("malformed report line: " + line);
        out.sections[section][line.substr(0, colon)] = line.substr(colon + 2);
    }
    if (in_flow) {
        ParsedFlow parsed = parse_flow(flow_text);
        MultiGraph g(parsed.n, parsed.edges);
        auto check = verify(g, parsed.flow, parsed.flow.k);
        if (!check.pass) {
            throw InvalidInput("reported flow does not verify: " + check.first_violation->describe());
        }
        out.flow = std::move(parsed);
    }
    return out;
}

std::string strip_timing(std::string_view report_text) {
    std::istringstream in{std::string(report_text)};
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("wall_time", 0) == 0) continue;
        out << line << '\n';
    }
    return out.str();
}

}  // namespace zsflow
