#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zsflow/factorization.hpp"
#include "zsflow/flow.hpp"
#include "zsflow/generators.hpp"
#include "zsflow/io.hpp"
#include "zsflow/report.hpp"
#include "zsflow/solver.hpp"

namespace zsflow::cli {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string read_all(std::istream& in) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string read_file(const std::string& path) {
    if (path == "-") return read_all(std::cin);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    return read_all(in);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) parts.push_back(cur);
    return parts;
}

int to_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw InvalidInput("expected an integer for " + what + ", got '" + s + "'");
    }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InvalidInput("cannot write '" + path + "'");
    file << text;
}

std::string flow_section_text(std::string_view text) {
    auto pos = text.find("[flow]\n");
    if (pos == std::string_view::npos) return std::string(text);
    return std::string(text.substr(pos + 7));
}

struct Common {
    std::string graph;
    std::string format = "auto";
    std::string out_path;
    std::string flow_out;
    std::uint64_t budget = 0;
};

void add_graph_options(CLI::App* cmd, Common& c) {
    cmd->add_option("graph", c.graph, "Graph file, '-' for stdin, or builtin family spec")->required();
    cmd->add_option("--format", c.format, "Input format")
        ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
    cmd->add_option("--out", c.out_path, "Write the report to this file instead of stdout");
}

int cmd_construct(const Common& c, std::ostream& out, std::ostream& err) {
    MultiGraph g = load_graph(c.graph, c.format);
    RunReport report{"construct", std::nullopt, c.graph, c.format, {}, {}, 0.0, std::nullopt};
    report.parameters.push_back({"budget", std::to_string(c.budget)});

    const auto start = Clock::now();
    Construction result;
    try {
        result = construct(g, ConstructOptions{c.budget});
    } catch (const UnsupportedDegree& e) {
        err << "unsupported degree: " << e.what() << '\n';
        return kUnsupportedDegree;
    } catch (const SearchExhausted& e) {
        report.outcome = {{"status", "not-found"}, {"detail", e.what()}};
        report.wall_time_ms = elapsed_ms(start);
        emit(render_report(report, g), c.out_path, out);
        err << "factor search gave up: " << e.what() << '\n';
        return kUndecided;
    }
    report.wall_time_ms = elapsed_ms(start);

    report.outcome.push_back({"status", to_string(result.status)});
    report.outcome.push_back({"method", result.method});
    report.outcome.push_back({"solver_nodes", std::to_string(result.solver_nodes)});
    int code = kOk;
    if (result.flow) {
        auto check = verify(g, *result.flow, result.flow->k);
        report.outcome.push_back({"k", std::to_string(result.flow->k)});
        report.outcome.push_back({"verdict", check.pass ? "pass" : "fail"});
        report.outcome.push_back({"max_abs", std::to_string(check.max_abs)});
        if (!check.pass) {
            err << "internal verification failure: " << check.first_violation->describe() << '\n';
            return kInternalFailure;
        }
        report.flow = result.flow;
        if (!c.flow_out.empty()) emit(write_flow(g, *result.flow), c.flow_out, out);
    } else if (result.status == ConstructStatus::Undecided) {
        err << "undecided: solver budget exhausted for r = " << result.degree << '\n';
        code = kUndecided;
    } else {
        err << "NO zero-sum 5-flow exists for this " << result.degree
            << "-regular graph (exhaustive search)\n";
        code = kInternalFailure;
    }
    emit(render_report(report, g), c.out_path, out);
    return code;
}

int cmd_verify(const Common& c, const std::string& flow_path, int k_override, std::ostream& out,
               std::ostream& err) {
    MultiGraph g = load_graph(c.graph, c.format);
    std::string text = read_file(flow_path);
    IntFlow flow = parse_flow(looks_like_report(text) ? flow_section_text(text) : text, g);
    const int k = k_override > 0 ? k_override : flow.k;

    const auto start = Clock::now();
    FlowReport check = verify(g, flow, k);
    RunReport report{"verify", std::nullopt, c.graph, c.format, {}, {}, elapsed_ms(start), std::nullopt};
    report.parameters.push_back({"flow", flow_path});
    report.parameters.push_back({"k", std::to_string(k)});
    report.outcome.push_back({"verdict", check.pass ? "pass" : "fail"});
    report.outcome.push_back({"max_abs", std::to_string(check.max_abs)});
    if (check.first_violation) report.outcome.push_back({"violation", check.first_violation->describe()});
    std::ostringstream sums;
    for (std::size_t v = 0; v < check.vertex_sums.size(); ++v) {
        sums << (v ? " " : "") << check.vertex_sums[v];
    }
    report.outcome.push_back({"vertex_sums", sums.str()});
    emit(render_report(report, g), c.out_path, out);
    if (!check.pass) err << "fail: " << check.first_violation->describe() << '\n';
    return check.pass ? kOk : kVerdictFail;
}

void push_outcome(Fields& fields, const std::string& prefix, const SearchOutcome& o) {
    fields.push_back({prefix + "status", to_string(o.status)});
    fields.push_back({prefix + "nodes", std::to_string(o.nodes)});
    fields.push_back({prefix + "exhausted", o.exhausted ? "true" : "false"});
}

int cmd_solve(const Common& c, int k, std::ostream& out, std::ostream& err) {
    MultiGraph g = load_graph(c.graph, c.format);
    const auto start = Clock::now();
    SearchOutcome res = solve(g, k, c.budget);
    RunReport report{"solve", std::nullopt, c.graph, c.format, {}, {}, elapsed_ms(start), std::nullopt};
    report.parameters.push_back({"k", std::to_string(k)});
    report.parameters.push_back({"budget", std::to_string(c.budget)});
    push_outcome(report.outcome, "", res);
    if (res.flow) {
        report.flow = res.flow;
        if (!c.flow_out.empty()) emit(write_flow(g, *res.flow), c.flow_out, out);
    }
    emit(render_report(report, g), c.out_path, out);
    if (res.status == SearchStatus::Undecided) {
        err << "undecided: budget of " << c.budget << " nodes exhausted\n";
        return kUndecided;
    }
    return kOk;
}

int cmd_flownumber(const Common& c, int k_max, std::ostream& out, std::ostream& err) {
    MultiGraph g = load_graph(c.graph, c.format);
    const auto start = Clock::now();
    FlowNumber res = flow_number(g, k_max, c.budget);
    RunReport report{"flownumber", std::nullopt, c.graph, c.format, {}, {}, elapsed_ms(start),
                     std::nullopt};
    report.parameters.push_back({"kmax", std::to_string(k_max)});
    report.parameters.push_back({"budget", std::to_string(c.budget)});
    report.outcome.push_back({"status", to_string(res.status)});
    report.outcome.push_back({"flow_number", res.k ? std::to_string(*res.k) : "none"});
    for (std::size_t i = 0; i < res.attempts.size(); ++i) {
        push_outcome(report.outcome, "k" + std::to_string(i + 2) + "_", res.attempts[i]);
    }
    if (res.k) report.flow = res.attempts.back().flow;
    emit(render_report(report, g), c.out_path, out);
    if (res.status == SearchStatus::Undecided) {
        err << "undecided: budget of " << c.budget << " nodes exhausted\n";
        return kUndecided;
    }
    return kOk;
}

}  // namespace

std::uint64_t default_budget() {
    if (const char* env = std::getenv("ZSFLOW_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            // fall through to the library default
        }
    }
    return kDefaultBudget;
}

MultiGraph generate_family(const std::string& family, const std::vector<std::string>& params,
                           std::uint64_t seed) {
    auto need = [&](std::size_t count) {
        if (params.size() != count) {
            throw InvalidInput(family + " takes " + std::to_string(count) + " parameter(s)");
        }
    };
    if (family == "cycle") {
        need(1);
        return cycle(to_int(params[0], "n"));
    }
    if (family == "path") {
        need(1);
        return path(to_int(params[0], "n"));
    }
    if (family == "complete") {
        need(1);
        return complete(to_int(params[0], "n"));
    }
    if (family == "complete_bipartite") {
        need(2);
        return complete_bipartite(to_int(params[0], "a"), to_int(params[1], "b"));
    }
    if (family == "petersen") {
        need(0);
        return petersen();
    }
    if (family == "cubic_no_pm") {
        need(0);
        return cubic_no_pm();
    }
    if (family == "circulant") {
        need(2);
        std::vector<int> offsets;
        for (const auto& o : split(params[1], ',')) offsets.push_back(to_int(o, "offset"));
        return circulant(to_int(params[0], "n"), offsets);
    }
    if (family == "random_regular") {
        need(2);
        return random_regular(to_int(params[0], "n"), to_int(params[1], "r"), seed);
    }
    throw InvalidInput("unknown graph family '" + family + "'");
}

MultiGraph load_graph(const std::string& spec, const std::string& format) {
    if (spec != "-" && !std::filesystem::exists(spec)) {
        auto parts = split(spec, ':');
        if (parts.empty()) throw InvalidInput("empty graph argument");
        std::string family = parts.front();
        std::vector<std::string> params(parts.begin() + 1, parts.end());
        std::uint64_t seed = 0;
        if (family == "random_regular" && params.size() == 3) {
            seed = static_cast<std::uint64_t>(to_int(params.back(), "seed"));
            params.pop_back();
        }
        try {
            return generate_family(family, params, seed);
        } catch (const InvalidInput& e) {
            throw InvalidInput("'" + spec + "' is neither a readable file nor a graph family: " +
                               e.what());
        }
    }
    std::string text = read_file(spec);
    std::string fmt = format;
    if (fmt == "auto") {
        fmt = "graph6";
        if (spec.ends_with(".g6")) {
            fmt = "graph6";
        } else {
            std::istringstream in(text);
            std::string line;
            while (std::getline(in, line)) {
                auto first = line.find_first_not_of(" \t\r");
                if (first == std::string::npos || line[first] == '#') continue;
                if (line.starts_with(">>graph6<<")) break;
                std::istringstream ls(line);
                long long a = 0, b = 0;
                if (ls >> a >> b) fmt = "edgelist";
                break;
            }
        }
    }
    return fmt == "graph6" ? parse_graph6(text) : parse_edge_list(text);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Zero-sum flows on regular multigraphs"};
    app.name("zsflow");
    app.require_subcommand(1);

    Common c;
    c.budget = default_budget();

    auto* construct_cmd = app.add_subcommand("construct", "Build a zero-sum flow for a regular graph");
    add_graph_options(construct_cmd, c);
    construct_cmd->add_option("--flow-out", c.flow_out, "Also write the bare flow file");
    construct_cmd->add_option("--budget", c.budget, "Solver node budget for r = 3 and r = 5");

    std::string flow_path;
    int k_override = 0;
    auto* verify_cmd = app.add_subcommand("verify", "Check a flow against a graph");
    add_graph_options(verify_cmd, c);
    verify_cmd->add_option("flow", flow_path, "Flow file or report")->required();
    verify_cmd->add_option("--k", k_override, "Bound to check (default: the flow's own k)");

    int k = 0;
    auto* solve_cmd = app.add_subcommand("solve", "Exhaustive search for a zero-sum k-flow");
    add_graph_options(solve_cmd, c);
    solve_cmd->add_option("--k", k, "Flow bound")->required()->check(CLI::Range(2, 1000));
    solve_cmd->add_option("--budget", c.budget, "Node expansion budget");
    solve_cmd->add_option("--flow-out", c.flow_out, "Also write the bare flow file");

    int k_max = 6;
    auto* fn_cmd = app.add_subcommand("flownumber", "Smallest k with a zero-sum k-flow");
    add_graph_options(fn_cmd, c);
    fn_cmd->add_option("--kmax", k_max, "Largest k to try")->check(CLI::Range(2, 1000));
    fn_cmd->add_option("--budget", c.budget, "Node expansion budget per k");

    std::string family;
    std::vector<std::string> params;
    std::uint64_t seed = 0;
    std::string gen_format = "edgelist";
    auto* gen_cmd = app.add_subcommand("generate", "Write a generated graph");
    gen_cmd->add_option("family", family, "Graph family")->required();
    gen_cmd->add_option("params", params, "Family parameters");
    gen_cmd->add_option("--seed", seed, "Seed for random families");
    gen_cmd->add_option("--out", c.out_path, "Output file (default stdout)");
    gen_cmd->add_option("--format", gen_format, "Output format")
        ->check(CLI::IsMember({"graph6", "edgelist"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*construct_cmd) return cmd_construct(c, out, err);
        if (*verify_cmd) return cmd_verify(c, flow_path, k_override, out, err);
        if (*solve_cmd) return cmd_solve(c, k, out, err);
        if (*fn_cmd) return cmd_flownumber(c, k_max, out, err);
        if (*gen_cmd) {
            MultiGraph g = generate_family(family, params, seed);
            emit(gen_format == "graph6" ? write_graph6(g) + "\n" : write_edge_list(g), c.out_path, out);
            return kOk;
        }
    } catch (const UnsupportedDegree& e) {
        err << "unsupported degree: " << e.what() << '\n';
        return kUnsupportedDegree;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::logic_error& e) {
        err << "internal failure: " << e.what() << '\n';
        return kInternalFailure;
    }
    return kInputError;
}

}  // namespace zsflow::cli
