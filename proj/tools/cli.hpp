#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "zsflow/graph.hpp"

namespace zsflow::cli {

enum ExitCode : int {
    kOk = 0,
    kVerdictFail = 1,
    kInputError = 2,
    kUnsupportedDegree = 3,
    kUndecided = 4,
    kInternalFailure = 5,
};

// Runs one command line (without the program name). Reports go to `out`
// unless redirected with --out, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Builds a named family: cycle N, path N, complete N, complete_bipartite A B,
// petersen, circulant N O1,O2,..., random_regular N R, cubic_no_pm.
MultiGraph generate_family(const std::string& family, const std::vector<std::string>& params,
                           std::uint64_t seed);

// A graph argument is a file path, "-" for stdin, or, when no such file
// exists, a builtin spec "family[:param[:param...]]" such as
// "circulant:10:1,2,3,5". `format` is "auto", "graph6" or "edgelist".
MultiGraph load_graph(const std::string& spec, const std::string& format);

// Node budget from ZSFLOW_BUDGET, else the library default.
std::uint64_t default_budget();

}  // namespace zsflow::cli
