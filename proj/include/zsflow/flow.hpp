#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zsflow/graph.hpp"

namespace zsflow {

class UnsupportedDegree : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

// Integer edge labelling claiming to be a zero-sum k-flow: values in
// {+-1, ..., +-(k-1)}, indexed by edge id.
struct IntFlow {
    int k = 0;
    std::vector<int> values;

    friend bool operator==(const IntFlow&, const IntFlow&) = default;
};

struct FlowViolation {
    enum class Kind { ZeroValue, OutOfRange, NonzeroSum };

    Kind kind;
    int where;  // edge id for value violations, vertex for sums
    long long amount;  // offending value or vertex sum

    std::string describe() const;
};

struct FlowReport {
    std::vector<long long> vertex_sums;
    int max_abs = 0;
    bool pass = false;
    std::optional<FlowViolation> first_violation;
};

// Pure check against bound k. Edges are scanned first (zero values, then
// range), vertex sums after. Throws InvalidInput if `f` is not total.
FlowReport verify(const MultiGraph& g, const IntFlow& f, int k);

// Weighting into {2, 3, 4} with every vertex sum equal to q. Needs g
// r-regular (r >= 1), q even and 2r <= q <= 4r.
std::vector<int> lemma_qr(const MultiGraph& g, int q);

// Zero-sum 3-flow for even r >= 4, values in {+-1, +-2}.
IntFlow flow_even_regular(const MultiGraph& g);

// Zero-sum 5-flow for r = 7.
IntFlow flow_7_regular(const MultiGraph& g);

// Zero-sum 5-flow for odd r >= 9.
IntFlow flow_odd_regular(const MultiGraph& g);

enum class ConstructStatus { Verified, Undecided, Nonexistent };

struct ConstructOptions {
    std::uint64_t solver_budget = 100'000'000;  // node expansions per component
};

struct Construction {
    ConstructStatus status = ConstructStatus::Undecided;
    int degree = 0;
    std::string method;
    std::optional<IntFlow> flow;
    std::uint64_t solver_nodes = 0;
};

// Case dispatch on the regular degree, component by component. Irregular
// input throws InvalidInput, r < 3 throws UnsupportedDegree. r = 3 and r = 5
// go through the exact solver; a budget overrun reports Undecided.
Construction construct(const MultiGraph& g, const ConstructOptions& options = {});

std::string to_string(ConstructStatus status);

// Text form: header "k n m", then one "edge_id u v value" line per edge.
std::string write_flow(const MultiGraph& g, const IntFlow& f);

struct ParsedFlow {
    IntFlow flow;
    int n = 0;
    std::vector<Edge> edges;
};

// Reads the text form; with a graph given, edge count and endpoints must
// agree with it. Blank lines and '#' comments are skipped.
ParsedFlow parse_flow(std::string_view text);
IntFlow parse_flow(std::string_view text, const MultiGraph& g);

}  // namespace zsflow
