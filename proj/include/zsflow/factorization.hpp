#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "zsflow/graph.hpp"

namespace zsflow {

// A search that is guaranteed to have an answer gave up. Signals a limit of
// the algorithm, never a proof that the object does not exist.
class SearchExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Orientation {
    std::vector<VertexId> tail;  // per edge id

    VertexId head(const MultiGraph& g, EdgeId e) const { return g.other_end(e, tail.at(e)); }
};

struct TwoFactorization {
    std::vector<Factor> factors;  // ordered by smallest edge id
};

struct RegularComponentFactor {
    enum class Stage { Trivial, Direct, Repair, Backtrack };

    int k = 0;
    Factor factor;
    std::vector<std::vector<VertexId>> components;  // components of the factor
    std::vector<int> component_degree;              // k - 1 or k, per component
    Stage stage = Stage::Direct;
};

struct RegularFactorOptions {
    int repair_rounds = 256;
    std::int64_t backtrack_nodes = 200'000;
};

// Balanced orientation of an even graph from Hierholzer traversals. Throws
// InvalidInput with the first odd-degree vertex as witness.
Orientation euler_orientation(const MultiGraph& g);

// Splits a 2k-regular multigraph into k spanning 2-regular factors.
TwoFactorization two_factorization(const MultiGraph& g);

// [k-1, k]-factor of an odd-regular graph whose components are each
// regular. Requires r >= 3 odd and 1 <= k <= 2r/3; throws InvalidInput on a
// precondition failure and SearchExhausted when the staged search gives up.
RegularComponentFactor regular_component_factor(const MultiGraph& g, int k,
                                                const RegularFactorOptions& options = {});

// Invariant checks used before returning results; also handy in tests.
bool is_two_factorization(const MultiGraph& g, const TwoFactorization& tf);
bool is_regular_component_factor(const MultiGraph& g, const Factor& f, int k);

std::string to_string(RegularComponentFactor::Stage stage);

}  // namespace zsflow
