#pragma once

#include <optional>
#include <span>
#include <vector>

#include "zsflow/graph.hpp"

namespace zsflow {

// Set of pairwise non-adjacent edges, ids ascending.
struct Matching {
    std::vector<EdgeId> edges;

    int size() const noexcept { return static_cast<int>(edges.size()); }
    friend bool operator==(const Matching&, const Matching&) = default;
};

// Maximum-cardinality matching (Edmonds' blossom contraction). Among
// parallel edges the smallest id is used.
Matching max_matching(const MultiGraph& g);

bool has_perfect_matching(const MultiGraph& g);

// True iff `m` is a matching of `g` (ids valid, no shared endpoint).
bool is_matching(const MultiGraph& g, const Matching& m);

// Splits a k-regular bipartite multigraph into k edge-disjoint perfect
// matchings. `side[v]` is 0 or 1. Throws InvalidInput (with a witness
// vertex) when the input is not bipartite along `side` or not k-regular.
std::vector<Matching> regular_bipartite_pm_decomposition(const MultiGraph& g,
                                                         std::span<const int> side, int k);

// Spanning factor with lo <= d_F(v) <= hi everywhere, or nullopt if none
// exists. Only hi - lo <= 1 is supported (InvalidInput otherwise).
std::optional<Factor> degree_range_factor(const MultiGraph& g, int lo, int hi);

// Per-vertex version: lo[v] <= d_F(v) <= hi[v], using only edges with
// allowed[e] != 0 (all edges when `allowed` is empty). Needs
// hi[v] - lo[v] <= 1 for every v.
std::optional<Factor> bounded_degree_factor(const MultiGraph& g, std::span<const int> lo,
                                            std::span<const int> hi,
                                            std::span<const char> allowed = {});

}  // namespace zsflow
