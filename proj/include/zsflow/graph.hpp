#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zsflow {

using VertexId = int;
using EdgeId = int;

// Rejected input or violated precondition. `witness()` names the offending
// vertex or edge when there is one, -1 otherwise.
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what, int witness = -1)
        : std::invalid_argument(what), witness_(witness) {}

    int witness() const noexcept { return witness_; }

private:
    int witness_;
};

struct Edge {
    VertexId u;
    VertexId v;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected multigraph on vertices 0..n-1 with dense edge ids 0..m-1.
// Parallel edges are allowed, loops are not. Immutable once built.
class MultiGraph {
public:
    MultiGraph() = default;
    MultiGraph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    const Edge& edge(EdgeId e) const { return edges_.at(e); }
    std::span<const Edge> edges() const noexcept { return edges_; }

    // Incident edge ids of `v`, ascending.
    std::span<const EdgeId> incident(VertexId v) const { return incidence_.at(v); }
    int degree(VertexId v) const { return static_cast<int>(incidence_.at(v).size()); }

    VertexId other_end(EdgeId e, VertexId v) const {
        const Edge& ed = edges_.at(e);
        return ed.u == v ? ed.v : ed.u;
    }

    friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incidence_;
};

// Spanning subgraph of a host graph, given by a sorted set of host edge ids.
struct Factor {
    std::vector<EdgeId> edges;

    friend bool operator==(const Factor&, const Factor&) = default;
};

using DegreeProfile = std::vector<int>;

// A graph carved out of a host, with maps back to host ids.
struct Subgraph {
    MultiGraph graph;
    std::vector<VertexId> host_vertex;
    std::vector<EdgeId> host_edge;
};

// Edge-doubled graph: edge e and edge partner[e] have the same endpoints.
// Ids 0..m-1 are the originals, m..2m-1 the copies.
struct DoubledGraph {
    MultiGraph graph;
    std::vector<EdgeId> partner;
};

MultiGraph build(int vertex_count, std::span<const std::pair<int, int>> endpoint_pairs);

std::optional<int> regular_degree(const MultiGraph& g);

DegreeProfile degree_profile(const MultiGraph& g);
DegreeProfile degree_profile(const MultiGraph& g, const Factor& f);

// Throws InvalidInput if the factor names an unknown or repeated edge id.
void validate_factor(const MultiGraph& g, const Factor& f);

// Connected components ordered by smallest vertex; each set ascending.
std::vector<std::vector<VertexId>> components(const MultiGraph& g);

// Components of the spanning subgraph formed by the factor's edges.
std::vector<std::vector<VertexId>> components(const MultiGraph& g, const Factor& f);

DoubledGraph double_edges(const MultiGraph& g);

// Graph on the endpoints of `edges` only (vertices renumbered by ascending
// host id, edges kept in the given order).
Subgraph edge_subgraph(const MultiGraph& g, std::span<const EdgeId> edges);

// Graph induced by `vertices` (renumbered in the given order).
Subgraph induced_subgraph(const MultiGraph& g, std::span<const VertexId> vertices);

}  // namespace zsflow
