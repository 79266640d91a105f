#include "zsflow/graph.hpp"

#include <algorithm>
#include <numeric>

namespace zsflow {

MultiGraph::MultiGraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0) throw InvalidInput("negative vertex count");
    incidence_.assign(static_cast<std::size_t>(n_), {});
    for (EdgeId e = 0; e < edge_count(); ++e) {
        const Edge& ed = edges_[e];
        if (ed.u < 0 || ed.u >= n_ || ed.v < 0 || ed.v >= n_) {
            throw InvalidInput("edge " + std::to_string(e) + ": endpoint out of range", e);
        }
        if (ed.u == ed.v) {
            throw InvalidInput("edge " + std::to_string(e) + ": loop at vertex " +
                                   std::to_string(ed.u),
                               e);
        }
        incidence_[ed.u].push_back(e);
        incidence_[ed.v].push_back(e);
    }
}

MultiGraph build(int vertex_count, std::span<const std::pair<int, int>> endpoint_pairs) {
    std::vector<Edge> edges;
    edges.reserve(endpoint_pairs.size());
    for (auto [u, v] : endpoint_pairs) edges.push_back({u, v});
    return MultiGraph(vertex_count, std::move(edges));
}

std::optional<int> regular_degree(const MultiGraph& g) {
    if (g.vertex_count() == 0) return std::nullopt;
    int r = g.degree(0);
    for (VertexId v = 1; v < g.vertex_count(); ++v) {
        if (g.degree(v) != r) return std::nullopt;
    }
    return r;
}

DegreeProfile degree_profile(const MultiGraph& g) {
    DegreeProfile d(static_cast<std::size_t>(g.vertex_count()));
    for (VertexId v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
    return d;
}

DegreeProfile degree_profile(const MultiGraph& g, const Factor& f) {
    DegreeProfile d(static_cast<std::size_t>(g.vertex_count()), 0);
    for (EdgeId e : f.edges) {
        const Edge& ed = g.edge(e);
        ++d[ed.u];
        ++d[ed.v];
    }
    return d;
}

void validate_factor(const MultiGraph& g, const Factor& f) {
    std::vector<char> seen(static_cast<std::size_t>(g.edge_count()), 0);
    for (EdgeId e : f.edges) {
        if (e < 0 || e >= g.edge_count()) {
            throw InvalidInput("factor names unknown edge " + std::to_string(e), e);
        }
        if (seen[e]) throw InvalidInput("factor repeats edge " + std::to_string(e), e);
        seen[e] = 1;
    }
}

namespace {

std::vector<std::vector<VertexId>> components_over(const MultiGraph& g,
                                                   const std::vector<char>& use_edge) {
    const int n = g.vertex_count();
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<VertexId>> out;
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < n; ++s) {
        if (label[s] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        label[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (EdgeId e : g.incident(v)) {
                if (!use_edge[e]) continue;
                VertexId w = g.other_end(e, v);
                if (label[w] < 0) {
                    label[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

}  // namespace

std::vector<std::vector<VertexId>> components(const MultiGraph& g) {
    return components_over(g, std::vector<char>(static_cast<std::size_t>(g.edge_count()), 1));
}

std::vector<std::vector<VertexId>> components(const MultiGraph& g, const Factor& f) {
    validate_factor(g, f);
    std::vector<char> use(static_cast<std::size_t>(g.edge_count()), 0);
    for (EdgeId e : f.edges) use[e] = 1;
    return components_over(g, use);
}

DoubledGraph double_edges(const MultiGraph& g) {
    const int m = g.edge_count();
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    edges.insert(edges.end(), g.edges().begin(), g.edges().end());
    DoubledGraph out{MultiGraph(g.vertex_count(), std::move(edges)),
                     std::vector<EdgeId>(static_cast<std::size_t>(2 * m))};
    for (EdgeId e = 0; e < m; ++e) {
        out.partner[e] = e + m;
        out.partner[e + m] = e;
    }
    return out;
}

Subgraph edge_subgraph(const MultiGraph& g, std::span<const EdgeId> edges) {
    std::vector<char> touched(static_cast<std::size_t>(g.vertex_count()), 0);
    for (EdgeId e : edges) {
        const Edge& ed = g.edge(e);
        touched[ed.u] = touched[ed.v] = 1;
    }
    Subgraph out;
    std::vector<VertexId> local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!touched[v]) continue;
        local[v] = static_cast<VertexId>(out.host_vertex.size());
        out.host_vertex.push_back(v);
    }
    std::vector<Edge> local_edges;
    local_edges.reserve(edges.size());
    for (EdgeId e : edges) {
        const Edge& ed = g.edge(e);
        local_edges.push_back({local[ed.u], local[ed.v]});
        out.host_edge.push_back(e);
    }
    out.graph = MultiGraph(static_cast<int>(out.host_vertex.size()), std::move(local_edges));
    return out;
}

Subgraph induced_subgraph(const MultiGraph& g, std::span<const VertexId> vertices) {
    Subgraph out;
    std::vector<VertexId> local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (VertexId v : vertices) {
        if (local.at(v) >= 0) throw InvalidInput("vertex listed twice", v);
        local[v] = static_cast<VertexId>(out.host_vertex.size());
        out.host_vertex.push_back(v);
    }
    std::vector<Edge> local_edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (local[ed.u] < 0 || local[ed.v] < 0) continue;
        local_edges.push_back({local[ed.u], local[ed.v]});
        out.host_edge.push_back(e);
    }
    out.graph = MultiGraph(static_cast<int>(out.host_vertex.size()), std::move(local_edges));
    return out;
}

}  // namespace zsflow
