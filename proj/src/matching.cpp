#include "zsflow/matching.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <utility>

namespace zsflow {

namespace {

// Edmonds' algorithm on a plain adjacency structure. Vertices are matched
// to vertices; callers translate back to edge ids.
class Blossom {
public:
    explicit Blossom(std::vector<std::vector<int>> adj)
        : adj_(std::move(adj)), n_(static_cast<int>(adj_.size())), match_(n_, -1), parent_(n_),
          base_(n_), used_(n_), in_blossom_(n_), in_path_(n_) {}

    // Returns false as soon as some exposed vertex is found to have no
    // augmenting path, when `stop_on_exposed` is set.
    bool run(bool stop_on_exposed) {
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            for (int w : adj_[v]) {
                if (match_[w] == -1) {
                    match_[v] = w;
                    match_[w] = v;
                    break;
                }
            }
        }
        // An exposed vertex with no augmenting path stays exposed for good.
        for (int root = 0; root < n_; ++root) {
            if (match_[root] != -1) continue;
            int end = find_path(root);
            if (end == -1) {
                if (stop_on_exposed) return false;
                continue;
            }
            while (end != -1) {
                int pv = parent_[end];
                int ppv = match_[pv];
                match_[end] = pv;
                match_[pv] = end;
                end = ppv;
            }
        }
        return std::none_of(match_.begin(), match_.end(), [](int m) { return m == -1; });
    }

    const std::vector<int>& mate() const { return match_; }

private:
    int lca(int a, int b) {
        std::fill(in_path_.begin(), in_path_.end(), 0);
        for (;;) {
            a = base_[a];
            in_path_[a] = 1;
            if (match_[a] == -1) break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (in_path_[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_path(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        used_[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    int cur = lca(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; ++i) {
                        if (in_blossom_[base_[i]]) {
                            base_[i] = cur;
                            if (!used_[i]) {
                                used_[i] = 1;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) return to;
                    used_[match_[to]] = 1;
                    q.push(match_[to]);
                }
            }
        }
        return -1;
    }

    std::vector<std::vector<int>> adj_;
    int n_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_, in_blossom_, in_path_;
};

std::vector<std::vector<int>> simple_adjacency(const MultiGraph& g) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count()));
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        for (EdgeId e : g.incident(v)) adj[v].push_back(g.other_end(e, v));
        std::sort(adj[v].begin(), adj[v].end());
        adj[v].erase(std::unique(adj[v].begin(), adj[v].end()), adj[v].end());
    }
    return adj;
}

// Kuhn augmenting path on the remaining edges; `mate_edge` holds the edge id
// matched at each vertex or -1.
bool augment_bipartite(const MultiGraph& g, std::span<const char> alive, VertexId left,
                       std::vector<EdgeId>& mate_edge, std::vector<int>& visit_stamp, int stamp) {
    for (EdgeId e : g.incident(left)) {
        if (!alive[e]) continue;
        VertexId right = g.other_end(e, left);
        if (visit_stamp[right] == stamp) continue;
        visit_stamp[right] = stamp;
        EdgeId held = mate_edge[right];
        if (held == -1 ||
            augment_bipartite(g, alive, g.other_end(held, right), mate_edge, visit_stamp, stamp)) {
            mate_edge[right] = e;
            mate_edge[left] = e;
            return true;
        }
    }
    return false;
}

}  // namespace

Matching max_matching(const MultiGraph& g) {
    Blossom solver(simple_adjacency(g));
    solver.run(false);
    const auto& mate = solver.mate();
    Matching out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        VertexId w = mate[v];
        if (w == -1 || w < v) continue;
        EdgeId best = -1;
        for (EdgeId e : g.incident(v)) {
            if (g.other_end(e, v) == w) {
                best = e;
                break;
            }
        }
        out.edges.push_back(best);
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

bool has_perfect_matching(const MultiGraph& g) {
    if (g.vertex_count() % 2 != 0) return false;
    Blossom solver(simple_adjacency(g));
    return solver.run(true);
}

bool is_matching(const MultiGraph& g, const Matching& m) {
    std::vector<char> covered(static_cast<std::size_t>(g.vertex_count()), 0);
    for (EdgeId e : m.edges) {
        if (e < 0 || e >= g.edge_count()) return false;
        const Edge& ed = g.edge(e);
        if (covered[ed.u] || covered[ed.v]) return false;
        covered[ed.u] = covered[ed.v] = 1;
    }
    return true;
}

std::vector<Matching> regular_bipartite_pm_decomposition(const MultiGraph& g,
                                                         std::span<const int> side, int k) {
    const int n = g.vertex_count();
    if (static_cast<int>(side.size()) != n) throw InvalidInput("side vector has wrong length");
    for (VertexId v = 0; v < n; ++v) {
        if (side[v] != 0 && side[v] != 1) throw InvalidInput("side must be 0 or 1", v);
    }
    for (const Edge& e : g.edges()) {
        if (side[e.u] == side[e.v]) {
            throw InvalidInput("edge joins two vertices on side " + std::to_string(side[e.u]) +
                                   " at vertex " + std::to_string(e.u),
                               e.u);
        }
    }
    for (VertexId v = 0; v < n; ++v) {
        if (g.degree(v) != k) {
            throw InvalidInput("vertex " + std::to_string(v) + " has degree " +
                                   std::to_string(g.degree(v)) + ", expected " + std::to_string(k),
                               v);
        }
    }

    std::vector<char> alive(static_cast<std::size_t>(g.edge_count()), 1);
    std::vector<Matching> out;
    std::vector<int> stamp_of(static_cast<std::size_t>(n), 0);
    int stamp = 0;
    for (int round = 0; round < k; ++round) {
        std::vector<EdgeId> mate_edge(static_cast<std::size_t>(n), -1);
        for (VertexId v = 0; v < n; ++v) {
            if (side[v] != 0) continue;
            if (!augment_bipartite(g, alive, v, mate_edge, stamp_of, ++stamp)) {
                // A regular bipartite multigraph always has a perfect matching.
                throw std::logic_error("regular bipartite graph without perfect matching");
            }
        }
        Matching m;
        for (VertexId v = 0; v < n; ++v) {
            if (side[v] == 0) m.edges.push_back(mate_edge[v]);
        }
        std::sort(m.edges.begin(), m.edges.end());
        for (EdgeId e : m.edges) alive[e] = 0;
        out.push_back(std::move(m));
    }
    return out;
}

std::optional<Factor> bounded_degree_factor(const MultiGraph& g, std::span<const int> lo,
                                            std::span<const int> hi,
                                            std::span<const char> allowed) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (static_cast<int>(lo.size()) != n || static_cast<int>(hi.size()) != n) {
        throw InvalidInput("degree bounds have wrong length");
    }
    if (!allowed.empty() && static_cast<int>(allowed.size()) != m) {
        throw InvalidInput("edge mask has wrong length");
    }
    auto usable = [&](EdgeId e) { return allowed.empty() || allowed[e] != 0; };
    for (VertexId v = 0; v < n; ++v) {
        if (lo[v] < 0 || lo[v] > hi[v]) throw InvalidInput("invalid degree range", v);
        if (hi[v] - lo[v] > 1) {
            throw InvalidInput("degree ranges wider than 1 are not supported", v);
        }
    }

    // Node layout: two half-edge nodes per usable edge, then per-vertex
    // absorbers for the edges left out of the factor.
    std::vector<std::vector<int>> adj;
    auto add_node = [&]() {
        adj.emplace_back();
        return static_cast<int>(adj.size()) - 1;
    };
    auto link = [&](int a, int b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    };

    std::vector<int> half_u(static_cast<std::size_t>(m), -1), half_v(static_cast<std::size_t>(m), -1);
    std::vector<std::vector<int>> halves_at(static_cast<std::size_t>(n));
    for (EdgeId e = 0; e < m; ++e) {
        if (!usable(e)) continue;
        half_u[e] = add_node();
        half_v[e] = add_node();
        link(half_u[e], half_v[e]);
        halves_at[g.edge(e).u].push_back(half_u[e]);
        halves_at[g.edge(e).v].push_back(half_v[e]);
    }
    std::vector<int> optional_nodes;
    for (VertexId v = 0; v < n; ++v) {
        const int avail = static_cast<int>(halves_at[v].size());
        if (lo[v] > avail) return std::nullopt;
        const int top = std::min(hi[v], avail);
        for (int i = 0; i < avail - top; ++i) {
            int c = add_node();
            for (int h : halves_at[v]) link(c, h);
        }
        if (top > lo[v]) {
            int o = add_node();
            for (int h : halves_at[v]) link(o, h);
            optional_nodes.push_back(o);
        }
    }
    // Unused optional absorbers pair up with each other; a dummy fixes the
    // parity of the node count.
    for (std::size_t i = 0; i < optional_nodes.size(); ++i)
        for (std::size_t j = i + 1; j < optional_nodes.size(); ++j)
            link(optional_nodes[i], optional_nodes[j]);
    if (adj.size() % 2 != 0) {
        int dummy = add_node();
        for (int o : optional_nodes) link(dummy, o);
    }

    Blossom solver(std::move(adj));
    if (!solver.run(true)) return std::nullopt;
    const auto& mate = solver.mate();
    Factor f;
    for (EdgeId e = 0; e < m; ++e) {
        if (half_u[e] >= 0 && mate[half_u[e]] == half_v[e]) f.edges.push_back(e);
    }
    return f;
}

std::optional<Factor> degree_range_factor(const MultiGraph& g, int lo, int hi) {
    if (lo < 0 || lo > hi) throw InvalidInput("degree range needs 0 <= lo <= hi");
    if (hi - lo > 1) throw InvalidInput("degree ranges wider than 1 are not supported");
    std::vector<int> lo_v(static_cast<std::size_t>(g.vertex_count()), lo);
    std::vector<int> hi_v(static_cast<std::size_t>(g.vertex_count()), hi);
    return bounded_degree_factor(g, lo_v, hi_v);
}

}  // namespace zsflow
