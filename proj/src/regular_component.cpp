#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>

#include "zsflow/factorization.hpp"
#include "zsflow/matching.hpp"

namespace zsflow {

namespace {

using Stage = RegularComponentFactor::Stage;

// The search works on a class vector: in_high[v] = 1 means v gets degree k,
// 0 means degree k - 1. A factor realizing the classes with no edge between
// the two classes has regular components, and every regular-component
// [k-1, k]-factor arises this way.
class ClassSearch {
public:
    ClassSearch(const MultiGraph& g, int k) : g_(g), k_(k) {}

    std::optional<Factor> realize(const std::vector<char>& in_high) {
        ++checks_;
        const int n = g_.vertex_count();
        std::vector<int> f(static_cast<std::size_t>(n));
        for (VertexId v = 0; v < n; ++v) f[v] = in_high[v] ? k_ : k_ - 1;
        std::vector<char> allowed(static_cast<std::size_t>(g_.edge_count()));
        for (EdgeId e = 0; e < g_.edge_count(); ++e) {
            const Edge& ed = g_.edge(e);
            allowed[e] = in_high[ed.u] == in_high[ed.v];
        }
        return bounded_degree_factor(g_, f, f, allowed);
    }

    // Local search seeded by an arbitrary [k-1, k]-factor: start from its
    // degree classes, then move whole mixed components (and single vertices
    // on the class boundary) between the classes.
    std::optional<Factor> repair(const Factor& seed, int rounds) {
        const int n = g_.vertex_count();
        auto deg = degree_profile(g_, seed);
        std::vector<char> start(static_cast<std::size_t>(n));
        for (VertexId v = 0; v < n; ++v) start[v] = deg[v] == k_;

        std::vector<std::vector<VertexId>> mixed;
        for (auto& comp : components(g_, seed)) {
            bool lo = false, hi = false;
            for (VertexId v : comp) (deg[v] == k_ ? hi : lo) = true;
            if (lo && hi) mixed.push_back(comp);
        }

        std::set<std::vector<char>> seen;
        std::deque<std::vector<char>> queue{start};
        seen.insert(start);
        int tried = 0;
        while (!queue.empty() && tried < rounds) {
            auto cls = std::move(queue.front());
            queue.pop_front();
            ++tried;
            if (auto f = realize(cls)) return f;

            auto push = [&](std::vector<char> next) {
                if (seen.insert(next).second) queue.push_back(std::move(next));
            };
            for (const auto& comp : mixed) {
                for (char target : {char{1}, char{0}}) {
                    auto next = cls;
                    for (VertexId v : comp) next[v] = target;
                    push(std::move(next));
                }
            }
            for (VertexId v = 0; v < n; ++v) {
                bool boundary = false;
                for (EdgeId e : g_.incident(v)) boundary |= cls[g_.other_end(e, v)] != cls[v];
                if (!boundary) continue;
                auto next = cls;
                next[v] = !next[v];
                push(std::move(next));
            }
        }
        return std::nullopt;
    }

    // Exhaustive class assignment in BFS order with a counting bound: a
    // vertex needs at least f(v) incident edges to same-class or still
    // unassigned neighbours.
    std::optional<Factor> backtrack(const std::vector<char>& hint, std::int64_t node_budget) {
        const int n = g_.vertex_count();
        order_.clear();
        std::vector<char> queued(static_cast<std::size_t>(n), 0);
        for (VertexId s = 0; s < n; ++s) {
            if (queued[s]) continue;
            std::deque<VertexId> q{s};
            queued[s] = 1;
            while (!q.empty()) {
                VertexId v = q.front();
                q.pop_front();
                order_.push_back(v);
                for (EdgeId e : g_.incident(v)) {
                    VertexId w = g_.other_end(e, v);
                    if (!queued[w]) {
                        queued[w] = 1;
                        q.push_back(w);
                    }
                }
            }
        }
        cls_.assign(static_cast<std::size_t>(n), -1);
        hint_ = hint;
        nodes_left_ = node_budget;
        found_.reset();
        descend(0);
        return found_;
    }

    std::int64_t checks() const { return checks_; }

private:
    bool viable(VertexId v) const {
        if (cls_[v] < 0) return true;
        int need = cls_[v] ? k_ : k_ - 1;
        int have = 0;
        for (EdgeId e : g_.incident(v)) {
            int c = cls_[g_.other_end(e, v)];
            if (c < 0 || c == cls_[v]) ++have;
        }
        return have >= need;
    }

    bool descend(std::size_t depth) {
        if (nodes_left_-- <= 0) return true;
        if (depth == order_.size()) {
            std::vector<char> cls(cls_.begin(), cls_.end());
            if (auto f = realize(cls)) {
                found_ = std::move(f);
                return true;
            }
            return false;
        }
        VertexId v = order_[depth];
        const int first = hint_[v] ? 1 : 0;
        for (int c : {first, 1 - first}) {
            cls_[v] = c;
            bool ok = viable(v);
            for (EdgeId e : g_.incident(v)) ok = ok && viable(g_.other_end(e, v));
            if (ok && descend(depth + 1)) return true;
        }
        cls_[v] = -1;
        return false;
    }

    const MultiGraph& g_;
    int k_;
    std::int64_t checks_ = 0;
    std::vector<VertexId> order_;
    std::vector<int> cls_;
    std::vector<char> hint_;
    std::int64_t nodes_left_ = 0;
    std::optional<Factor> found_;
};

struct LocalResult {
    Factor factor;
    Stage stage;
};

LocalResult solve_connected(const MultiGraph& g, int k, const RegularFactorOptions& options) {
    const int n = g.vertex_count();
    ClassSearch search(g, k);
    for (char c : {char{1}, char{0}}) {
        if (auto f = search.realize(std::vector<char>(static_cast<std::size_t>(n), c))) {
            return {std::move(*f), Stage::Direct};
        }
    }
    std::vector<char> hint(static_cast<std::size_t>(n), 0);
    if (auto seed = degree_range_factor(g, k - 1, k)) {
        if (auto f = search.repair(*seed, options.repair_rounds)) return {std::move(*f), Stage::Repair};
        auto deg = degree_profile(g, *seed);
        for (VertexId v = 0; v < n; ++v) hint[v] = deg[v] == k;
    }
    if (auto f = search.backtrack(hint, options.backtrack_nodes)) return {std::move(*f), Stage::Backtrack};
    throw SearchExhausted("no regular-component [" + std::to_string(k - 1) + "," +
                          std::to_string(k) + "]-factor found within the search budget");
}

}  // namespace

bool is_regular_component_factor(const MultiGraph& g, const Factor& f, int k) {
    try {
        validate_factor(g, f);
    } catch (const InvalidInput&) {
        return false;
    }
    auto deg = degree_profile(g, f);
    for (int d : deg) {
        if (d != k && d != k - 1) return false;
    }
    for (const auto& comp : components(g, f)) {
        for (VertexId v : comp) {
            if (deg[v] != deg[comp.front()]) return false;
        }
    }
    return true;
}

RegularComponentFactor regular_component_factor(const MultiGraph& g, int k,
                                                const RegularFactorOptions& options) {
    auto r = regular_degree(g);
    if (!r || *r < 3 || *r % 2 == 0) {
        throw InvalidInput("regular_component_factor needs an odd-regular graph of degree >= 3");
    }
    if (k < 1 || 3 * k > 2 * *r) {
        throw InvalidInput("regular_component_factor needs 1 <= k <= 2r/3 (r = " +
                           std::to_string(*r) + ", k = " + std::to_string(k) + ")");
    }

    RegularComponentFactor out;
    out.k = k;
    out.stage = Stage::Trivial;
    if (k > 1) {
        for (const auto& comp : components(g)) {
            Subgraph sub = induced_subgraph(g, comp);
            LocalResult local = solve_connected(sub.graph, k, options);
            for (EdgeId e : local.factor.edges) out.factor.edges.push_back(sub.host_edge[e]);
            out.stage = std::max(out.stage, local.stage);
        }
        std::sort(out.factor.edges.begin(), out.factor.edges.end());
    }
    if (!is_regular_component_factor(g, out.factor, k)) {
        throw std::logic_error("regular_component_factor produced an invalid factor");
    }
    auto deg = degree_profile(g, out.factor);
    out.components = components(g, out.factor);
    for (const auto& comp : out.components) out.component_degree.push_back(deg[comp.front()]);
    return out;
}

}  // namespace zsflow
