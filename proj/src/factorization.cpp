#include "zsflow/factorization.hpp"

#include <algorithm>

#include "zsflow/matching.hpp"

namespace zsflow {

Orientation euler_orientation(const MultiGraph& g) {
    const int n = g.vertex_count();
    for (VertexId v = 0; v < n; ++v) {
        if (g.degree(v) % 2 != 0) {
            throw InvalidInput("vertex " + std::to_string(v) + " has odd degree " +
                                   std::to_string(g.degree(v)),
                               v);
        }
    }
    Orientation out{std::vector<VertexId>(static_cast<std::size_t>(g.edge_count()), -1)};
    std::vector<char> used(static_cast<std::size_t>(g.edge_count()), 0);
    std::vector<std::size_t> cursor(static_cast<std::size_t>(n), 0);
    std::vector<VertexId> stack;

    // Each forward step of Hierholzer's walk fixes the direction of one edge.
    // Every sub-walk is closed because all degrees are even.
    for (VertexId start = 0; start < n; ++start) {
        if (cursor[start] == static_cast<std::size_t>(g.degree(start))) continue;
        stack.push_back(start);
        while (!stack.empty()) {
            VertexId v = stack.back();
            auto inc = g.incident(v);
            while (cursor[v] < inc.size() && used[inc[cursor[v]]]) ++cursor[v];
            if (cursor[v] == inc.size()) {
                stack.pop_back();
                continue;
            }
            EdgeId e = inc[cursor[v]++];
            used[e] = 1;
            out.tail[e] = v;
            stack.push_back(g.other_end(e, v));
        }
    }
    return out;
}

TwoFactorization two_factorization(const MultiGraph& g) {
    auto r = regular_degree(g);
    if (!r || *r < 2 || *r % 2 != 0) {
        throw InvalidInput("two_factorization needs an even-regular graph of degree >= 2");
    }
    const int n = g.vertex_count();
    const Orientation orient = euler_orientation(g);

    // Vertex v splits into v (outgoing side) and n + v (incoming side).
    std::vector<Edge> split;
    split.reserve(static_cast<std::size_t>(g.edge_count()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        split.push_back({orient.tail[e], n + orient.head(g, e)});
    }
    MultiGraph bip(2 * n, std::move(split));
    std::vector<int> side(static_cast<std::size_t>(2 * n), 0);
    std::fill(side.begin() + n, side.end(), 1);

    auto matchings = regular_bipartite_pm_decomposition(bip, side, *r / 2);
    TwoFactorization out;
    for (auto& m : matchings) out.factors.push_back(Factor{std::move(m.edges)});
    std::sort(out.factors.begin(), out.factors.end(),
              [](const Factor& a, const Factor& b) { return a.edges.front() < b.edges.front(); });
    if (!is_two_factorization(g, out)) {
        throw std::logic_error("two_factorization produced an invalid decomposition");
    }
    return out;
}

bool is_two_factorization(const MultiGraph& g, const TwoFactorization& tf) {
    std::vector<int> owner(static_cast<std::size_t>(g.edge_count()), -1);
    for (std::size_t i = 0; i < tf.factors.size(); ++i) {
        const Factor& f = tf.factors[i];
        for (EdgeId e : f.edges) {
            if (e < 0 || e >= g.edge_count() || owner[e] != -1) return false;
            owner[e] = static_cast<int>(i);
        }
        auto deg = degree_profile(g, f);
        if (std::any_of(deg.begin(), deg.end(), [](int d) { return d != 2; })) return false;
    }
    return std::none_of(owner.begin(), owner.end(), [](int o) { return o == -1; });
}

std::string to_string(RegularComponentFactor::Stage stage) {
    switch (stage) {
        case RegularComponentFactor::Stage::Trivial: return "trivial";
        case RegularComponentFactor::Stage::Direct: return "direct";
        case RegularComponentFactor::Stage::Repair: return "repair";
        case RegularComponentFactor::Stage::Backtrack: return "backtrack";
    }
    return "unknown";
}

}  // namespace zsflow
