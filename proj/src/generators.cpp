#include "zsflow/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

namespace zsflow {

namespace {

constexpr int kMaxRestarts = 10'000;

}  // namespace

MultiGraph path(int n) {
    if (n < 1) throw InvalidInput("path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return MultiGraph(n, std::move(edges));
}

MultiGraph cycle(int n) {
    if (n < 3) throw InvalidInput("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return MultiGraph(n, std::move(edges));
}

MultiGraph complete(int n) {
    if (n < 1) throw InvalidInput("complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return MultiGraph(n, std::move(edges));
}

MultiGraph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw InvalidInput("complete bipartite graph needs both sides >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
    return MultiGraph(a + b, std::move(edges));
}

MultiGraph petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});
    for (int i = 0; i < 5; ++i) edges.push_back({i, i + 5});
    for (int i = 0; i < 5; ++i) edges.push_back({5 + i, 5 + (i + 2) % 5});
    return MultiGraph(10, std::move(edges));
}

MultiGraph circulant(int n, std::span<const int> offsets) {
    if (n < 2) throw InvalidInput("circulant needs n >= 2");
    std::set<int> classes;
    for (int o : offsets) {
        int r = ((o % n) + n) % n;
        if (r == 0) throw InvalidInput("circulant offset " + std::to_string(o) + " is 0 mod n");
        int cls = std::min(r, n - r);
        if (!classes.insert(cls).second) {
            throw InvalidInput("circulant offset " + std::to_string(o) + " repeats another offset");
        }
    }
    std::vector<Edge> edges;
    for (int o : offsets) {
        int r = ((o % n) + n) % n;
        int count = (2 * r == n) ? n / 2 : n;
        for (int i = 0; i < count; ++i) edges.push_back({i, (i + r) % n});
    }
    return MultiGraph(n, std::move(edges));
}

// Pairing model. Points are paired one random pair at a time; a pair that
// would create a loop or a parallel edge is redrawn, and the whole pairing
// restarts only when no admissible pair remains among the free points.
MultiGraph random_regular(int n, int r, std::uint64_t seed) {
    if (n < 1 || r < 0) throw InvalidInput("random_regular needs n >= 1, r >= 0");
    if ((static_cast<long long>(n) * r) % 2 != 0) {
        throw InvalidInput("random_regular: n*r must be even");
    }
    if (r >= n) throw InvalidInput("random_regular: a simple r-regular graph needs r < n");

    std::mt19937_64 rng(seed);
    const int points = n * r;
    for (int attempt = 0; attempt < kMaxRestarts; ++attempt) {
        std::vector<int> free_points(static_cast<std::size_t>(points));
        for (int p = 0; p < points; ++p) free_points[p] = p / r;  // point -> owner vertex
        std::set<std::pair<int, int>> present;
        std::vector<Edge> edges;
        bool stuck = false;

        while (!free_points.empty() && !stuck) {
            const auto size = free_points.size();
            bool placed = false;
            for (int tries = 0; tries < 64 && !placed; ++tries) {
                std::uniform_int_distribution<std::size_t> pick(0, size - 1);
                std::size_t i = pick(rng);
                std::size_t j = pick(rng);
                if (i == j) continue;
                int u = free_points[i];
                int v = free_points[j];
                if (u == v || present.count({std::min(u, v), std::max(u, v)})) continue;
                present.insert({std::min(u, v), std::max(u, v)});
                edges.push_back({std::min(u, v), std::max(u, v)});
                if (i < j) std::swap(i, j);
                free_points.erase(free_points.begin() + static_cast<std::ptrdiff_t>(i));
                free_points.erase(free_points.begin() + static_cast<std::ptrdiff_t>(j));
                placed = true;
            }
            if (placed) continue;
            // Many redraws failed; check whether any admissible pair is left.
            bool admissible = false;
            for (std::size_t i = 0; i < size && !admissible; ++i)
                for (std::size_t j = i + 1; j < size && !admissible; ++j) {
                    int u = free_points[i];
                    int v = free_points[j];
                    admissible = u != v && !present.count({std::min(u, v), std::max(u, v)});
                }
            stuck = !admissible;
        }
        if (stuck) continue;
        std::sort(edges.begin(), edges.end(),
                  [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
        return MultiGraph(n, std::move(edges));
    }
    throw InvalidInput("random_regular: restart limit reached");
}

MultiGraph cubic_no_pm() {
    std::vector<Edge> edges;
    const int center = 15;
    for (int g = 0; g < 3; ++g) {
        // a, b, c, d span a K4 whose edge ab is subdivided by s.
        const int a = 5 * g, b = a + 1, c = a + 2, d = a + 3, s = a + 4;
        edges.push_back({a, s});
        edges.push_back({s, b});
        edges.push_back({a, c});
        edges.push_back({a, d});
        edges.push_back({b, c});
        edges.push_back({b, d});
        edges.push_back({c, d});
    }
    for (int g = 0; g < 3; ++g) edges.push_back({5 * g + 4, center});
    return MultiGraph(16, std::move(edges));
}

}  // namespace zsflow
