#include "zsflow/flow.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "zsflow/factorization.hpp"
#include "zsflow/io.hpp"

namespace zsflow {

std::string FlowViolation::describe() const {
    switch (kind) {
        case Kind::ZeroValue: return "zero value at edge " + std::to_string(where);
        case Kind::OutOfRange:
            return "value " + std::to_string(amount) + " out of range at edge " + std::to_string(where);
        case Kind::NonzeroSum:
            return "nonzero sum " + std::to_string(amount) + " at vertex " + std::to_string(where);
    }
    return "unknown violation";
}

FlowReport verify(const MultiGraph& g, const IntFlow& f, int k) {
    if (static_cast<int>(f.values.size()) != g.edge_count()) {
        throw InvalidInput("flow has " + std::to_string(f.values.size()) + " values for " +
                           std::to_string(g.edge_count()) + " edges");
    }
    FlowReport report;
    report.vertex_sums.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const int value = f.values[e];
        report.max_abs = std::max(report.max_abs, std::abs(value));
        report.vertex_sums[g.edge(e).u] += value;
        report.vertex_sums[g.edge(e).v] += value;
        if (report.first_violation) continue;
        if (value == 0) {
            report.first_violation = FlowViolation{FlowViolation::Kind::ZeroValue, e, 0};
        } else if (std::abs(value) > k - 1) {
            report.first_violation = FlowViolation{FlowViolation::Kind::OutOfRange, e, value};
        }
    }
    for (VertexId v = 0; v < g.vertex_count() && !report.first_violation; ++v) {
        if (report.vertex_sums[v] != 0) {
            report.first_violation =
                FlowViolation{FlowViolation::Kind::NonzeroSum, v, report.vertex_sums[v]};
        }
    }
    report.pass = !report.first_violation;
    return report;
}

std::vector<int> lemma_qr(const MultiGraph& g, int q) {
    auto r = regular_degree(g);
    if (!r || *r < 1) throw InvalidInput("lemma_qr needs a regular graph of degree >= 1");
    if (q % 2 != 0) throw InvalidInput("lemma_qr target q must be even");
    if (q < 2 * *r || q > 4 * *r) {
        throw InvalidInput("lemma_qr target q must lie in [2r, 4r]");
    }
    const int m = g.edge_count();
    const int excess = q - 2 * *r;
    std::vector<int> values(static_cast<std::size_t>(m), 0);

    if (*r % 2 != 0) {
        // Doubled graph is 2r-regular; r factors, the first excess/2 carry 2.
        DoubledGraph doubled = double_edges(g);
        TwoFactorization tf = two_factorization(doubled.graph);
        std::vector<int> half(static_cast<std::size_t>(2 * m), 0);
        for (std::size_t i = 0; i < tf.factors.size(); ++i) {
            const int g_value = static_cast<int>(i) + 1 <= excess / 2 ? 2 : 1;
            for (EdgeId e : tf.factors[i].edges) half[e] = g_value;
        }
        for (EdgeId e = 0; e < m; ++e) values[e] = half[e] + half[doubled.partner[e]];
    } else {
        TwoFactorization tf = two_factorization(g);
        const int fours = excess / 4;
        const int threes = (excess % 4 == 2) ? 1 : 0;
        for (std::size_t i = 0; i < tf.factors.size(); ++i) {
            const int idx = static_cast<int>(i) + 1;
            const int value = idx <= fours ? 4 : (idx <= fours + threes ? 3 : 2);
            for (EdgeId e : tf.factors[i].edges) values[e] = value;
        }
    }
    return values;
}

namespace {

void require_verified(const MultiGraph& g, const IntFlow& f, const char* who) {
    auto report = verify(g, f, f.k);
    if (!report.pass) {
        throw std::logic_error(std::string(who) + " built an invalid flow: " +
                               report.first_violation->describe());
    }
}

// Splits a regular-component factor into the edges of its (k-1)-regular and
// its k-regular components.
std::pair<std::vector<EdgeId>, std::vector<EdgeId>> split_by_component_degree(
    const MultiGraph& g, const RegularComponentFactor& h) {
    std::vector<int> comp_degree(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t c = 0; c < h.components.size(); ++c)
        for (VertexId v : h.components[c]) comp_degree[v] = h.component_degree[c];
    std::vector<EdgeId> low, high;
    for (EdgeId e : h.factor.edges) {
        (comp_degree[g.edge(e).u] == h.k ? high : low).push_back(e);
    }
    return {low, high};
}

void apply_lemma(const MultiGraph& g, std::span<const EdgeId> edges, int q, IntFlow& f) {
    if (edges.empty()) return;
    Subgraph sub = edge_subgraph(g, edges);
    auto w = lemma_qr(sub.graph, q);
    for (EdgeId e = 0; e < sub.graph.edge_count(); ++e) f.values[sub.host_edge[e]] = w[e];
}

}  // namespace

IntFlow flow_even_regular(const MultiGraph& g) {
    auto r = regular_degree(g);
    if (!r || *r % 2 != 0 || *r < 4) {
        throw UnsupportedDegree("flow_even_regular needs an even-regular graph with r >= 4");
    }
    TwoFactorization tf = two_factorization(g);
    const int s = static_cast<int>(tf.factors.size());
    std::vector<int> factor_value;
    if (s % 2 != 0) factor_value = {2, -1, -1};
    while (static_cast<int>(factor_value.size()) < s) {
        factor_value.push_back(1);
        factor_value.push_back(-1);
    }
    IntFlow f{3, std::vector<int>(static_cast<std::size_t>(g.edge_count()), 0)};
    for (int i = 0; i < s; ++i)
        for (EdgeId e : tf.factors[i].edges) f.values[e] = factor_value[i];
    require_verified(g, f, "flow_even_regular");
    return f;
}

IntFlow flow_7_regular(const MultiGraph& g) {
    auto r = regular_degree(g);
    if (!r || *r != 7) throw UnsupportedDegree("flow_7_regular needs a 7-regular graph");

    RegularComponentFactor h = regular_component_factor(g, 4);
    auto [cubic_part, quartic_part] = split_by_component_degree(g, h);

    IntFlow f{5, std::vector<int>(static_cast<std::size_t>(g.edge_count()), -2)};
    apply_lemma(g, cubic_part, 8, f);
    if (!quartic_part.empty()) {
        Subgraph sub = edge_subgraph(g, quartic_part);
        TwoFactorization tf = two_factorization(sub.graph);
        // Factor 0 holds the smallest edge id and gets value 1.
        for (std::size_t i = 0; i < tf.factors.size(); ++i)
            for (EdgeId e : tf.factors[i].edges) f.values[sub.host_edge[e]] = i == 0 ? 1 : 2;
    }
    require_verified(g, f, "flow_7_regular");
    return f;
}

IntFlow flow_odd_regular(const MultiGraph& g) {
    auto r = regular_degree(g);
    if (!r || *r % 2 == 0 || *r < 9) {
        throw UnsupportedDegree("flow_odd_regular needs an odd-regular graph with r >= 9");
    }
    const int k = 2 * *r / 3;
    const int rest = *r - k;
    if (!(k <= 2 * rest && 2 * rest <= 2 * k - 4)) {
        throw std::logic_error("degree split k <= 2k' <= 2k-4 does not hold");
    }

    RegularComponentFactor h = regular_component_factor(g, k);
    auto [low_part, high_part] = split_by_component_degree(g, h);

    // Low vertices see rest + 1 edges at -4, high vertices rest.
    IntFlow f{5, std::vector<int>(static_cast<std::size_t>(g.edge_count()), -4)};
    apply_lemma(g, low_part, 4 * rest + 4, f);
    apply_lemma(g, high_part, 4 * rest, f);
    require_verified(g, f, "flow_odd_regular");
    return f;
}

std::string write_flow(const MultiGraph& g, const IntFlow& f) {
    if (static_cast<int>(f.values.size()) != g.edge_count()) {
        throw InvalidInput("flow does not cover the graph's edges");
    }
    std::ostringstream os;
    os << f.k << ' ' << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        os << e << ' ' << g.edge(e).u << ' ' << g.edge(e).v << ' ' << f.values[e] << '\n';
    }
    return os.str();
}

ParsedFlow parse_flow(std::string_view text) {
    ParsedFlow out;
    bool have_header = false;
    long long m = 0;
    int header_line = 1;
    int line_no = 0;
    std::vector<char> seen;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos || raw[first] == '#') continue;
        std::istringstream ls(raw);
        std::vector<long long> nums;
        std::string tok;
        while (ls >> tok) {
            long long value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc() || ptr != tok.data() + tok.size()) {
                throw ParseError("expected an integer, got '" + tok + "'", line_no);
            }
            nums.push_back(value);
        }
        if (!have_header) {
            if (nums.size() != 3) throw ParseError("expected header 'k n m'", line_no);
            if (nums[0] < 2 || nums[1] < 0 || nums[2] < 0 || nums[2] > 100'000'000) {
                throw ParseError("invalid flow header", line_no);
            }
            out.flow.k = static_cast<int>(nums[0]);
            out.n = static_cast<int>(nums[1]);
            m = nums[2];
            out.flow.values.assign(static_cast<std::size_t>(m), 0);
            out.edges.assign(static_cast<std::size_t>(m), Edge{-1, -1});
            seen.assign(static_cast<std::size_t>(m), 0);
            have_header = true;
            header_line = line_no;
            continue;
        }
        if (nums.size() != 4) throw ParseError("expected 'edge_id u v value'", line_no);
        const long long e = nums[0];
        if (e < 0 || e >= m) throw ParseError("edge id out of range", line_no);
        if (seen[e]) throw ParseError("edge id " + std::to_string(e) + " listed twice", line_no);
        if (nums[1] < 0 || nums[1] >= out.n || nums[2] < 0 || nums[2] >= out.n) {
            throw ParseError("vertex out of range", line_no);
        }
        if (nums[3] < -1'000'000'000 || nums[3] > 1'000'000'000) {
            throw ParseError("flow value out of range", line_no);
        }
        seen[e] = 1;
        out.edges[e] = {static_cast<int>(nums[1]), static_cast<int>(nums[2])};
        out.flow.values[e] = static_cast<int>(nums[3]);
    }
    if (!have_header) throw ParseError("missing 'k n m' header", line_no == 0 ? 1 : line_no);
    auto missing = std::find(seen.begin(), seen.end(), 0);
    if (missing != seen.end()) {
        throw ParseError("no value for edge " + std::to_string(missing - seen.begin()), header_line);
    }
    return out;
}

IntFlow parse_flow(std::string_view text, const MultiGraph& g) {
    ParsedFlow parsed = parse_flow(text);
    if (parsed.n != g.vertex_count() || static_cast<int>(parsed.edges.size()) != g.edge_count()) {
        throw InvalidInput("flow header (n=" + std::to_string(parsed.n) +
                           ", m=" + std::to_string(parsed.edges.size()) +
                           ") does not match the graph (n=" + std::to_string(g.vertex_count()) +
                           ", m=" + std::to_string(g.edge_count()) + ")");
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& a = parsed.edges[e];
        const Edge& b = g.edge(e);
        if (!((a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u))) {
            throw InvalidInput("flow edge " + std::to_string(e) + " has different endpoints", e);
        }
    }
    return parsed.flow;
}

}  // namespace zsflow
