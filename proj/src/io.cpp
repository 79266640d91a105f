#include "zsflow/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <vector>

namespace zsflow {

namespace {

std::string_view trim(std::string_view s) {
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

std::vector<long long> parse_ints(std::string_view line, int line_no) {
    std::vector<long long> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        long long value = 0;
        auto token = line.substr(i, j - i);
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
            throw ParseError("expected an integer, got '" + std::string(token) + "'", line_no);
        }
        out.push_back(value);
        i = j;
    }
    return out;
}

}  // namespace

MultiGraph parse_graph6(std::string_view text) {
    std::string_view line;
    int line_no = 0;
    for (auto raw : split_lines(text)) {
        ++line_no;
        line = trim(raw);
        if (!line.empty()) break;
    }
    if (line.empty()) throw ParseError("empty graph6 input", line_no == 0 ? 1 : line_no);
    if (line.starts_with(">>graph6<<")) line.remove_prefix(10);

    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= line.size()) throw ParseError("truncated graph6 data", line_no);
        int c = static_cast<unsigned char>(line[pos++]);
        if (c < 63 || c > 126) throw ParseError("invalid graph6 byte", line_no);
        return c - 63;
    };

    long long n = 0;
    int first = next();
    if (first < 63) {
        n = first;
    } else {
        int second = next();
        if (second < 63) {
            n = second;
            for (int i = 0; i < 2; ++i) n = (n << 6) | next();
        } else {
            for (int i = 0; i < 6; ++i) n = (n << 6) | next();
        }
    }
    if (n > 1'000'000) throw ParseError("graph6 vertex count too large", line_no);

    std::vector<Edge> edges;
    int chunk = 0;
    int remaining = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (remaining == 0) {
                chunk = next();
                remaining = 6;
            }
            --remaining;
            if ((chunk >> remaining) & 1) edges.push_back({u, v});
        }
    }
    if (pos != line.size()) throw ParseError("trailing bytes after graph6 data", line_no);
    return MultiGraph(static_cast<int>(n), std::move(edges));
}

std::string write_graph6(const MultiGraph& g) {
    const int n = g.vertex_count();
    std::set<std::pair<int, int>> adj;
    for (const Edge& e : g.edges()) {
        if (!adj.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second) {
            throw InvalidInput("graph6 cannot encode parallel edges");
        }
    }
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift : {30, 24, 18, 12, 6, 0}) {
            out.push_back(static_cast<char>(((static_cast<long long>(n) >> shift) & 63) + 63));
        }
    }
    int chunk = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            chunk = (chunk << 1) | (adj.count({u, v}) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
    return out;
}

MultiGraph parse_edge_list(std::string_view text) {
    bool have_header = false;
    long long n = 0, m = 0;
    int header_line = 0;
    std::vector<Edge> edges;
    int line_no = 0;
    for (auto raw : split_lines(text)) {
        ++line_no;
        auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        auto nums = parse_ints(line, line_no);
        if (nums.size() != 2) throw ParseError("expected two integers", line_no);
        if (!have_header) {
            n = nums[0];
            m = nums[1];
            if (n < 0 || m < 0 || n > 10'000'000) throw ParseError("invalid header counts", line_no);
            have_header = true;
            header_line = line_no;
            continue;
        }
        if (static_cast<long long>(edges.size()) == m) {
            throw ParseError("more edge lines than the header's m = " + std::to_string(m), line_no);
        }
        auto u = nums[0], v = nums[1];
        if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError("vertex out of range", line_no);
        if (u == v) throw ParseError("loop at vertex " + std::to_string(u), line_no);
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    if (!have_header) throw ParseError("missing 'n m' header", line_no == 0 ? 1 : line_no);
    if (static_cast<long long>(edges.size()) != m) {
        throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                             std::to_string(edges.size()),
                         header_line);
    }
    return MultiGraph(static_cast<int>(n), std::move(edges));
}

std::string write_edge_list(const MultiGraph& g) {
    std::ostringstream os;
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
    return os.str();
}

}  // namespace zsflow
