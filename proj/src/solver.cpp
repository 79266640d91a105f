#include "zsflow/solver.hpp"

#include <cstdlib>
#include <cstring>
#include <string>
#include <unordered_set>

namespace zsflow {

namespace {

// Upper bound on remembered dead states, keeping memory bounded on wide
// frontiers. Reaching it only stops further insertions.
constexpr std::size_t kMaxDeadStates = std::size_t{1} << 20;

class FlowSearch {
public:
    FlowSearch(const MultiGraph& g, int k, std::uint64_t budget)
        : g_(g), k_(k), budget_(budget),
          value_(static_cast<std::size_t>(g.edge_count()), 0),
          open_(static_cast<std::size_t>(g.vertex_count())),
          sum_(static_cast<std::size_t>(g.vertex_count()), 0) {
        for (VertexId v = 0; v < g.vertex_count(); ++v) open_[v] = g.degree(v);
        for (int a = 1; a < k; ++a) {
            alphabet_.push_back(a);
            alphabet_.push_back(-a);
        }
    }

    SearchOutcome run() {
        SearchOutcome out;
        out.budget = budget_;
        bool feasible_start = true;
        for (VertexId v = 0; v < g_.vertex_count(); ++v) feasible_start &= feasible(v);
        const bool found = feasible_start && descend();
        out.nodes = nodes_;
        if (found) {
            out.status = SearchStatus::Found;
            out.flow = IntFlow{k_, value_};
        } else if (aborted_) {
            out.status = SearchStatus::Undecided;
        } else {
            out.status = SearchStatus::Nonexistent;
            out.exhausted = true;
        }
        return out;
    }

private:
    // Whether open_[v] more nonzero values in [-(k-1), k-1] can cancel sum_[v].
    bool feasible(VertexId v) const {
        const long long c = open_[v];
        const long long s = sum_[v];
        const long long top = k_ - 1;
        if (c == 0) return s == 0;
        if (c == 1) return s != 0 && std::llabs(s) <= top;
        if (k_ == 2) return std::llabs(s) <= c && (s + c) % 2 == 0;
        return std::llabs(s) <= c * top;
    }

    void assign(EdgeId e, int x) {
        const Edge& ed = g_.edge(e);
        value_[e] = x;
        --open_[ed.u];
        --open_[ed.v];
        sum_[ed.u] += x;
        sum_[ed.v] += x;
        ++assigned_;
    }

    void unassign(EdgeId e) {
        const Edge& ed = g_.edge(e);
        const int x = value_[e];
        value_[e] = 0;
        ++open_[ed.u];
        ++open_[ed.v];
        sum_[ed.u] -= x;
        sum_[ed.v] -= x;
        --assigned_;
    }

    bool try_value(EdgeId e, int x) {
        if (nodes_ >= budget_) {
            aborted_ = true;
            return false;
        }
        ++nodes_;
        assign(e, x);
        const Edge& ed = g_.edge(e);
        if (feasible(ed.u) && feasible(ed.v) && descend()) return true;
        unassign(e);
        return false;
    }

    // The branching edge depends only on which edges are assigned, and that set
    // is the same at every node of a given depth. A depth plus the sums at
    // partially assigned vertices therefore determines the whole subproblem.
    std::string state_key() const {
        std::string key;
        key.reserve(64);
        auto put = [&key](long long x) {
            char buf[sizeof x];
            std::memcpy(buf, &x, sizeof x);
            key.append(buf, sizeof x);
        };
        put(assigned_);
        for (VertexId v = 0; v < g_.vertex_count(); ++v) {
            if (open_[v] > 0 && open_[v] < g_.degree(v)) put(sum_[v]);
        }
        return key;
    }

    bool descend() {
        if (assigned_ == 0) return branch();
        std::string key = state_key();
        if (dead_.count(key)) return false;
        if (branch()) return true;
        if (!aborted_ && dead_.size() < kMaxDeadStates) dead_.insert(std::move(key));
        return false;
    }

    bool branch() {
        VertexId pick = -1;
        for (VertexId v = 0; v < g_.vertex_count(); ++v) {
            if (open_[v] > 0 && (pick < 0 || open_[v] < open_[pick])) pick = v;
        }
        if (pick < 0) return true;

        EdgeId e = -1;
        for (EdgeId cand : g_.incident(pick)) {
            if (value_[cand] == 0) {
                e = cand;
                break;
            }
        }
        if (open_[pick] == 1) {
            // Feasibility already guarantees the forced value is admissible.
            return try_value(e, static_cast<int>(-sum_[pick]));
        }
        const bool first_branch = assigned_ == 0;
        for (int x : alphabet_) {
            if (first_branch && x < 0) continue;
            if (try_value(e, x)) return true;
            if (aborted_) return false;
        }
        return false;
    }

    const MultiGraph& g_;
    int k_;
    std::uint64_t budget_;
    std::vector<int> alphabet_;
    std::vector<int> value_;
    std::vector<int> open_;
    std::vector<long long> sum_;
    int assigned_ = 0;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::unordered_set<std::string> dead_;
};

}  // namespace

SearchOutcome solve(const MultiGraph& g, int k, std::uint64_t budget) {
    if (k < 2) throw InvalidInput("solve needs k >= 2");
    return FlowSearch(g, k, budget).run();
}

FlowNumber flow_number(const MultiGraph& g, int k_max, std::uint64_t budget) {
    if (k_max < 2) throw InvalidInput("flow_number needs k_max >= 2");
    FlowNumber out;
    for (int k = 2; k <= k_max; ++k) {
        out.attempts.push_back(solve(g, k, budget));
        const SearchOutcome& last = out.attempts.back();
        if (last.status == SearchStatus::Found) {
            out.status = SearchStatus::Found;
            out.k = k;
            return out;
        }
        if (last.status == SearchStatus::Undecided) {
            out.status = SearchStatus::Undecided;
            return out;
        }
    }
    out.status = SearchStatus::Nonexistent;
    return out;
}

CrossCheck cross_check(const MultiGraph& g, const IntFlow& constructed, std::uint64_t budget) {
    auto report = verify(g, constructed, constructed.k);
    if (!report.pass) {
        throw InvalidInput("cross_check needs a verified flow: " + report.first_violation->describe());
    }
    CrossCheck out;
    out.claimed_k = constructed.k;
    bool all_refuted = true;
    for (int k = 2; k <= constructed.k; ++k) {
        out.attempts.push_back(solve(g, k, budget));
        const SearchOutcome& last = out.attempts.back();
        if (last.status == SearchStatus::Found) {
            out.smallest_found = k;
            out.minimum_certified = all_refuted;
            out.smaller_found = k < constructed.k;
            break;
        }
        if (last.status == SearchStatus::Undecided) all_refuted = false;
        if (k == constructed.k && last.status == SearchStatus::Nonexistent) out.consistent = false;
    }
    return out;
}

std::string to_string(SearchStatus status) {
    switch (status) {
        case SearchStatus::Found: return "found";
        case SearchStatus::Nonexistent: return "nonexistent";
        case SearchStatus::Undecided: return "undecided";
    }
    return "unknown";
}

}  // namespace zsflow
