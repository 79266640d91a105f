#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zsflow/flow.hpp"
#include "zsflow/graph.hpp"

namespace zsflow {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

enum class SearchStatus { Found, Nonexistent, Undecided };

struct SearchOutcome {
    SearchStatus status = SearchStatus::Undecided;
    std::optional<IntFlow> flow;
    std::uint64_t nodes = 0;   // value assignments tried
    std::uint64_t budget = 0;
    bool exhausted = false;    // the whole search space was explored
};

// Backtracking search for a zero-sum k-flow (k >= 2). Branches on an edge at
// the vertex with fewest unassigned edges; a vertex's last edge is forced.
// Values are tried 1, -1, 2, -2, ...; the first branching edge only takes
// positive values. Failed subproblems are remembered by depth and partial
// vertex sums. Deterministic, including the node count.
SearchOutcome solve(const MultiGraph& g, int k, std::uint64_t budget = kDefaultBudget);

struct FlowNumber {
    SearchStatus status = SearchStatus::Undecided;  // Found: `k` holds the minimum
    std::optional<int> k;
    std::vector<SearchOutcome> attempts;  // one per k tried, starting at 2
};

// Smallest k <= k_max with a zero-sum k-flow. Nonexistent when every k up to
// k_max was refuted; Undecided as soon as one attempt runs out of budget.
// The budget applies to each attempt separately.
FlowNumber flow_number(const MultiGraph& g, int k_max, std::uint64_t budget = kDefaultBudget);

struct CrossCheck {
    int claimed_k = 0;
    std::vector<SearchOutcome> attempts;  // k = 2, 3, ... up to the first success
    std::optional<int> smallest_found;
    bool minimum_certified = false;  // every k below smallest_found was refuted
    bool consistent = true;          // the solver did not refute the claimed k
    bool smaller_found = false;      // a flow with smaller k exists
};

// Runs the solver for k = 2 .. claimed k, stopping at the first flow found.
// Unlike flow_number an undecided attempt does not stop the scan, so the
// claimed k itself always gets an attempt unless a smaller k succeeds.
CrossCheck cross_check(const MultiGraph& g, const IntFlow& constructed,
                       std::uint64_t budget = kDefaultBudget);

std::string to_string(SearchStatus status);

}  // namespace zsflow
