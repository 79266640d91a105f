#include "zsflow/flow.hpp"
#include "zsflow/solver.hpp"

namespace zsflow {

std::string to_string(ConstructStatus status) {
    switch (status) {
        case ConstructStatus::Verified: return "verified";
        case ConstructStatus::Undecided: return "undecided";
        case ConstructStatus::Nonexistent: return "nonexistent";
    }
    return "unknown";
}

Construction construct(const MultiGraph& g, const ConstructOptions& options) {
    auto r = regular_degree(g);
    if (!r) throw InvalidInput("input graph is not regular");
    if (*r < 3) throw UnsupportedDegree("regular degree " + std::to_string(*r) + " is below 3");

    Construction out;
    out.degree = *r;
    const bool by_search = *r == 3 || *r == 5;
    const int k = *r % 2 == 0 ? 3 : 5;
    if (*r % 2 == 0) {
        out.method = "even-regular two-factor alternation";
    } else if (*r == 7) {
        out.method = "[3,4]-factor weighting";
    } else if (!by_search) {
        out.method = "[k-1,k]-factor weighting";
    } else {
        out.method = "exact search";
    }

    IntFlow total{k, std::vector<int>(static_cast<std::size_t>(g.edge_count()), 0)};
    ConstructStatus status = ConstructStatus::Verified;
    for (const auto& comp : components(g)) {
        Subgraph sub = induced_subgraph(g, comp);
        IntFlow local;
        if (!by_search) {
            if (*r % 2 == 0) {
                local = flow_even_regular(sub.graph);
            } else if (*r == 7) {
                local = flow_7_regular(sub.graph);
            } else {
                local = flow_odd_regular(sub.graph);
            }
        } else {
            SearchOutcome res = solve(sub.graph, k, options.solver_budget);
            out.solver_nodes += res.nodes;
            if (res.status != SearchStatus::Found) {
                // Nonexistent dominates: it is a definite answer for the whole graph.
                if (res.status == SearchStatus::Nonexistent) {
                    status = ConstructStatus::Nonexistent;
                    break;
                }
                status = ConstructStatus::Undecided;
                continue;
            }
            local = std::move(*res.flow);
        }
        for (EdgeId e = 0; e < sub.graph.edge_count(); ++e) {
            total.values[sub.host_edge[e]] = local.values[e];
        }
    }

    out.status = status;
    if (status == ConstructStatus::Verified) {
        auto report = verify(g, total, k);
        if (!report.pass) {
            throw std::logic_error("construct assembled an invalid flow: " +
                                   report.first_violation->describe());
        }
        out.flow = std::move(total);
    }
    return out;
}

}  // namespace zsflow
