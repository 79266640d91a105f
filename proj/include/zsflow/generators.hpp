#pragma once

#include <cstdint>
#include <span>

#include "zsflow/graph.hpp"

namespace zsflow {

MultiGraph path(int n);
MultiGraph cycle(int n);
MultiGraph complete(int n);
MultiGraph complete_bipartite(int a, int b);
MultiGraph petersen();

// Vertex i joins i+o (mod n) for every offset o. An offset with 2o = n
// contributes one edge per vertex, any other offset two.
MultiGraph circulant(int n, std::span<const int> offsets);

// Simple r-regular graph from the pairing model. Deterministic in
// (n, r, seed); throws InvalidInput on n*r odd or r >= n.
MultiGraph random_regular(int n, int r, std::uint64_t seed);

// 16-vertex cubic graph without a perfect matching: three copies of K4 with
// one edge subdivided, the subdivision vertices joined to a common center.
MultiGraph cubic_no_pm();

}  // namespace zsflow
