#pragma once

#include <cstdint>

#include "commkit/graph.hpp"
#include "commkit/hierclust.hpp"

namespace commkit {

/// Louvain: local moving + graph aggregation until modularity stops
/// improving. Vertex visiting order is shuffled by seed; K is data-driven.
Partition louvain(const Graph& g, std::uint64_t seed);

/// Asynchronous label propagation; ties broken uniformly at random by seed;
/// at most 100 sweeps.
Partition label_propagation(const Graph& g, std::uint64_t seed);

/// CNM-style greedy modularity: merge the community pair with the largest
/// positive delta-Q; deterministic with smallest-id tie-break.
Partition greedy_modularity(const Graph& g);

}  // namespace commkit
