#pragma once

#include <vector>

#include "commkit/graph.hpp"
#include "commkit/hierclust.hpp"

namespace commkit {

/// Chance-corrected pair-agreement between two partitions of the same vertex
/// set; 1 for identical partitions (up to relabeling), can be negative.
double adjusted_rand(const Partition& reference, const Partition& found);

/// Newman-Girvan modularity with the configuration-model null k_i k_j / 2m.
double modularity(const Graph& g, const Partition& partition);

/// Fraction of present internal edges of the induced subgraph; requires
/// |subset| >= 2.
double intra_density(const Graph& g, const std::vector<int>& subset);

/// Fraction of present crossing edges; requires 1 <= |subset| < n.
double inter_density(const Graph& g, const std::vector<int>& subset);

}  // namespace commkit
