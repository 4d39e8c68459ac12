#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "commkit/graph.hpp"
#include "commkit/hierclust.hpp"

namespace commkit {

struct SbmSpec {
    std::size_t n_clusters;
    std::size_t vertices_per_cluster;
    double p_in;
    double p_out;
    std::uint64_t seed;

    std::string id() const;
};

struct LabeledGraph {
    Graph graph;
    Partition ground_truth;
};

/// Planted-partition stochastic block model; each intra-block pair gets an
/// edge with probability p_in, inter-block pairs with p_out. Deterministic
/// under seed.
LabeledGraph generate_sbm(const SbmSpec& spec);

/// Full benchmark grid {3,4,5,10} clusters x {5,10,20} vertices x
/// {0.4..0.9} in-density x {0.05,0.1,0.2,0.3} out-density x 10 seeds
/// (2880 specs). Seeds are derived deterministically from grid coordinates.
std::vector<SbmSpec> benchmark_grid();

/// Same grid with a single seed per parameter cell (288 specs).
std::vector<SbmSpec> benchmark_grid_small();

/// Bundled datasets: "karate" (with 2-community ground truth) and
/// "dolphins" (graph only).
Graph load_builtin(const std::string& name);
std::optional<Partition> builtin_ground_truth(const std::string& name);

}  // namespace commkit
