#pragma once

#include <string>

#include "commkit/embedding.hpp"
#include "commkit/graph.hpp"
#include "commkit/hierclust.hpp"
#include "commkit/proximity.hpp"

namespace commkit {

enum class Framework { node, spectral, representation };

enum class EigPick { largest, smallest };

/// Clustering choice for a pipeline: one of the classical linkages or Genie.
struct ClusteringSpec {
    bool genie = false;
    Linkage linkage = Linkage::average;
    double gini_threshold = 0.3;

    static ClusteringSpec from_name(const std::string& name, double g);
};

Dendrogram run_clustering(const lin::Matrix& d, const ClusteringSpec& spec);

/// Measure parameters shared by the node and spectral frameworks.
struct MeasureParams {
    std::size_t k_steps = 3;
    double beta = 0.1;
    double alpha_rpr = 0.3;
    std::size_t bg_iters = 10;
    double ppmi_alpha = 1.0;
    std::size_t ppmi_len = 10;
};

ProximityMatrix compute_measure(const Graph& g, const std::string& measure,
                                const MeasureParams& params);

/// Node dissimilarity pipeline: measure -> (to_dissimilarity) -> clustering -> cut.
Partition detect_node(const Graph& g, std::size_t k, const std::string& measure,
                      const MeasureParams& params, const ClusteringSpec& clustering);

/// Spectral pipeline: similarity -> K eigenvectors -> row distances ->
/// clustering -> cut. Eigenvectors are picked by largest |lambda| by default.
Partition detect_spectral(const Graph& g, std::size_t k, const std::string& similarity,
                          const MeasureParams& params, const ClusteringSpec& clustering,
                          EigPick pick = EigPick::largest);

/// Representation pipeline: embedding -> row distances -> clustering -> cut.
Partition detect_representation(const Graph& g, std::size_t k, const std::string& method,
                                const TrainConfig& config, const ClusteringSpec& clustering);

/// Pairwise Euclidean distances between rows.
lin::Matrix row_distances(const lin::Matrix& z);

}  // namespace commkit
