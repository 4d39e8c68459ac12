#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "commkit/graph.hpp"
#include "commkit/linalg.hpp"

namespace commkit {

enum class ProximityKind { similarity, dissimilarity };

/// Dense pairwise node similarity or dissimilarity matrix, tagged with the
/// generating measure and its parameters.
struct ProximityMatrix {
    lin::Matrix matrix;
    ProximityKind kind;
    std::string measure;
    std::map<std::string, double> params;
};

// The eight node proximity measures. Similarity-kind results are symmetrized
// as (M + M^T)/2 where the raw formula is asymmetric (k_step, rooted_pagerank,
// ppmi). "log" is the natural logarithm throughout.

ProximityMatrix wasserman_faust(const Graph& g);
ProximityMatrix adamic_adar(const Graph& g);
ProximityMatrix overlap(const Graph& g);

/// S = (D^-1 A)^K, symmetrized. Requires min degree >= 1.
ProximityMatrix k_step(const Graph& g, std::size_t k);

/// Katz index S = beta (I - beta A)^-1 A. Requires beta * rho(A) < 1.
ProximityMatrix katz(const Graph& g, double beta);

/// Rooted PageRank S = (1 - alpha)(I - alpha P)^-1, symmetrized.
ProximityMatrix rooted_pagerank(const Graph& g, double alpha);

/// PPMI of random-surfing co-occurrence; continuation probability alpha_cont,
/// surf length steps.
ProximityMatrix ppmi(const Graph& g, double alpha_cont, std::size_t steps);

/// Blondel et al. self-similarity iteration (graph vs itself), Frobenius
/// normalized each step, starting from the all-ones matrix.
ProximityMatrix blondel_gajardo(const Graph& g, std::size_t iters);

/// d[u][v] = max(S) - S[u][v] off-diagonal, zero diagonal.
ProximityMatrix to_dissimilarity(const ProximityMatrix& s);

}  // namespace commkit
