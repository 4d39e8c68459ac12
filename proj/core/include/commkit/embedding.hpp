#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "commkit/graph.hpp"
#include "commkit/linalg.hpp"

namespace commkit {

/// Per-vertex real vector representation, one row per vertex.
struct Embedding {
    lin::Matrix vectors;  // n x d
    std::string method;
    std::vector<double> train_log;  // per-epoch loss, trained methods only
};

struct WalkCorpus {
    std::vector<std::vector<int>> walks;
    std::size_t walks_per_vertex;
    std::size_t walk_length;
    std::uint64_t seed;
};

enum class WalkMode { uniform, node2vec };

enum class Activation { tanh_act, linear };

struct TrainConfig {
    std::size_t dim = 6;
    std::uint64_t seed = 0;

    // random walks / skip-gram
    std::size_t walks_per_vertex = 10;
    std::size_t walk_length = 40;
    std::size_t window = 5;
    std::size_t negatives = 5;
    std::size_t sgns_epochs = 5;       // passes over the corpus
    double sgns_learning_rate = 0.025;  // linearly decayed
    double p = 1.0;                     // node2vec return bias
    double q = 1.0;                     // node2vec in-out bias

    // graph factorisation / DNGR gradient descent
    std::size_t epochs = 200;
    double learning_rate = 0.01;
    double lambda_reg = 1e-4;

    // DNGR
    std::size_t hidden = 0;  // 0 -> max(2*dim, 32)
    double noise_prob = 0.1;
    Activation activation = Activation::tanh_act;
    double ppmi_alpha = 0.98;
    std::size_t ppmi_len = 10;

    // GraRep
    std::size_t grarep_order = 3;
};

WalkCorpus generate_walks(const Graph& g, std::size_t walks_per_vertex, std::size_t walk_length,
                          WalkMode mode, double p, double q, std::uint64_t seed);

Embedding skipgram_train(const Graph& g, const WalkCorpus& corpus, const TrainConfig& config);

Embedding laplacian_eigenmaps(const Graph& g, std::size_t dim);
Embedding graph_factorisation(const Graph& g, const TrainConfig& config);
Embedding grarep(const Graph& g, std::size_t dim, std::size_t k_order);
Embedding hope(const Graph& g, std::size_t dim, const std::string& proximity_choice,
               double beta, double alpha);
Embedding deepwalk(const Graph& g, const TrainConfig& config);
Embedding node2vec(const Graph& g, const TrainConfig& config);
Embedding dngr(const Graph& g, const TrainConfig& config);

/// Dump format: header "n d", then n lines of d decimals.
void dump_embedding(const Embedding& e, std::ostream& out);
Embedding load_embedding(std::istream& in);

// --- loss/gradient plumbing exposed for finite-difference checks ---

namespace detail {

/// SGNS loss and gradients for a single (center, context) pair with fixed
/// negatives; returns -[log s(zc.zx) + sum log s(-zc.zn)].
double sgns_pair_loss(const lin::Matrix& in, const lin::Matrix& out, int center, int context,
                      const std::vector<int>& negatives);
void sgns_pair_grad(const lin::Matrix& in, const lin::Matrix& out, int center, int context,
                    const std::vector<int>& negatives, lin::Matrix& grad_in,
                    lin::Matrix& grad_out);

double gf_loss(const Graph& g, const lin::Matrix& z, double lambda_reg);
lin::Matrix gf_grad(const Graph& g, const lin::Matrix& z, double lambda_reg);

struct DngrParams {
    lin::Matrix w1, w2, w3, w4;
    lin::Vector b1, b2, b3, b4;
};

/// Squared-error reconstruction loss of the denoising autoencoder for a
/// fixed corruption mask, plus gradients for all parameters.
double dngr_loss(const DngrParams& params, const lin::Matrix& input_corrupted,
                 const lin::Matrix& target, Activation act);
DngrParams dngr_grad(const DngrParams& params, const lin::Matrix& input_corrupted,
                     const lin::Matrix& target, Activation act);

/// Bottleneck activations for given inputs.
lin::Matrix dngr_encode(const DngrParams& params, const lin::Matrix& input, Activation act);

}  // namespace detail

}  // namespace commkit
