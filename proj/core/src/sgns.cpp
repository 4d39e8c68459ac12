#include <cmath>
#include <vector>

#include "commkit/embedding.hpp"
#include "commkit/errors.hpp"
#include "commkit/rng.hpp"

namespace commkit {

namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

}  // namespace

namespace detail {

double sgns_pair_loss(const lin::Matrix& in, const lin::Matrix& out, int center, int context,
                      const std::vector<int>& negatives) {
    double loss = -std::log(sigmoid(in.row(center).dot(out.row(context))));
    for (int neg : negatives) loss -= std::log(sigmoid(-in.row(center).dot(out.row(neg))));
    return loss;
}

void sgns_pair_grad(const lin::Matrix& in, const lin::Matrix& out, int center, int context,
                    const std::vector<int>& negatives, lin::Matrix& grad_in,
                    lin::Matrix& grad_out) {
    grad_in.setZero(in.rows(), in.cols());
    grad_out.setZero(out.rows(), out.cols());
    const double gpos = sigmoid(in.row(center).dot(out.row(context))) - 1.0;
    grad_in.row(center) += gpos * out.row(context);
    grad_out.row(context) += gpos * in.row(center);
    for (int neg : negatives) {
        const double gneg = sigmoid(in.row(center).dot(out.row(neg)));
        grad_in.row(center) += gneg * out.row(neg);
        grad_out.row(neg) += gneg * in.row(center);
    }
}

}  // namespace detail

Embedding skipgram_train(const Graph& g, const WalkCorpus& corpus, const TrainConfig& config) {
    if (corpus.walks.empty()) throw ArgumentError("skipgram_train: empty corpus");
    const std::size_t n = g.vertex_count();
    const std::size_t d = config.dim;

    Rng rng(derive_seed(config.seed, 0x5047u));
    std::uniform_real_distribution<double> init(-0.5 / static_cast<double>(d),
                                                0.5 / static_cast<double>(d));
    lin::Matrix in(n, d), out(n, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            in(i, j) = init(rng);
            out(i, j) = init(rng);
        }

    // unigram distribution raised to 0.75 for negative sampling
    std::vector<double> counts(n, 0.0);
    std::size_t total_pairs = 0;
    for (const auto& walk : corpus.walks) {
        for (int v : walk) counts[v] += 1.0;
        for (std::size_t c = 0; c < walk.size(); ++c) {
            const std::size_t lo = (c >= config.window) ? c - config.window : 0;
            const std::size_t hi = std::min(walk.size() - 1, c + config.window);
            total_pairs += (hi - lo);  // excludes the center itself
        }
    }
    for (double& c : counts) c = std::pow(c, 0.75);
    std::discrete_distribution<int> negative_sampler(counts.begin(), counts.end());

    Embedding e;
    e.method = "skipgram";
    const double lr0 = config.sgns_learning_rate;
    const double lr_min = lr0 * 1e-4;
    const std::size_t total_updates = std::max<std::size_t>(1, config.sgns_epochs * total_pairs);
    std::size_t done = 0;
    std::vector<int> negatives(config.negatives);

    for (std::size_t epoch = 0; epoch < config.sgns_epochs; ++epoch) {
        double epoch_loss = 0.0;
        std::size_t epoch_pairs = 0;
        for (const auto& walk : corpus.walks) {
            for (std::size_t c = 0; c < walk.size(); ++c) {
                const std::size_t lo = (c >= config.window) ? c - config.window : 0;
                const std::size_t hi = std::min(walk.size() - 1, c + config.window);
                for (std::size_t x = lo; x <= hi; ++x) {
                    if (x == c) continue;
                    const int center = walk[c];
                    const int context = walk[x];
                    for (auto& neg : negatives) neg = negative_sampler(rng);

                    const double lr =
                        std::max(lr_min, lr0 * (1.0 - static_cast<double>(done) /
                                                          static_cast<double>(total_updates)));
                    const double dot = in.row(center).dot(out.row(context));
                    const double gpos = sigmoid(dot) - 1.0;
                    epoch_loss -= std::log(sigmoid(dot));
                    Eigen::RowVectorXd grad_center = gpos * out.row(context);
                    out.row(context) -= lr * gpos * in.row(center);
                    for (int neg : negatives) {
                        const double dneg = in.row(center).dot(out.row(neg));
                        const double gneg = sigmoid(dneg);
                        epoch_loss -= std::log(sigmoid(-dneg));
                        grad_center += gneg * out.row(neg);
                        out.row(neg) -= lr * gneg * in.row(center);
                    }
                    in.row(center) -= lr * grad_center;
                    ++done;
                    ++epoch_pairs;
                }
            }
        }
        if (!std::isfinite(epoch_loss)) throw TrainingError("skipgram_train: loss diverged");
        e.train_log.push_back(epoch_pairs ? epoch_loss / static_cast<double>(epoch_pairs) : 0.0);
    }
    if (!in.allFinite()) throw TrainingError("skipgram_train: non-finite embedding");
    e.vectors = std::move(in);
    return e;
}

}  // namespace commkit
