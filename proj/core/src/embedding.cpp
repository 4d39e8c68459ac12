#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "commkit/embedding.hpp"
#include "commkit/errors.hpp"
#include "commkit/proximity.hpp"
#include "commkit/rng.hpp"

namespace commkit {

namespace {

using lin::Matrix;

void require_no_isolated(const Graph& g, const char* method) {
    if (g.has_isolated_vertex())
        throw MethodUndefinedError(std::string(method) +
                                   ": undefined on graphs with isolated vertices");
}

}  // namespace

Embedding laplacian_eigenmaps(const Graph& g, std::size_t dim) {
    require_no_isolated(g, "laplacian_eigenmaps");
    const std::size_t n = g.vertex_count();
    if (dim >= n) throw ArgumentError("laplacian_eigenmaps: dim must be < n_vertices");
    Eigen::GeneralizedSelfAdjointEigenSolver<Matrix> es(g.laplacian(), g.degree_matrix());
    if (es.info() != Eigen::Success)
        throw NumericalError("laplacian_eigenmaps: eigensolver failed");
    Embedding e;
    e.method = "laplacian_eigenmaps";
    // drop the trivial eigenvector, keep the next dim smallest
    e.vectors = es.eigenvectors().middleCols(1, dim);
    return e;
}

namespace detail {

double gf_loss(const Graph& g, const Matrix& z, double lambda_reg) {
    double loss = 0.0;
    for (auto [i, j] : g.edges()) {
        const double e = 1.0 - z.row(i).dot(z.row(j));
        loss += 0.5 * e * e;
    }
    loss += 0.5 * lambda_reg * z.squaredNorm();
    return loss;
}

Matrix gf_grad(const Graph& g, const Matrix& z, double lambda_reg) {
    Matrix grad = lambda_reg * z;
    for (auto [i, j] : g.edges()) {
        const double e = 1.0 - z.row(i).dot(z.row(j));
        grad.row(i) -= e * z.row(j);
        grad.row(j) -= e * z.row(i);
    }
    return grad;
}

}  // namespace detail

Embedding graph_factorisation(const Graph& g, const TrainConfig& config) {
    const std::size_t n = g.vertex_count();
    const std::size_t d = config.dim;
    Rng rng(derive_seed(config.seed, 0x6f67u));
    std::uniform_real_distribution<double> init(-0.1, 0.1);
    Matrix z(n, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) z(i, j) = init(rng);

    std::vector<std::size_t> order(g.edge_count());
    std::iota(order.begin(), order.end(), 0);

    Embedding e;
    e.method = "graph_factorisation";
    for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
        const double loss = detail::gf_loss(g, z, config.lambda_reg);
        if (!std::isfinite(loss)) throw TrainingError("graph_factorisation: loss diverged");
        e.train_log.push_back(loss);
        std::shuffle(order.begin(), order.end(), rng);
        for (std::size_t idx : order) {
            const auto [i, j] = g.edges()[idx];
            const double err = 1.0 - z.row(i).dot(z.row(j));
            const Eigen::RowVectorXd zi = z.row(i);
            z.row(i) += config.learning_rate * (err * z.row(j) - config.lambda_reg * z.row(i));
            z.row(j) += config.learning_rate * (err * zi - config.lambda_reg * z.row(j));
        }
    }
    if (!z.allFinite()) throw TrainingError("graph_factorisation: non-finite embedding");
    e.vectors = std::move(z);
    return e;
}

Embedding grarep(const Graph& g, std::size_t dim, std::size_t k_order) {
    require_no_isolated(g, "grarep");
    if (k_order < 1) throw ArgumentError("grarep: order must be >= 1");
    if (dim < k_order) throw ArgumentError("grarep: dim must be >= order");
    const std::size_t n = g.vertex_count();

    Matrix t = g.adjacency();
    for (Eigen::Index v = 0; v < t.rows(); ++v) t.row(v) /= static_cast<double>(g.degree(v));

    // per-step dimension allocation: floor(d/K), remainder to the first step
    std::vector<std::size_t> dims(k_order, dim / k_order);
    dims[0] += dim - (dim / k_order) * k_order;

    Embedding e;
    e.method = "grarep";
    e.vectors = Matrix::Zero(n, dim);
    Matrix tk = Matrix::Identity(n, n);
    std::size_t offset = 0;
    for (std::size_t k = 0; k < k_order; ++k) {
        tk = tk * t;
        const Eigen::VectorXd col_sums = tk.colwise().sum();
        Matrix x = Matrix::Zero(n, n);
        const double log_inv_n = std::log(1.0 / static_cast<double>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (tk(i, j) <= 0.0) continue;
                const double colmean = col_sums(j) / static_cast<double>(n);
                x(i, j) = std::max(0.0, std::log(tk(i, j) / colmean) - log_inv_n);
            }
        const lin::Svd svd = lin::truncated_svd(x, dims[k]);
        e.vectors.middleCols(offset, dims[k]) =
            svd.u * svd.sigma.cwiseSqrt().asDiagonal();
        offset += dims[k];
    }
    return e;
}

Embedding hope(const Graph& g, std::size_t dim, const std::string& proximity_choice,
               double beta, double alpha) {
    ProximityMatrix s;
    if (proximity_choice == "katz")
        s = katz(g, beta);
    else if (proximity_choice == "adamic_adar")
        s = adamic_adar(g);
    else if (proximity_choice == "rooted_pagerank")
        s = rooted_pagerank(g, alpha);
    else if (proximity_choice == "overlap")
        s = overlap(g);
    else
        throw ArgumentError("hope: unknown proximity choice '" + proximity_choice + "'");
    const lin::Svd svd = lin::truncated_svd(s.matrix, dim);
    Embedding e;
    e.method = "hope_" + proximity_choice;
    e.vectors = svd.u * svd.sigma.cwiseSqrt().asDiagonal();
    return e;
}

Embedding deepwalk(const Graph& g, const TrainConfig& config) {
    const WalkCorpus corpus = generate_walks(g, config.walks_per_vertex, config.walk_length,
                                             WalkMode::uniform, 1.0, 1.0, config.seed);
    Embedding e = skipgram_train(g, corpus, config);
    e.method = "deepwalk";
    return e;
}

Embedding node2vec(const Graph& g, const TrainConfig& config) {
    const WalkCorpus corpus = generate_walks(g, config.walks_per_vertex, config.walk_length,
                                             WalkMode::node2vec, config.p, config.q, config.seed);
    Embedding e = skipgram_train(g, corpus, config);
    e.method = "node2vec";
    return e;
}

void dump_embedding(const Embedding& e, std::ostream& out) {
    out << e.vectors.rows() << ' ' << e.vectors.cols() << '\n';
    const auto old_precision = out.precision(17);
    for (Eigen::Index i = 0; i < e.vectors.rows(); ++i) {
        for (Eigen::Index j = 0; j < e.vectors.cols(); ++j) {
            if (j > 0) out << ' ';
            out << e.vectors(i, j);
        }
        out << '\n';
    }
    out.precision(old_precision);
}

Embedding load_embedding(std::istream& in) {
    std::size_t n, d;
    if (!(in >> n >> d)) throw ParseError("load_embedding: malformed header");
    Embedding e;
    e.method = "loaded";
    e.vectors.resize(n, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (!(in >> e.vectors(i, j)))
                throw ParseError("load_embedding: truncated at row " + std::to_string(i));
    return e;
}

}  // namespace commkit
