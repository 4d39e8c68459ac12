#include <cmath>

#include "commkit/embedding.hpp"
#include "commkit/errors.hpp"
#include "commkit/proximity.hpp"
#include "commkit/rng.hpp"

namespace commkit {

namespace {

using lin::Matrix;
using lin::Vector;

Matrix activate(const Matrix& pre, Activation act) {
    if (act == Activation::linear) return pre;
    return pre.array().tanh().matrix();
}

// derivative of the activation expressed through the activation value
Matrix activate_deriv(const Matrix& post, Activation act) {
    if (act == Activation::linear) return Matrix::Ones(post.rows(), post.cols());
    return (1.0 - post.array().square()).matrix();
}

struct Forward {
    Matrix a1, a2, a3, out;
};

Forward forward(const detail::DngrParams& p, const Matrix& x, Activation act) {
    Forward f;
    f.a1 = activate((x * p.w1).rowwise() + p.b1.transpose(), act);
    f.a2 = activate((f.a1 * p.w2).rowwise() + p.b2.transpose(), act);
    f.a3 = activate((f.a2 * p.w3).rowwise() + p.b3.transpose(), act);
    f.out = (f.a3 * p.w4).rowwise() + p.b4.transpose();
    return f;
}

}  // namespace

namespace detail {

double dngr_loss(const DngrParams& params, const Matrix& input_corrupted, const Matrix& target,
                 Activation act) {
    const Forward f = forward(params, input_corrupted, act);
    // mean over rows keeps the gradient scale independent of graph size
    return 0.5 * (f.out - target).squaredNorm() / static_cast<double>(target.rows());
}

DngrParams dngr_grad(const DngrParams& params, const Matrix& input_corrupted,
                     const Matrix& target, Activation act) {
    const Forward f = forward(params, input_corrupted, act);
    DngrParams g;

    Matrix delta = (f.out - target) / static_cast<double>(target.rows());  // linear output layer
    g.w4 = f.a3.transpose() * delta;
    g.b4 = delta.colwise().sum().transpose();

    Matrix d3 = (delta * params.w4.transpose()).cwiseProduct(activate_deriv(f.a3, act));
    g.w3 = f.a2.transpose() * d3;
    g.b3 = d3.colwise().sum().transpose();

    Matrix d2 = (d3 * params.w3.transpose()).cwiseProduct(activate_deriv(f.a2, act));
    g.w2 = f.a1.transpose() * d2;
    g.b2 = d2.colwise().sum().transpose();

    Matrix d1 = (d2 * params.w2.transpose()).cwiseProduct(activate_deriv(f.a1, act));
    g.w1 = input_corrupted.transpose() * d1;
    g.b1 = d1.colwise().sum().transpose();
    return g;
}

Matrix dngr_encode(const DngrParams& params, const Matrix& input, Activation act) {
    const Matrix a1 = activate((input * params.w1).rowwise() + params.b1.transpose(), act);
    return activate((a1 * params.w2).rowwise() + params.b2.transpose(), act);
}

}  // namespace detail

Embedding dngr(const Graph& g, const TrainConfig& config) {
    const std::size_t n = g.vertex_count();
    const std::size_t d = config.dim;
    const std::size_t h = config.hidden ? config.hidden : std::max(2 * d, std::size_t{32});

    // PPMI input, rows scaled to unit maximum
    Matrix x = ppmi(g, config.ppmi_alpha, config.ppmi_len).matrix;
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        const double row_max = x.row(i).maxCoeff();
        if (row_max > 0.0) x.row(i) /= row_max;
    }

    Rng rng(derive_seed(config.seed, 0xd46au));
    auto init_matrix = [&](std::size_t rows, std::size_t cols) {
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        const double scale = std::sqrt(6.0 / static_cast<double>(rows + cols));
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = scale * dist(rng);
        return m;
    };
    detail::DngrParams p;
    p.w1 = init_matrix(n, h);
    p.w2 = init_matrix(h, d);
    p.w3 = init_matrix(d, h);
    p.w4 = init_matrix(h, n);
    p.b1 = Vector::Zero(h);
    p.b2 = Vector::Zero(d);
    p.b3 = Vector::Zero(h);
    p.b4 = Vector::Zero(n);

    Embedding e;
    e.method = "dngr";
    std::bernoulli_distribution corrupt(config.noise_prob);
    for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
        Matrix input = x;
        if (config.noise_prob > 0.0) {
            for (Eigen::Index i = 0; i < input.rows(); ++i)
                for (Eigen::Index j = 0; j < input.cols(); ++j)
                    if (corrupt(rng)) input(i, j) = 0.0;
        }
        const double loss = detail::dngr_loss(p, input, x, config.activation);
        if (!std::isfinite(loss)) throw TrainingError("dngr: loss diverged");
        e.train_log.push_back(loss);
        const detail::DngrParams grad = detail::dngr_grad(p, input, x, config.activation);
        const double lr = config.learning_rate;
        p.w1 -= lr * grad.w1;
        p.w2 -= lr * grad.w2;
        p.w3 -= lr * grad.w3;
        p.w4 -= lr * grad.w4;
        p.b1 -= lr * grad.b1;
        p.b2 -= lr * grad.b2;
        p.b3 -= lr * grad.b3;
        p.b4 -= lr * grad.b4;
    }
    e.vectors = detail::dngr_encode(p, x, config.activation);
    if (!e.vectors.allFinite()) throw TrainingError("dngr: non-finite embedding");
    return e;
}

}  // namespace commkit
