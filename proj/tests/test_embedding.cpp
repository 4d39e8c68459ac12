#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "commkit/embedding.hpp"
#include "commkit/errors.hpp"
#include "commkit/proximity.hpp"
#include "test_util.hpp"

using namespace commkit;
using lin::Matrix;
using lin::Vector;

namespace {

// mean pairwise row distance within / across the two triangles of 2K3
std::pair<double, double> triangle_separation(const Matrix& z) {
    double intra = 0, inter = 0;
    int ni = 0, nx = 0;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) {
            const double dist = (z.row(u) - z.row(v)).norm();
            if ((u < 3) == (v < 3)) {
                intra += dist;
                ++ni;
            } else {
                inter += dist;
                ++nx;
            }
        }
    return {intra / ni, inter / nx};
}

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max({std::abs(got), std::abs(want), 1e-8});
}

}  // namespace

TEST_CASE("laplacian eigenmaps separates components and satisfies the constraint") {
    Graph g = testutil::two_triangles();
    Embedding e = laplacian_eigenmaps(g, 1);
    // both remaining kernel vectors are piecewise constant per triangle; the
    // basis within the kernel is solver-dependent, so only require constancy
    // per component and different values across components
    const double a = e.vectors(0, 0);
    const double b = e.vectors(3, 0);
    for (int v = 0; v < 3; ++v) CHECK(e.vectors(v, 0) == doctest::Approx(a).epsilon(1e-8));
    for (int v = 3; v < 6; ++v) CHECK(e.vectors(v, 0) == doctest::Approx(b).epsilon(1e-8));
    CHECK(std::abs(a - b) > 1e-6);

    Rng rng(3);
    Graph h = testutil::random_graph(10, 0.45, rng, true);
    Embedding z = laplacian_eigenmaps(h, 3);
    const Matrix d = h.degree_matrix();
    CHECK((z.vectors.transpose() * d * z.vectors - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() <
          1e-6);
    // columns are generalized eigenvectors: L z = lambda D z with lambda = z^T L z
    const Matrix l = h.laplacian();
    for (int c = 0; c < 3; ++c) {
        const Vector zc = z.vectors.col(c);
        const double lambda = zc.dot(l * zc);
        CHECK((l * zc - lambda * d * zc).cwiseAbs().maxCoeff() < 1e-6);
    }

    CHECK_THROWS_AS(laplacian_eigenmaps(Graph(3, {{0, 1}}), 1), MethodUndefinedError);
    CHECK_THROWS_AS(laplacian_eigenmaps(g, 6), ArgumentError);
}

TEST_CASE("graph factorisation single-edge stationary point") {
    TrainConfig config;
    config.dim = 1;
    config.lambda_reg = 0.0;
    config.epochs = 4000;
    config.learning_rate = 0.05;
    config.seed = 7;
    Embedding e = graph_factorisation(testutil::single_edge(), config);
    CHECK(e.vectors(0, 0) * e.vectors(1, 0) == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("graph factorisation gradient matches finite differences") {
    Rng rng(13);
    Graph g = testutil::random_graph(6, 0.5, rng);
    Matrix z = Matrix::Random(6, 3);
    const double lambda = 0.01;
    const Matrix grad = detail::gf_grad(g, z, lambda);
    const double h = 1e-6;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 3; ++j) {
            Matrix zp = z, zm = z;
            zp(i, j) += h;
            zm(i, j) -= h;
            const double fd =
                (detail::gf_loss(g, zp, lambda) - detail::gf_loss(g, zm, lambda)) / (2 * h);
            CHECK(rel_err(grad(i, j), fd) < 1e-5);
        }
}

TEST_CASE("heavy regularisation shrinks the factorisation") {
    TrainConfig config;
    config.dim = 2;
    config.lambda_reg = 50.0;
    config.epochs = 500;
    config.seed = 1;
    Embedding e = graph_factorisation(testutil::triangle(), config);
    CHECK(e.vectors.norm() < 1e-3);
}

TEST_CASE("grarep dimension allocation and equivariance") {
    Rng rng(19);
    Graph g = testutil::random_graph(8, 0.5, rng, true);
    for (std::size_t d : {3, 5, 6}) {
        Embedding e = grarep(g, d, 3);
        CHECK(e.vectors.cols() == static_cast<Eigen::Index>(d));
        CHECK(e.vectors.rows() == 8);
        CHECK(e.vectors.allFinite());
    }

    // pair-distance multiset is permutation equivariant
    const auto perm = testutil::random_permutation(8, rng);
    Graph pg = testutil::permute_graph(g, perm);
    const Matrix z = grarep(g, 4, 2).vectors;
    const Matrix pz = grarep(pg, 4, 2).vectors;
    for (int u = 0; u < 8; ++u)
        for (int v = 0; v < 8; ++v) {
            const double want = (z.row(u) - z.row(v)).norm();
            const double got = (pz.row(perm[u]) - pz.row(perm[v])).norm();
            CHECK(got == doctest::Approx(want).epsilon(1e-6));
        }

    CHECK_THROWS_AS(grarep(Graph(3, {{0, 1}}), 2, 2), MethodUndefinedError);
}

TEST_CASE("hope row inner products on a single edge") {
    // S = [[1/3, 2/3], [2/3, 1/3]] has eigenvalues 1 and -1/3. Z = U sqrt(sigma)
    // uses only the left factors, so Z Z^T = |S| spectrally:
    // <Z0, Z1> = 1 * 1/2 + 1/3 * (-1/2) = 1/3.
    Embedding e = hope(testutil::single_edge(), 2, "katz", 0.5, 0.3);
    CHECK(e.vectors.row(0).dot(e.vectors.row(1)) == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
    CHECK(e.vectors.row(0).squaredNorm() == doctest::Approx(2.0 / 3.0).epsilon(1e-6));
}

TEST_CASE("hope with alpha-zero rooted pagerank gives orthonormal rows") {
    Graph g = testutil::triangle();
    Embedding e = hope(g, 3, "rooted_pagerank", 0.5, 0.0);
    const Matrix gram = e.vectors * e.vectors.transpose();
    CHECK((gram - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("hope svd residual is optimal") {
    Rng rng(23);
    Graph g = testutil::random_graph(9, 0.5, rng, true);
    const Matrix s = rooted_pagerank(g, 0.3).matrix;
    const std::size_t d = 3;
    Embedding e = hope(g, d, "rooted_pagerank", 0.5, 0.3);
    auto full = lin::truncated_svd(s, 9);
    double tail = 0;
    for (std::size_t k = d; k < 9; ++k) tail += full.sigma(k) * full.sigma(k);
    const double residual = (s - e.vectors * e.vectors.transpose()).squaredNorm();
    CHECK(residual == doctest::Approx(tail).epsilon(1e-6));
}

TEST_CASE("walks stay on edges and alternate on a single edge") {
    Graph k2 = testutil::single_edge();
    WalkCorpus corpus = generate_walks(k2, 3, 10, WalkMode::uniform, 1, 1, 5);
    CHECK(corpus.walks.size() == 6);
    for (const auto& walk : corpus.walks) {
        REQUIRE(walk.size() == 10);
        for (std::size_t i = 1; i < walk.size(); ++i) CHECK(walk[i] == 1 - walk[i - 1]);
    }

    Rng rng(31);
    Graph g = testutil::random_graph(10, 0.4, rng, true);
    WalkCorpus wc = generate_walks(g, 4, 12, WalkMode::node2vec, 0.5, 2.0, 9);
    std::size_t root = 0;
    for (std::size_t w = 0; w < wc.walks.size(); ++w) {
        const auto& walk = wc.walks[w];
        CHECK(walk.front() == static_cast<int>(w / 4));
        for (std::size_t i = 1; i < walk.size(); ++i) CHECK(g.has_edge(walk[i - 1], walk[i]));
    }
    (void)root;
}

TEST_CASE("walk first-step frequencies from the path centre are balanced") {
    Graph p3 = testutil::path3();
    int to0 = 0, total = 0;
    WalkCorpus corpus = generate_walks(p3, 10000, 2, WalkMode::uniform, 1, 1, 77);
    for (const auto& walk : corpus.walks) {
        if (walk.front() != 1) continue;
        ++total;
        if (walk[1] == 0) ++to0;
    }
    REQUIRE(total == 10000);
    // 3 sigma binomial bound around p = 0.5
    const double sigma = std::sqrt(0.25 * total);
    CHECK(std::abs(to0 - total / 2.0) < 3 * sigma);
}

TEST_CASE("unbiased node2vec matches uniform transition frequencies") {
    Graph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
    auto count_from_0 = [&](WalkMode mode) {
        std::vector<int> counts(4, 0);
        WalkCorpus corpus = generate_walks(g, 6000, 8, mode, 1, 1, 13);
        for (const auto& walk : corpus.walks)
            for (std::size_t i = 1; i < walk.size(); ++i)
                if (walk[i - 1] == 0) ++counts[walk[i]];
        return counts;
    };
    const auto uni = count_from_0(WalkMode::uniform);
    const auto n2v = count_from_0(WalkMode::node2vec);
    const double uni_total = uni[1] + uni[2] + uni[3];
    const double n2v_total = n2v[1] + n2v[2] + n2v[3];
    for (int v = 1; v < 4; ++v)
        CHECK(uni[v] / uni_total == doctest::Approx(n2v[v] / n2v_total).epsilon(0.05));
}

TEST_CASE("sgns pair gradient matches finite differences") {
    Rng rng(41);
    Matrix in = Matrix::Random(5, 3), out = Matrix::Random(5, 3);
    const std::vector<int> negatives{2, 4, 4};
    Matrix gin = Matrix::Zero(5, 3), gout = Matrix::Zero(5, 3);
    detail::sgns_pair_grad(in, out, 0, 3, negatives, gin, gout);
    const double h = 1e-6;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 3; ++j) {
            {
                Matrix p = in, m = in;
                p(i, j) += h;
                m(i, j) -= h;
                const double fd = (detail::sgns_pair_loss(p, out, 0, 3, negatives) -
                                   detail::sgns_pair_loss(m, out, 0, 3, negatives)) /
                                  (2 * h);
                CHECK(std::abs(gin(i, j) - fd) < 1e-5 * std::max(1.0, std::abs(fd)));
            }
            {
                Matrix p = out, m = out;
                p(i, j) += h;
                m(i, j) -= h;
                const double fd = (detail::sgns_pair_loss(in, p, 0, 3, negatives) -
                                   detail::sgns_pair_loss(in, m, 0, 3, negatives)) /
                                  (2 * h);
                CHECK(std::abs(gout(i, j) - fd) < 1e-5 * std::max(1.0, std::abs(fd)));
            }
        }
}

TEST_CASE("deepwalk and node2vec separate the two triangles deterministically") {
    Graph g = testutil::two_triangles();
    TrainConfig config;
    config.dim = 2;
    config.seed = 3;
    for (auto* method : {&deepwalk, &node2vec}) {
        Embedding a = (*method)(g, config);
        Embedding b = (*method)(g, config);
        CHECK(a.vectors == b.vectors);
        auto [intra, inter] = triangle_separation(a.vectors);
        CHECK(intra < inter);
    }
}

TEST_CASE("dngr gradient matches finite differences") {
    Rng rng(47);
    const int n = 6, h = 4, d = 2;
    detail::DngrParams p;
    p.w1 = 0.5 * Matrix::Random(n, h);
    p.w2 = 0.5 * Matrix::Random(h, d);
    p.w3 = 0.5 * Matrix::Random(d, h);
    p.w4 = 0.5 * Matrix::Random(h, n);
    p.b1 = 0.1 * Vector::Random(h);
    p.b2 = 0.1 * Vector::Random(d);
    p.b3 = 0.1 * Vector::Random(h);
    p.b4 = 0.1 * Vector::Random(n);
    const Matrix x = 0.5 * (Matrix::Random(n, n) + Matrix::Ones(n, n));

    for (Activation act : {Activation::tanh_act, Activation::linear}) {
        const detail::DngrParams grad = detail::dngr_grad(p, x, x, act);
        const double step = 1e-6;
        auto check_block = [&](Matrix detail::DngrParams::* w, const Matrix& gw) {
            detail::DngrParams probe = p;
            for (Eigen::Index i = 0; i < (p.*w).rows(); ++i)
                for (Eigen::Index j = 0; j < (p.*w).cols(); ++j) {
                    (probe.*w)(i, j) = (p.*w)(i, j) + step;
                    const double lp = detail::dngr_loss(probe, x, x, act);
                    (probe.*w)(i, j) = (p.*w)(i, j) - step;
                    const double lm = detail::dngr_loss(probe, x, x, act);
                    (probe.*w)(i, j) = (p.*w)(i, j);
                    const double fd = (lp - lm) / (2 * step);
                    CHECK(rel_err(gw(i, j), fd) < 1e-4);
                }
        };
        check_block(&detail::DngrParams::w1, grad.w1);
        check_block(&detail::DngrParams::w2, grad.w2);
        check_block(&detail::DngrParams::w3, grad.w3);
        check_block(&detail::DngrParams::w4, grad.w4);
    }
}

TEST_CASE("identity-capable autoencoder drives the loss down") {
    Graph g = testutil::triangle();
    TrainConfig config;
    config.dim = 3;
    config.hidden = 3;
    config.noise_prob = 0.0;
    config.activation = Activation::linear;
    config.epochs = 3000;
    config.learning_rate = 0.2;
    config.seed = 5;
    Embedding e = dngr(g, config);
    REQUIRE(!e.train_log.empty());
    CHECK(e.train_log.back() < 1e-3);
}

TEST_CASE("dngr separates the two triangles") {
    Graph g = testutil::two_triangles();
    TrainConfig config;
    config.dim = 2;
    config.seed = 11;
    Embedding e = dngr(g, config);
    auto [intra, inter] = triangle_separation(e.vectors);
    CHECK(intra < inter);
    CHECK(e.vectors == dngr(g, config).vectors);
}

TEST_CASE("embedding dump round trip") {
    Rng rng(53);
    Graph g = testutil::random_graph(7, 0.5, rng, true);
    Embedding e = laplacian_eigenmaps(g, 3);
    std::ostringstream out;
    dump_embedding(e, out);
    std::istringstream in(out.str());
    Embedding back = load_embedding(in);
    CHECK(back.vectors.rows() == 7);
    CHECK(back.vectors.cols() == 3);
    CHECK((back.vectors - e.vectors).cwiseAbs().maxCoeff() < 1e-12);
}
