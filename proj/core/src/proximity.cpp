#include "commkit/proximity.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "commkit/errors.hpp"

namespace commkit {

namespace {

using lin::Matrix;

void require_no_isolated(const Graph& g, const char* measure) {
    if (g.has_isolated_vertex())
        throw MethodUndefinedError(std::string(measure) +
                                   ": undefined on graphs with isolated vertices");
}

/// Row-stochastic transition matrix P = D^-1 A. Requires min degree >= 1.
Matrix transition_matrix(const Graph& g) {
    Matrix p = g.adjacency();
    for (Eigen::Index v = 0; v < p.rows(); ++v) p.row(v) /= static_cast<double>(g.degree(v));
    return p;
}

Matrix symmetrized(const Matrix& m) { return 0.5 * (m + m.transpose()); }

std::size_t intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib)
            ++ia;
        else if (*ib < *ia)
            ++ib;
        else {
            ++count;
            ++ia;
            ++ib;
        }
    }
    return count;
}

}  // namespace

ProximityMatrix wasserman_faust(const Graph& g) {
    const Matrix a = g.adjacency();
    const Eigen::Index n = a.rows();
    Matrix d = Matrix::Zero(n, n);
    for (Eigen::Index u = 0; u < n; ++u) {
        for (Eigen::Index v = u + 1; v < n; ++v) {
            double ss = 0.0;
            for (Eigen::Index k = 0; k < n; ++k) {
                if (k == u || k == v) continue;
                const double diff = a(u, k) - a(v, k);
                ss += diff * diff;
            }
            d(u, v) = d(v, u) = std::sqrt(ss);
        }
    }
    return {std::move(d), ProximityKind::dissimilarity, "wasserman_faust", {}};
}

ProximityMatrix adamic_adar(const Graph& g) {
    const Eigen::Index n = static_cast<Eigen::Index>(g.vertex_count());
    Matrix s = Matrix::Zero(n, n);
    for (Eigen::Index u = 0; u < n; ++u) {
        for (Eigen::Index v = u + 1; v < n; ++v) {
            const auto& nu = g.neighbors(static_cast<int>(u));
            const auto& nv = g.neighbors(static_cast<int>(v));
            double sum = 0.0;
            auto iu = nu.begin();
            auto iv = nv.begin();
            while (iu != nu.end() && iv != nv.end()) {
                if (*iu < *iv)
                    ++iu;
                else if (*iv < *iu)
                    ++iv;
                else {
                    // terms with |N(w)| <= 1 are skipped (log 1 = 0)
                    const std::size_t dw = g.degree(*iu);
                    if (dw > 1) sum += 2.0 / std::log(static_cast<double>(dw));
                    ++iu;
                    ++iv;
                }
            }
            s(u, v) = s(v, u) = sum;
        }
    }
    return {std::move(s), ProximityKind::similarity, "adamic_adar", {}};
}

ProximityMatrix overlap(const Graph& g) {
    const Eigen::Index n = static_cast<Eigen::Index>(g.vertex_count());
    Matrix s = Matrix::Zero(n, n);
    for (Eigen::Index u = 0; u < n; ++u) {
        for (Eigen::Index v = u; v < n; ++v) {
            const auto& nu = g.neighbors(static_cast<int>(u));
            const auto& nv = g.neighbors(static_cast<int>(v));
            const std::size_t inter = intersection_size(nu, nv);
            const std::size_t uni = nu.size() + nv.size() - inter;
            const double w = (uni == 0) ? 0.0 : static_cast<double>(inter) / uni;
            s(u, v) = s(v, u) = w;
        }
    }
    return {std::move(s), ProximityKind::similarity, "overlap", {}};
}

ProximityMatrix k_step(const Graph& g, std::size_t k) {
    require_no_isolated(g, "k_step");
    Matrix s = lin::matpow(transition_matrix(g), k);
    return {symmetrized(s), ProximityKind::similarity, "k_step",
            {{"k_steps", static_cast<double>(k)}}};
}

ProximityMatrix katz(const Graph& g, double beta) {
    const Matrix a = g.adjacency();
    const double rho = (g.edge_count() > 0) ? lin::spectral_radius_sym(a) : 0.0;
    if (beta * rho >= 1.0)
        throw MethodUndefinedError("katz: series diverges, beta * rho(A) = " +
                                   std::to_string(beta * rho) + " >= 1 (rho(A) = " +
                                   std::to_string(rho) + ")");
    const Eigen::Index n = a.rows();
    Matrix s = beta * lin::solve(Matrix::Identity(n, n) - beta * a, a);
    return {symmetrized(s), ProximityKind::similarity, "katz", {{"beta", beta}}};
}

ProximityMatrix rooted_pagerank(const Graph& g, double alpha) {
    if (alpha < 0.0 || alpha >= 1.0)
        throw ArgumentError("rooted_pagerank: alpha must lie in [0, 1)");
    require_no_isolated(g, "rooted_pagerank");
    const Matrix p = transition_matrix(g);
    const Eigen::Index n = p.rows();
    Matrix s = (1.0 - alpha) * lin::inverse(Matrix::Identity(n, n) - alpha * p);
    return {symmetrized(s), ProximityKind::similarity, "rooted_pagerank", {{"alpha", alpha}}};
}

ProximityMatrix ppmi(const Graph& g, double alpha_cont, std::size_t steps) {
    if (alpha_cont <= 0.0 || alpha_cont > 1.0)
        throw ArgumentError("ppmi: continuation probability must lie in (0, 1]");
    if (steps < 1) throw ArgumentError("ppmi: surf length must be >= 1");
    require_no_isolated(g, "ppmi");
    const Matrix p = transition_matrix(g);
    const Eigen::Index n = p.rows();
    const Matrix p0 = Matrix::Identity(n, n);
    Matrix pk = p0;
    Matrix r = Matrix::Zero(n, n);
    for (std::size_t k = 1; k <= steps; ++k) {
        pk = alpha_cont * (pk * p) + (1.0 - alpha_cont) * p0;
        r += pk;
    }
    const double total = r.sum();
    const Eigen::VectorXd row_sums = r.rowwise().sum();
    const Eigen::VectorXd col_sums = r.colwise().sum();
    Matrix m = Matrix::Zero(n, n);
    for (Eigen::Index u = 0; u < n; ++u) {
        for (Eigen::Index v = 0; v < n; ++v) {
            if (r(u, v) <= 0.0) continue;
            const double pmi = std::log(r(u, v) * total / (row_sums(u) * col_sums(v)));
            m(u, v) = std::max(0.0, pmi);
        }
    }
    return {symmetrized(m), ProximityKind::similarity, "ppmi",
            {{"alpha_cont", alpha_cont}, {"steps", static_cast<double>(steps)}}};
}

ProximityMatrix blondel_gajardo(const Graph& g, std::size_t iters) {
    if (iters < 1) throw ArgumentError("blondel_gajardo: iteration limit must be >= 1");
    if (g.vertex_count() == 0) throw ArgumentError("blondel_gajardo: empty graph");
    if (g.edge_count() == 0)
        throw MethodUndefinedError("blondel_gajardo: undefined on edgeless graphs");
    const Matrix a = g.adjacency();
    const Eigen::Index n = a.rows();
    Matrix s = Matrix::Ones(n, n);
    for (std::size_t it = 0; it < iters; ++it) {
        Matrix next = a * s * a.transpose() + a.transpose() * s * a;
        const double norm = next.norm();
        if (norm == 0.0)
            throw MethodUndefinedError("blondel_gajardo: iteration collapsed to zero");
        s = next / norm;
    }
    return {std::move(s), ProximityKind::similarity, "blondel_gajardo",
            {{"iters", static_cast<double>(iters)}}};
}

ProximityMatrix to_dissimilarity(const ProximityMatrix& s) {
    if (s.kind != ProximityKind::similarity)
        throw ArgumentError("to_dissimilarity: input must be a similarity matrix");
    const double max_entry = s.matrix.maxCoeff();
    lin::Matrix d = (max_entry - s.matrix.array()).matrix();
    d.diagonal().setZero();
    ProximityMatrix out{std::move(d), ProximityKind::dissimilarity, s.measure, s.params};
    return out;
}

}  // namespace commkit
