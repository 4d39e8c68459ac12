#include "commkit/pipelines.hpp"

#include <cmath>

#include "commkit/errors.hpp"

namespace commkit {

ClusteringSpec ClusteringSpec::from_name(const std::string& name, double g) {
    ClusteringSpec spec;
    if (name == "genie") {
        spec.genie = true;
        spec.gini_threshold = g;
    } else {
        spec.linkage = linkage_from_name(name);
    }
    return spec;
}

Dendrogram run_clustering(const lin::Matrix& d, const ClusteringSpec& spec) {
    if (spec.genie) return genie_cluster(d, spec.gini_threshold);
    return linkage_cluster(d, spec.linkage);
}

ProximityMatrix compute_measure(const Graph& g, const std::string& measure,
                                const MeasureParams& params) {
    if (measure == "wasserman_faust" || measure == "wf") return wasserman_faust(g);
    if (measure == "adamic_adar") return adamic_adar(g);
    if (measure == "overlap") return overlap(g);
    if (measure == "k_step" || measure == "kstep") return k_step(g, params.k_steps);
    if (measure == "katz") return katz(g, params.beta);
    if (measure == "rooted_pagerank" || measure == "rpr")
        return rooted_pagerank(g, params.alpha_rpr);
    if (measure == "ppmi") return ppmi(g, params.ppmi_alpha, params.ppmi_len);
    if (measure == "blondel_gajardo") return blondel_gajardo(g, params.bg_iters);
    throw ArgumentError("unknown proximity measure '" + measure + "'");
}

lin::Matrix row_distances(const lin::Matrix& z) {
    const Eigen::Index n = z.rows();
    lin::Matrix d = lin::Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j)
            d(i, j) = d(j, i) = (z.row(i) - z.row(j)).norm();
    return d;
}

Partition detect_node(const Graph& g, std::size_t k, const std::string& measure,
                      const MeasureParams& params, const ClusteringSpec& clustering) {
    ProximityMatrix m = compute_measure(g, measure, params);
    if (m.kind == ProximityKind::similarity) m = to_dissimilarity(m);
    return cut(run_clustering(m.matrix, clustering), k);
}

Partition detect_spectral(const Graph& g, std::size_t k, const std::string& similarity,
                          const MeasureParams& params, const ClusteringSpec& clustering,
                          EigPick pick) {
    if (k > g.vertex_count())
        throw ArgumentError("detect_spectral: K exceeds vertex count");
    ProximityMatrix m = compute_measure(g, similarity, params);
    if (m.kind != ProximityKind::similarity)
        m.matrix = (m.matrix.maxCoeff() - m.matrix.array()).matrix();  // dissimilarity -> similarity

    const lin::SymEig eig = lin::sym_eig(0.5 * (m.matrix + m.matrix.transpose()));
    const Eigen::Index n = eig.values.size();

    // order eigenpairs by |lambda| descending (largest) or lambda ascending (smallest)
    std::vector<Eigen::Index> idx(n);
    for (Eigen::Index i = 0; i < n; ++i) idx[i] = i;
    if (pick == EigPick::largest) {
        std::sort(idx.begin(), idx.end(), [&](Eigen::Index a, Eigen::Index b) {
            return std::abs(eig.values(a)) > std::abs(eig.values(b));
        });
    }
    lin::Matrix z(n, k);
    for (std::size_t c = 0; c < k; ++c) {
        Eigen::VectorXd v = eig.vectors.col(idx[c]);
        // sign convention: largest-magnitude entry positive
        Eigen::Index imax;
        v.cwiseAbs().maxCoeff(&imax);
        if (v(imax) < 0.0) v = -v;
        z.col(c) = v;
    }
    return cut(run_clustering(row_distances(z), clustering), k);
}

Partition detect_representation(const Graph& g, std::size_t k, const std::string& method,
                                const TrainConfig& config, const ClusteringSpec& clustering) {
    Embedding e;
    if (method == "laplacian_eigenmaps")
        e = laplacian_eigenmaps(g, config.dim);
    else if (method == "graph_factorisation" || method == "gf")
        e = graph_factorisation(g, config);
    else if (method == "grarep")
        e = grarep(g, config.dim, config.grarep_order);
    else if (method == "hope" || method == "hope_katz")
        e = hope(g, config.dim, "katz", 0.1, 0.3);
    else if (method == "hope_adamic_adar")
        e = hope(g, config.dim, "adamic_adar", 0.1, 0.3);
    else if (method == "hope_rooted_pagerank")
        e = hope(g, config.dim, "rooted_pagerank", 0.1, 0.3);
    else if (method == "hope_overlap")
        e = hope(g, config.dim, "overlap", 0.1, 0.3);
    else if (method == "deepwalk")
        e = deepwalk(g, config);
    else if (method == "node2vec")
        e = node2vec(g, config);
    else if (method == "dngr")
        e = dngr(g, config);
    else
        throw ArgumentError("unknown representation method '" + method + "'");
    return cut(run_clustering(row_distances(e.vectors), clustering), k);
}

}  // namespace commkit
