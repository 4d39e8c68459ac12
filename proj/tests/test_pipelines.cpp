#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "commkit/errors.hpp"
#include "commkit/metrics.hpp"
#include "commkit/pipelines.hpp"
#include "test_util.hpp"

using namespace commkit;

namespace {

const Partition kTriangles = canonicalize({0, 0, 0, 1, 1, 1});

Partition apply_perm(const Partition& p, const std::vector<int>& perm) {
    std::vector<int> labels(p.labels.size());
    for (std::size_t v = 0; v < p.labels.size(); ++v) labels[perm[v]] = p.labels[v];
    return canonicalize(labels);
}

}  // namespace

TEST_CASE("node pipeline recovers the two triangles") {
    Graph g = testutil::two_triangles();
    MeasureParams params;
    const auto average = ClusteringSpec::from_name("average", 0.3);

    CHECK(adjusted_rand(kTriangles, detect_node(g, 2, "wasserman_faust", params, average)) ==
          doctest::Approx(1.0));

    params.ppmi_alpha = 1.0;
    params.ppmi_len = 5;
    const auto genie = ClusteringSpec::from_name("genie", 0.1);
    CHECK(adjusted_rand(kTriangles, detect_node(g, 2, "ppmi", params, genie)) ==
          doctest::Approx(1.0));

    CHECK(detect_node(g, 1, "overlap", params, average).k == 1);
}

TEST_CASE("spectral pipeline recovers the two triangles") {
    Graph g = testutil::two_triangles();
    MeasureParams params;
    params.beta = 0.3;
    const auto ward = ClusteringSpec::from_name("ward", 0.3);
    CHECK(adjusted_rand(kTriangles, detect_spectral(g, 2, "katz", params, ward)) ==
          doctest::Approx(1.0));
    CHECK(detect_spectral(g, 6, "katz", params, ward).k == 6);
    CHECK_THROWS_AS(detect_spectral(g, 7, "katz", params, ward), ArgumentError);
}

TEST_CASE("representation pipeline recovers the two triangles") {
    Graph g = testutil::two_triangles();
    const auto ward = ClusteringSpec::from_name("ward", 0.3);
    TrainConfig config;
    config.dim = 2;
    config.seed = 19;
    CHECK(adjusted_rand(kTriangles, detect_representation(g, 2, "deepwalk", config, ward)) ==
          doctest::Approx(1.0));
    // with c components the first c-1 non-trivial eigenvectors are the kernel
    // indicators; extra dimensions pick up within-component structure
    TrainConfig le_config = config;
    le_config.dim = 1;
    CHECK(adjusted_rand(kTriangles,
                        detect_representation(g, 2, "laplacian_eigenmaps", le_config, ward)) ==
          doctest::Approx(1.0));
    CHECK(detect_representation(g, 1, "laplacian_eigenmaps", le_config, ward).k == 1);
}

TEST_CASE("pipelines are deterministic") {
    Rng rng(61);
    Graph g = testutil::random_graph(12, 0.4, rng, true);
    MeasureParams params;
    const auto genie = ClusteringSpec::from_name("genie", 0.3);
    CHECK(detect_node(g, 3, "ppmi", params, genie) == detect_node(g, 3, "ppmi", params, genie));

    TrainConfig config;
    config.dim = 3;
    config.seed = 8;
    CHECK(detect_representation(g, 3, "node2vec", config, genie) ==
          detect_representation(g, 3, "node2vec", config, genie));
}

TEST_CASE("exactly K communities for every K") {
    Rng rng(67);
    Graph g = testutil::random_graph(10, 0.45, rng, true);
    MeasureParams params;
    const auto average = ClusteringSpec::from_name("average", 0.3);
    for (std::size_t k = 1; k <= 10; ++k)
        CHECK(detect_node(g, k, "rooted_pagerank", params, average).k == static_cast<int>(k));
}

TEST_CASE("spectral pipeline is permutation equivariant") {
    Rng rng(71);
    for (int t = 0; t < 6; ++t) {
        Graph g = testutil::random_graph(9, 0.45, rng, true);
        const auto perm = testutil::random_permutation(9, rng);
        Graph pg = testutil::permute_graph(g, perm);
        MeasureParams params;
        const auto average = ClusteringSpec::from_name("average", 0.3);
        Partition base = detect_spectral(g, 3, "k_step", params, average);
        Partition permuted = detect_spectral(pg, 3, "k_step", params, average);
        CHECK(adjusted_rand(apply_perm(base, perm), permuted) == doctest::Approx(1.0));
    }
}

TEST_CASE("node pipeline is permutation equivariant") {
    Rng rng(73);
    for (int t = 0; t < 6; ++t) {
        Graph g = testutil::random_graph(10, 0.4, rng, true);
        const auto perm = testutil::random_permutation(10, rng);
        Graph pg = testutil::permute_graph(g, perm);
        // rooted pagerank gives generically distinct values; coarse measures
        // such as adamic-adar produce ties whose resolution is id-dependent
        MeasureParams params;
        const auto average = ClusteringSpec::from_name("average", 0.3);
        Partition base = detect_node(g, 3, "rooted_pagerank", params, average);
        Partition permuted = detect_node(pg, 3, "rooted_pagerank", params, average);
        CHECK(adjusted_rand(apply_perm(base, perm), permuted) == doctest::Approx(1.0));
    }
}

TEST_CASE("component recovery on a three-component graph") {
    // three triangles
    Graph g(9, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {6, 7}, {6, 8}, {7, 8}});
    const Partition truth = canonicalize({0, 0, 0, 1, 1, 1, 2, 2, 2});
    MeasureParams params;
    const auto average = ClusteringSpec::from_name("average", 0.3);
    for (const char* measure : {"wasserman_faust", "adamic_adar", "overlap", "k_step",
                                "rooted_pagerank", "ppmi"})
        CHECK(adjusted_rand(truth, detect_node(g, 3, measure, params, average)) ==
              doctest::Approx(1.0));

    TrainConfig config;
    config.dim = 3;
    config.seed = 2;
    for (const char* method : {"hope_rooted_pagerank", "deepwalk", "node2vec", "dngr"})
        CHECK(adjusted_rand(truth, detect_representation(g, 3, method, config, average)) ==
              doctest::Approx(1.0));
    // eigenmaps: two kernel indicators are enough; grarep: dim is split across
    // the three transition orders, so give each order two dimensions
    TrainConfig le_config = config;
    le_config.dim = 2;
    CHECK(adjusted_rand(truth, detect_representation(g, 3, "laplacian_eigenmaps", le_config,
                                                     average)) == doctest::Approx(1.0));
    TrainConfig grarep_config = config;
    grarep_config.dim = 6;
    CHECK(adjusted_rand(truth, detect_representation(g, 3, "grarep", grarep_config, average)) ==
          doctest::Approx(1.0));
}

TEST_CASE("unknown names are argument errors") {
    Graph g = testutil::triangle();
    MeasureParams params;
    const auto average = ClusteringSpec::from_name("average", 0.3);
    CHECK_THROWS_AS(detect_node(g, 2, "cosine", params, average), ArgumentError);
    TrainConfig config;
    CHECK_THROWS_AS(detect_representation(g, 2, "sdne", config, average), ArgumentError);
    CHECK_THROWS_AS(ClusteringSpec::from_name("median", 0.3), ArgumentError);
}

TEST_CASE("row distances are plain euclidean distances") {
    lin::Matrix z(3, 2);
    z << 0, 0, 3, 4, 0, 1;
    const lin::Matrix d = row_distances(z);
    CHECK(d(0, 1) == doctest::Approx(5.0));
    CHECK(d(0, 2) == doctest::Approx(1.0));
    CHECK(d.diagonal().isZero());
    CHECK(d.isApprox(d.transpose()));
}
