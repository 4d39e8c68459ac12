#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <sstream>

#include "commkit/errors.hpp"
#include "commkit/graph.hpp"
#include "commkit/linalg.hpp"
#include "test_util.hpp"

using namespace commkit;

TEST_CASE("edge list parsing") {
    std::istringstream in("0 1\n1 2\n");
    Graph g = load_edge_list(in);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edges() == std::vector<Graph::Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("duplicate and reversed edges collapse") {
    std::istringstream in("0 1\n1 0\n");
    Graph g = load_edge_list(in);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("self-loop rejected with line number") {
    std::istringstream in("2 2\n");
    try {
        load_edge_list(in);
        FAIL("expected validation error");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("1") != std::string::npos);
    }
}

TEST_CASE("malformed line is a parse error") {
    std::istringstream in("0 1\nbanana\n");
    CHECK_THROWS_AS(load_edge_list(in), ParseError);
}

TEST_CASE("vertex header extends the vertex set") {
    std::istringstream in("# vertices: 5\n0 1\n");
    CHECK(load_edge_list(in).vertex_count() == 5);
}

TEST_CASE("vertex header below max id rejected") {
    std::istringstream in("# vertices: 2\n0 3\n");
    CHECK_THROWS_AS(load_edge_list(in), ValidationError);
}

TEST_CASE("adjacency matrices of the small graphs") {
    Eigen::MatrixXd p3(3, 3);
    p3 << 0, 1, 0, 1, 0, 1, 0, 1, 0;
    CHECK(testutil::path3().adjacency().isApprox(p3));

    CHECK(Graph(2, {}).adjacency().isZero());

    Eigen::MatrixXd k3 = testutil::triangle().adjacency();
    CHECK(k3.diagonal().isZero());
    CHECK(k3.sum() == doctest::Approx(6.0));
}

TEST_CASE("laplacian of the path graph") {
    Eigen::MatrixXd l(3, 3);
    l << 1, -1, 0, -1, 2, -1, 0, -1, 1;
    CHECK(testutil::path3().laplacian().isApprox(l));
    Eigen::MatrixXd d = testutil::path3().degree_matrix();
    CHECK(d.diagonal() == Eigen::Vector3d(1, 2, 1));
}

TEST_CASE("triangle laplacian eigenvalues") {
    auto eig = lin::sym_eig(testutil::triangle().laplacian());
    CHECK(eig.values(0) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(eig.values(1) == doctest::Approx(3.0));
    CHECK(eig.values(2) == doctest::Approx(3.0));
}

TEST_CASE("isolated vertex rows are zero in the laplacian") {
    Graph g(3, {{0, 1}});
    CHECK(g.laplacian().row(2).isZero());
    CHECK(g.laplacian().col(2).isZero());
}

TEST_CASE("adjacency symmetry and laplacian row sums on random graphs") {
    Rng rng(7);
    for (int t = 0; t < 25; ++t) {
        Graph g = testutil::random_graph(12, 0.3, rng);
        CHECK(g.adjacency().isApprox(g.adjacency().transpose()));
        CHECK(g.laplacian().rowwise().sum().isZero(1e-12));
    }
}

TEST_CASE("serialize round trip") {
    Rng rng(11);
    for (int t = 0; t < 25; ++t) {
        Graph g = testutil::random_graph(10, 0.4, rng);
        std::ostringstream out;
        g.serialize(out);
        std::istringstream in(out.str());
        CHECK(load_edge_list(in) == g);
    }
}

namespace {

int component_count(const Graph& g) {
    std::vector<int> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : g.edges()) parent[find(u)] = find(v);
    int count = 0;
    for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v)
        if (find(v) == v) ++count;
    return count;
}

}  // namespace

TEST_CASE("component count equals laplacian kernel multiplicity") {
    Rng rng(13);
    for (int t = 0; t < 20; ++t) {
        Graph g = testutil::random_graph(t % 28 + 3, 0.12, rng);
        auto eig = lin::sym_eig(g.laplacian());
        int zero_multiplicity = 0;
        for (Eigen::Index i = 0; i < eig.values.size(); ++i)
            if (std::abs(eig.values(i)) < 1e-8) ++zero_multiplicity;
        CHECK(zero_multiplicity == component_count(g));
    }
}
