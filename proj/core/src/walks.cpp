#include <algorithm>
#include <vector>

#include "commkit/embedding.hpp"
#include "commkit/errors.hpp"
#include "commkit/rng.hpp"

namespace commkit {

namespace {

int uniform_neighbor(const Graph& g, int v, Rng& rng) {
    const auto& nb = g.neighbors(v);
    std::uniform_int_distribution<std::size_t> pick(0, nb.size() - 1);
    return nb[pick(rng)];
}

// Second-order step: unnormalized weight 1/p for returning to prev, 1 for a
// neighbour of prev, 1/q otherwise.
int node2vec_step(const Graph& g, int prev, int cur, double p, double q, Rng& rng) {
    const auto& nb = g.neighbors(cur);
    std::vector<double> weights(nb.size());
    double total = 0.0;
    for (std::size_t i = 0; i < nb.size(); ++i) {
        const int x = nb[i];
        double w;
        if (x == prev)
            w = 1.0 / p;
        else if (g.has_edge(x, prev))
            w = 1.0;
        else
            w = 1.0 / q;
        weights[i] = w;
        total += w;
    }
    std::uniform_real_distribution<double> pick(0.0, total);
    double r = pick(rng);
    for (std::size_t i = 0; i < nb.size(); ++i) {
        r -= weights[i];
        if (r <= 0.0) return nb[i];
    }
    return nb.back();
}

}  // namespace

WalkCorpus generate_walks(const Graph& g, std::size_t walks_per_vertex, std::size_t walk_length,
                          WalkMode mode, double p, double q, std::uint64_t seed) {
    if (walk_length < 1) throw ArgumentError("generate_walks: walk length must be >= 1");
    if (mode == WalkMode::node2vec && (p <= 0.0 || q <= 0.0))
        throw ArgumentError("generate_walks: node2vec biases p, q must be positive");

    WalkCorpus corpus;
    corpus.walks_per_vertex = walks_per_vertex;
    corpus.walk_length = walk_length;
    corpus.seed = seed;
    corpus.walks.reserve(g.vertex_count() * walks_per_vertex);

    // Independent seeded sub-stream per root so results do not depend on
    // scheduling if roots are processed in parallel.
    for (std::size_t root = 0; root < g.vertex_count(); ++root) {
        Rng rng(derive_seed(seed, root));
        for (std::size_t rep = 0; rep < walks_per_vertex; ++rep) {
            std::vector<int> walk{static_cast<int>(root)};
            if (g.degree(static_cast<int>(root)) > 0) {
                walk.reserve(walk_length);
                while (walk.size() < walk_length) {
                    const int cur = walk.back();
                    if (g.degree(cur) == 0) break;
                    int next;
                    if (mode == WalkMode::uniform || walk.size() == 1)
                        next = uniform_neighbor(g, cur, rng);
                    else
                        next = node2vec_step(g, walk[walk.size() - 2], cur, p, q, rng);
                    walk.push_back(next);
                }
            }
            corpus.walks.push_back(std::move(walk));
        }
    }
    return corpus;
}

}  // namespace commkit
