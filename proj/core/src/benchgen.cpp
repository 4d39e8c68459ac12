#include "commkit/benchgen.hpp"

#include <sstream>

#include "commkit/rng.hpp"

namespace commkit {

std::string SbmSpec::id() const {
    std::ostringstream out;
    out << "sbm_c" << n_clusters << "_v" << vertices_per_cluster << "_pin" << p_in << "_pout"
        << p_out << "_s" << seed;
    return out.str();
}

LabeledGraph generate_sbm(const SbmSpec& spec) {
    const std::size_t n = spec.n_clusters * spec.vertices_per_cluster;
    Rng rng(spec.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Graph::Edge> edges;
    std::vector<int> block(n);
    for (std::size_t v = 0; v < n; ++v)
        block[v] = static_cast<int>(v / spec.vertices_per_cluster);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            const double p = (block[u] == block[v]) ? spec.p_in : spec.p_out;
            if (unit(rng) < p) edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        }
    }
    return {Graph(n, std::move(edges)), canonicalize(block)};
}

std::vector<SbmSpec> benchmark_grid() {
    static const std::size_t clusters[] = {3, 4, 5, 10};
    static const std::size_t sizes[] = {5, 10, 20};
    static const double in_densities[] = {0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    static const double out_densities[] = {0.05, 0.1, 0.2, 0.3};
    std::vector<SbmSpec> specs;
    specs.reserve(2880);
    std::uint64_t cell = 0;
    for (std::size_t c : clusters)
        for (std::size_t s : sizes)
            for (double pin : in_densities)
                for (double pout : out_densities) {
                    for (std::uint64_t rep = 0; rep < 10; ++rep)
                        specs.push_back({c, s, pin, pout, derive_seed(cell, rep)});
                    ++cell;
                }
    return specs;
}

std::vector<SbmSpec> benchmark_grid_small() {
    std::vector<SbmSpec> all = benchmark_grid();
    std::vector<SbmSpec> out;
    out.reserve(all.size() / 10);
    for (std::size_t i = 0; i < all.size(); i += 10) out.push_back(all[i]);
    return out;
}

}  // namespace commkit
