#include "commkit/metrics.hpp"

#include <algorithm>
#include <unordered_set>

#include "commkit/errors.hpp"

namespace commkit {

namespace {

double choose2(double x) { return x * (x - 1.0) / 2.0; }

}  // namespace

double adjusted_rand(const Partition& reference, const Partition& found) {
    const std::size_t n = reference.labels.size();
    if (n != found.labels.size())
        throw ArgumentError("adjusted_rand: partitions cover different vertex sets");
    const int ku = reference.k;
    const int kv = found.k;
    std::vector<std::vector<long>> m(ku, std::vector<long>(kv, 0));
    for (std::size_t i = 0; i < n; ++i) ++m[reference.labels[i]][found.labels[i]];

    double sum_cells = 0.0;
    std::vector<long> row(ku, 0), col(kv, 0);
    for (int u = 0; u < ku; ++u)
        for (int v = 0; v < kv; ++v) {
            sum_cells += choose2(static_cast<double>(m[u][v]));
            row[u] += m[u][v];
            col[v] += m[u][v];
        }
    double sum_rows = 0.0, sum_cols = 0.0;
    for (long r : row) sum_rows += choose2(static_cast<double>(r));
    for (long c : col) sum_cols += choose2(static_cast<double>(c));

    const double pairs = choose2(static_cast<double>(n));
    const double numerator = pairs * sum_cells - sum_rows * sum_cols;
    const double denominator = 0.5 * pairs * (sum_rows + sum_cols) - sum_rows * sum_cols;
    if (denominator == 0.0) return 1.0;  // both partitions trivially agree
    return numerator / denominator;
}

double modularity(const Graph& g, const Partition& partition) {
    if (g.edge_count() == 0)
        throw MethodUndefinedError("modularity: undefined on edgeless graphs");
    if (partition.labels.size() != g.vertex_count())
        throw ArgumentError("modularity: partition size does not match graph");
    const double two_m = 2.0 * static_cast<double>(g.edge_count());
    // Q = (1/2m) sum_{i,j} (A_ij - k_i k_j / 2m) delta(C_i, C_j)
    // = (1/2m) (2 * intra_edges) - sum_c (deg_c / 2m)^2
    std::vector<double> degree_per_community(partition.k, 0.0);
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        degree_per_community[partition.labels[v]] += static_cast<double>(g.degree(v));
    double q = 0.0;
    for (auto [u, v] : g.edges())
        if (partition.labels[u] == partition.labels[v]) q += 2.0;
    q /= two_m;
    for (double dc : degree_per_community) q -= (dc / two_m) * (dc / two_m);
    return q;
}

double intra_density(const Graph& g, const std::vector<int>& subset) {
    if (subset.size() < 2)
        throw MethodUndefinedError("intra_density: subset must contain at least 2 vertices");
    std::unordered_set<int> in(subset.begin(), subset.end());
    long internal = 0;
    for (auto [u, v] : g.edges())
        if (in.count(u) && in.count(v)) ++internal;
    return static_cast<double>(internal) / choose2(static_cast<double>(in.size()));
}

double inter_density(const Graph& g, const std::vector<int>& subset) {
    std::unordered_set<int> in(subset.begin(), subset.end());
    if (in.empty() || in.size() >= g.vertex_count())
        throw MethodUndefinedError("inter_density: subset must be a proper nonempty subset");
    long crossing = 0;
    for (auto [u, v] : g.edges())
        if (in.count(u) + in.count(v) == 1) ++crossing;
    const double nh = static_cast<double>(in.size());
    const double n = static_cast<double>(g.vertex_count());
    return static_cast<double>(crossing) / (nh * (n - nh));
}

}  // namespace commkit
