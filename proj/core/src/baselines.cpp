#include "commkit/baselines.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "commkit/errors.hpp"
#include "commkit/rng.hpp"

namespace commkit {

namespace {

// One Louvain level on a weighted graph. Self-loop weights are stored as
// ordered-pair weights w_ii (twice the internal edge weight).
struct WeightedGraph {
    std::vector<std::vector<std::pair<int, double>>> adj;  // excludes self-loops
    std::vector<double> self_weight;                        // w_ii
    std::vector<double> strength;                           // k_i
    double two_m = 0.0;

    explicit WeightedGraph(std::size_t n) : adj(n), self_weight(n, 0.0), strength(n, 0.0) {}

    void finalize() {
        for (std::size_t i = 0; i < adj.size(); ++i) {
            double k = self_weight[i];
            for (auto& [j, w] : adj[i]) k += w;
            strength[i] = k;
            two_m += k;
        }
    }
};

std::vector<int> louvain_level(const WeightedGraph& wg, Rng& rng, bool& moved_any) {
    const std::size_t n = wg.adj.size();
    std::vector<int> comm(n);
    std::iota(comm.begin(), comm.end(), 0);
    std::vector<double> tot(wg.strength);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);

    moved_any = false;
    bool improved = true;
    while (improved) {
        improved = false;
        std::shuffle(order.begin(), order.end(), rng);
        for (int i : order) {
            const int old_comm = comm[i];
            std::unordered_map<int, double> links;  // community -> weight from i
            links[old_comm];                        // candidate even with zero link
            for (auto& [j, w] : wg.adj[i]) links[comm[j]] += w;

            tot[old_comm] -= wg.strength[i];
            const double m = wg.two_m / 2.0;
            auto gain = [&](int c) { return links[c] - tot[c] * wg.strength[i] / (2.0 * m); };

            // move only on a strict improvement; near-ties keep the smaller id
            int best_comm = old_comm;
            double best_gain = gain(old_comm);
            for (auto& [c, w] : links) {
                const double gv = gain(c);
                if (gv > best_gain + 1e-12) {
                    best_gain = gv;
                    best_comm = c;
                } else if (best_comm != old_comm && gv > best_gain - 1e-12 && c < best_comm) {
                    best_comm = c;
                }
            }
            tot[best_comm] += wg.strength[i];
            comm[i] = best_comm;
            if (best_comm != old_comm) {
                improved = true;
                moved_any = true;
            }
        }
    }
    return comm;
}

}  // namespace

Partition louvain(const Graph& g, std::uint64_t seed) {
    if (g.edge_count() == 0)
        throw MethodUndefinedError("louvain: undefined on edgeless graphs");
    const std::size_t n = g.vertex_count();
    Rng rng(seed);

    WeightedGraph wg(n);
    for (auto [u, v] : g.edges()) {
        wg.adj[u].emplace_back(v, 1.0);
        wg.adj[v].emplace_back(u, 1.0);
    }
    wg.finalize();

    std::vector<int> assignment(n);
    std::iota(assignment.begin(), assignment.end(), 0);

    while (true) {
        bool moved = false;
        std::vector<int> comm = louvain_level(wg, rng, moved);
        Partition level = canonicalize(comm);
        for (std::size_t v = 0; v < n; ++v) assignment[v] = level.labels[assignment[v]];
        if (!moved || static_cast<std::size_t>(level.k) == wg.adj.size()) break;

        // aggregate communities into a coarser weighted graph
        WeightedGraph next(level.k);
        std::vector<std::map<int, double>> acc(level.k);
        for (std::size_t i = 0; i < wg.adj.size(); ++i) {
            const int ci = level.labels[i];
            next.self_weight[ci] += wg.self_weight[i];
            for (auto& [j, w] : wg.adj[i]) {
                const int cj = level.labels[j];
                if (ci == cj)
                    next.self_weight[ci] += w;  // both directions visited -> ordered sum
                else
                    acc[ci][cj] += w;
            }
        }
        for (int c = 0; c < level.k; ++c)
            for (auto& [d, w] : acc[c]) next.adj[c].emplace_back(d, w);
        next.finalize();
        wg = std::move(next);
    }
    return canonicalize(assignment);
}

Partition label_propagation(const Graph& g, std::uint64_t seed) {
    const std::size_t n = g.vertex_count();
    Rng rng(seed);
    std::vector<int> label(n);
    std::iota(label.begin(), label.end(), 0);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);

    for (int sweep = 0; sweep < 100; ++sweep) {
        std::shuffle(order.begin(), order.end(), rng);
        bool stable = true;
        for (int v : order) {
            if (g.degree(v) == 0) continue;
            std::unordered_map<int, int> counts;
            int max_count = 0;
            for (int u : g.neighbors(v)) max_count = std::max(max_count, ++counts[label[u]]);
            std::vector<int> modes;
            for (auto& [lab, c] : counts)
                if (c == max_count) modes.push_back(lab);
            std::sort(modes.begin(), modes.end());
            if (std::find(modes.begin(), modes.end(), label[v]) == modes.end()) {
                stable = false;
                std::uniform_int_distribution<std::size_t> pick(0, modes.size() - 1);
                label[v] = modes[pick(rng)];
            }
        }
        if (stable) break;
    }
    return canonicalize(label);
}

Partition greedy_modularity(const Graph& g) {
    if (g.edge_count() == 0)
        throw MethodUndefinedError("greedy_modularity: undefined on edgeless graphs");
    const std::size_t n = g.vertex_count();
    const double m = static_cast<double>(g.edge_count());

    // e(i,j): fraction of edges between communities; a(i): degree fraction
    std::vector<std::map<int, double>> e(n);
    std::vector<double> a(n, 0.0);
    std::vector<char> alive(n, 1);
    for (auto [u, v] : g.edges()) {
        e[u][v] += 1.0 / m;
        e[v][u] += 1.0 / m;
        a[u] += 0.5 / m;
        a[v] += 0.5 / m;
    }
    std::vector<int> comm(n);
    std::iota(comm.begin(), comm.end(), 0);

    while (true) {
        double best_dq = 0.0;
        int bi = -1, bj = -1;
        for (std::size_t i = 0; i < n; ++i) {
            if (!alive[i]) continue;
            for (auto& [j, eij] : e[i]) {
                if (static_cast<std::size_t>(j) <= i || !alive[j]) continue;
                const double dq = eij - 2.0 * a[i] * a[j];
                if (dq > best_dq + 1e-15) {
                    best_dq = dq;
                    bi = static_cast<int>(i);
                    bj = j;
                }
            }
        }
        if (bi < 0) break;
        // merge bj into bi
        for (auto& [k, w] : e[bj]) {
            if (k == bi) continue;
            e[bi][k] += w;
            e[k][bi] += w;
            e[k].erase(bj);
        }
        e[bi].erase(bj);
        a[bi] += a[bj];
        alive[bj] = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (comm[v] == bj) comm[v] = bi;
    }
    return canonicalize(comm);
}

}  // namespace commkit
