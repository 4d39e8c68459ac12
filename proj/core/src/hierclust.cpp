#include "commkit/hierclust.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>
#include <unordered_map>

#include "commkit/errors.hpp"

namespace commkit {

namespace {

using lin::Matrix;

void validate_dissimilarity(const Matrix& d) {
    if (d.rows() != d.cols() || d.rows() < 1)
        throw ArgumentError("clustering: dissimilarity matrix must be square and nonempty");
    const double scale = std::max(1.0, d.cwiseAbs().maxCoeff());
    if ((d - d.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
        throw ArgumentError("clustering: dissimilarity matrix must be symmetric");
    if (d.minCoeff() < 0.0)
        throw ArgumentError("clustering: dissimilarity matrix must be nonnegative");
}

// Active-cluster bookkeeping shared by all criteria. Clusters are referred
// to by stable ids (leaves 0..n-1, merges n..2n-2); `pos` holds the ids of
// the currently active clusters.
struct Agglomerator {
    std::vector<int> ids;
    std::vector<std::size_t> sizes;
    Matrix stat;            // criterion-specific pairwise statistic
    std::vector<double> within;  // ward only: sum of d^2 over unordered in-cluster pairs

    explicit Agglomerator(const Matrix& d, Linkage method) {
        const std::size_t n = static_cast<std::size_t>(d.rows());
        ids.resize(n);
        std::iota(ids.begin(), ids.end(), 0);
        sizes.assign(n, 1);
        if (method == Linkage::ward) {
            stat = d.array().square().matrix();
            within.assign(n, 0.0);
        } else {
            stat = d;
        }
    }

    std::size_t active() const { return ids.size(); }

    double criterion(Linkage method, std::size_t i, std::size_t j) const {
        switch (method) {
            case Linkage::single:
            case Linkage::complete:
                return stat(i, j);
            case Linkage::average:
                return stat(i, j) / static_cast<double>(sizes[i] * sizes[j]);
            case Linkage::ward:
                // dispersion of the candidate merged cluster: the ordered-pair
                // d^2 sum over the union divided by its cardinality
                return 2.0 * (within[i] + within[j] + stat(i, j)) /
                       static_cast<double>(sizes[i] + sizes[j]);
        }
        return 0.0;
    }

    // Smallest criterion value; ties resolved by the smallest (a, b) id pair.
    std::pair<std::size_t, std::size_t> best_pair(
        Linkage method, const std::vector<char>* allowed = nullptr) const {
        double best = std::numeric_limits<double>::infinity();
        std::size_t bi = 0, bj = 0;
        int best_a = -1, best_b = -1;
        for (std::size_t i = 0; i < active(); ++i) {
            for (std::size_t j = i + 1; j < active(); ++j) {
                if (allowed && !(*allowed)[i] && !(*allowed)[j]) continue;
                const double v = criterion(method, i, j);
                const int a = std::min(ids[i], ids[j]);
                const int b = std::max(ids[i], ids[j]);
                if (v < best ||
                    (v == best && (a < best_a || (a == best_a && b < best_b)))) {
                    best = v;
                    bi = i;
                    bj = j;
                    best_a = a;
                    best_b = b;
                }
            }
        }
        return {bi, bj};
    }

    // Merges positions i and j (i < j) into position i under `new_id`.
    void merge(Linkage method, std::size_t i, std::size_t j, int new_id) {
        const std::size_t last = active() - 1;
        for (std::size_t k = 0; k < active(); ++k) {
            if (k == i || k == j) continue;
            double combined = 0.0;
            switch (method) {
                case Linkage::single:
                    combined = std::min(stat(i, k), stat(j, k));
                    break;
                case Linkage::complete:
                    combined = std::max(stat(i, k), stat(j, k));
                    break;
                case Linkage::average:
                case Linkage::ward:
                    combined = stat(i, k) + stat(j, k);
                    break;
            }
            stat(i, k) = stat(k, i) = combined;
        }
        if (method == Linkage::ward) within[i] += within[j] + stat(i, j);
        sizes[i] += sizes[j];
        ids[i] = new_id;
        // swap-remove position j
        if (j != last) {
            ids[j] = ids[last];
            sizes[j] = sizes[last];
            if (method == Linkage::ward) within[j] = within[last];
            for (std::size_t k = 0; k < active(); ++k) {
                stat(j, k) = stat(last, k);
                stat(k, j) = stat(k, last);
            }
            stat(j, j) = 0.0;
        }
        ids.pop_back();
        sizes.pop_back();
        if (method == Linkage::ward) within.pop_back();
    }
};

}  // namespace

Linkage linkage_from_name(const std::string& name) {
    if (name == "single") return Linkage::single;
    if (name == "complete") return Linkage::complete;
    if (name == "average") return Linkage::average;
    if (name == "ward") return Linkage::ward;
    throw ArgumentError("unknown linkage '" + name + "'");
}

Dendrogram linkage_cluster(const Matrix& d, Linkage method) {
    validate_dissimilarity(d);
    const std::size_t n = static_cast<std::size_t>(d.rows());
    Agglomerator agg(d, method);
    Dendrogram dendro{{}, n};
    dendro.merges.reserve(n - 1);
    for (std::size_t step = 0; step + 1 < n; ++step) {
        auto [i, j] = agg.best_pair(method);
        if (i > j) std::swap(i, j);
        const int new_id = static_cast<int>(n + step);
        const double value = agg.criterion(method, i, j);
        dendro.merges.push_back({std::min(agg.ids[i], agg.ids[j]),
                                 std::max(agg.ids[i], agg.ids[j]), value, new_id});
        agg.merge(method, i, j, new_id);
    }
    return dendro;
}

double gini_index(const std::vector<std::size_t>& sizes) {
    if (sizes.empty()) throw ArgumentError("gini_index: empty size list");
    for (std::size_t c : sizes)
        if (c == 0) throw ArgumentError("gini_index: cluster sizes must be positive");
    const std::size_t k = sizes.size();
    if (k == 1) return 0.0;
    std::vector<std::size_t> sorted(sizes);
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    double num = 0.0, total = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        num += (static_cast<double>(k) - 2.0 * (i + 1) + 1.0) * static_cast<double>(sorted[i]);
        total += static_cast<double>(sorted[i]);
    }
    return num / (static_cast<double>(k - 1) * total);
}

Dendrogram genie_cluster(const Matrix& d, double gini_threshold) {
    if (!(gini_threshold > 0.0 && gini_threshold <= 1.0))
        throw ArgumentError("genie_cluster: gini threshold must lie in (0, 1]");
    validate_dissimilarity(d);
    const std::size_t n = static_cast<std::size_t>(d.rows());
    Agglomerator agg(d, Linkage::single);
    Dendrogram dendro{{}, n};
    dendro.merges.reserve(n - 1);
    for (std::size_t step = 0; step + 1 < n; ++step) {
        const double gini = gini_index(agg.sizes);
        std::pair<std::size_t, std::size_t> pick;
        if (gini > gini_threshold) {
            const std::size_t min_size = *std::min_element(agg.sizes.begin(), agg.sizes.end());
            std::vector<char> allowed(agg.active());
            for (std::size_t i = 0; i < agg.active(); ++i)
                allowed[i] = (agg.sizes[i] == min_size);
            pick = agg.best_pair(Linkage::single, &allowed);
        } else {
            pick = agg.best_pair(Linkage::single);
        }
        auto [i, j] = pick;
        if (i > j) std::swap(i, j);
        const int new_id = static_cast<int>(n + step);
        const double value = agg.criterion(Linkage::single, i, j);
        dendro.merges.push_back({std::min(agg.ids[i], agg.ids[j]),
                                 std::max(agg.ids[i], agg.ids[j]), value, new_id});
        agg.merge(Linkage::single, i, j, new_id);
    }
    return dendro;
}

Partition canonicalize(const std::vector<int>& raw_labels) {
    std::unordered_map<int, int> remap;
    Partition p;
    p.labels.reserve(raw_labels.size());
    for (int raw : raw_labels) {
        auto [it, inserted] = remap.try_emplace(raw, static_cast<int>(remap.size()));
        p.labels.push_back(it->second);
    }
    p.k = static_cast<int>(remap.size());
    return p;
}

Partition cut(const Dendrogram& dendrogram, std::size_t k) {
    const std::size_t n = dendrogram.n_leaves;
    if (k < 1 || k > n)
        throw ArgumentError("cut: K must lie in 1.." + std::to_string(n));
    // union-find over cluster ids, replaying all but the last K-1 merges
    std::vector<int> parent(2 * n - 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    const std::size_t applied = n - k;
    for (std::size_t m = 0; m < applied; ++m) {
        const Merge& mg = dendrogram.merges[m];
        parent[find(mg.a)] = mg.new_id;
        parent[find(mg.b)] = mg.new_id;
    }
    std::vector<int> raw(n);
    for (std::size_t v = 0; v < n; ++v) raw[v] = find(static_cast<int>(v));
    return canonicalize(raw);
}

void Dendrogram::dump(std::ostream& out) const {
    const auto old_precision = out.precision(17);
    for (const Merge& m : merges)
        out << m.a << ' ' << m.b << ' ' << m.value << ' ' << m.new_id << '\n';
    out.precision(old_precision);
}

void Partition::dump(std::ostream& out) const {
    for (std::size_t v = 0; v < labels.size(); ++v) out << v << ' ' << labels[v] << '\n';
}

}  // namespace commkit
