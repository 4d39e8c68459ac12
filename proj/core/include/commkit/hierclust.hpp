#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "commkit/linalg.hpp"

namespace commkit {

enum class Linkage { single, complete, average, ward };

Linkage linkage_from_name(const std::string& name);  // also accepts "genie"

struct Merge {
    int a;         // cluster ids being merged, a < b
    int b;
    double value;  // linkage value at the merge
    int new_id;    // n_leaves + step
};

/// Merge history of an agglomerative clustering run. Leaves are clusters
/// 0..n_leaves-1; merge k creates cluster n_leaves+k.
struct Dendrogram {
    std::vector<Merge> merges;
    std::size_t n_leaves;

    void dump(std::ostream& out) const;  // one merge per line: "a b value new_id"
};

/// Flat assignment of vertices to K communities, labels canonicalized by
/// first occurrence.
struct Partition {
    std::vector<int> labels;
    int k;

    void dump(std::ostream& out) const;  // one line per vertex: "vertex_id community_id"
    bool operator==(const Partition&) const = default;
};

Partition canonicalize(const std::vector<int>& raw_labels);

/// Agglomerative clustering with the classical linkage criteria. Ward is the
/// set-sum-of-squares form D = (1/|Cm u Cn|) sum_{s,t in Cm u Cn} d(s,t)^2
/// (ordered pairs, i.e. the merged cluster's per-point dispersion), not the
/// Lance-Williams recurrence. Ties broken by the smallest (a, b) cluster-id
/// pair.
Dendrogram linkage_cluster(const lin::Matrix& d, Linkage method);

/// Normalized Gini index of cluster sizes; 0 for a single cluster or equal
/// sizes, at most 1.
double gini_index(const std::vector<std::size_t>& sizes);

/// Genie: single linkage constrained so the Gini index of cluster sizes does
/// not drift above g; when it does, only pairs involving a minimum-cardinality
/// cluster may merge.
Dendrogram genie_cluster(const lin::Matrix& d, double gini_threshold);

/// Partition obtained by undoing the last K-1 merges.
Partition cut(const Dendrogram& dendrogram, std::size_t k);

}  // namespace commkit
