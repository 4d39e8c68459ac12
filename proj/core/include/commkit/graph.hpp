#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <iosfwd>
#include <utility>
#include <vector>

namespace commkit {

/// Undirected simple graph with contiguous vertex ids 0..n-1.
/// Immutable after construction; no self-loops, no duplicate edges.
class Graph {
public:
    using Edge = std::pair<int, int>;  // stored with first < second

    Graph(std::size_t n_vertices, std::vector<Edge> edges);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    std::size_t degree(int v) const { return adj_[v].size(); }
    bool has_edge(int u, int v) const;
    bool has_isolated_vertex() const;

    /// Dense symmetric 0/1 adjacency matrix with zero diagonal.
    Eigen::MatrixXd adjacency() const;
    /// Diagonal degree matrix D.
    Eigen::MatrixXd degree_matrix() const;
    /// Combinatorial Laplacian L = D - A.
    Eigen::MatrixXd laplacian() const;

    void serialize(std::ostream& out) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    std::size_t n_;
    std::vector<Edge> edges_;            // sorted, canonical (u < v)
    std::vector<std::vector<int>> adj_;  // sorted neighbour lists
};

/// Parses the edge-list text format: one "u v" pair per line, lines starting
/// with '#' ignored except an optional "# vertices: N" header, blank lines
/// ignored. Throws ParseError / ValidationError with a line number.
Graph load_edge_list(std::istream& in);

}  // namespace commkit
