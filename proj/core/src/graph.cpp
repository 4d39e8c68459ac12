#include "commkit/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "commkit/errors.hpp"

namespace commkit {

Graph::Graph(std::size_t n_vertices, std::vector<Edge> edges)
    : n_(n_vertices), adj_(n_vertices) {
    for (auto& [u, v] : edges) {
        if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n_ ||
            static_cast<std::size_t>(v) >= n_)
            throw ValidationError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") outside vertex range 0.." + std::to_string(n_ - 1));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

bool Graph::has_isolated_vertex() const {
    for (const auto& nb : adj_)
        if (nb.empty()) return true;
    return false;
}

Eigen::MatrixXd Graph::adjacency() const {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
    for (auto [u, v] : edges_) {
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }
    return a;
}

Eigen::MatrixXd Graph::degree_matrix() const {
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n_, n_);
    for (std::size_t v = 0; v < n_; ++v) d(v, v) = static_cast<double>(degree(v));
    return d;
}

Eigen::MatrixXd Graph::laplacian() const {
    Eigen::MatrixXd l = degree_matrix();
    for (auto [u, v] : edges_) {
        l(u, v) = -1.0;
        l(v, u) = -1.0;
    }
    return l;
}

void Graph::serialize(std::ostream& out) const {
    out << "# vertices: " << n_ << '\n';
    for (auto [u, v] : edges_) out << u << ' ' << v << '\n';
}

Graph load_edge_list(std::istream& in) {
    std::vector<Graph::Edge> edges;
    long header_n = -1;
    long max_id = -1;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') {
            std::istringstream hs(line.substr(first + 1));
            std::string word;
            long n;
            if (hs >> word && word == "vertices:" && hs >> n) {
                if (n < 1)
                    throw ValidationError("line " + std::to_string(lineno) +
                                          ": vertex count must be positive");
                header_n = n;
            }
            continue;
        }
        std::istringstream ls(line);
        long u, v;
        std::string rest;
        if (!(ls >> u >> v) || (ls >> rest)) {
            throw ParseError("line " + std::to_string(lineno) + ": expected two integers, got '" +
                             line + "'");
        }
        if (u < 0 || v < 0)
            throw ParseError("line " + std::to_string(lineno) + ": negative vertex id");
        if (u == v)
            throw ValidationError("line " + std::to_string(lineno) + ": self-loop at vertex " +
                                  std::to_string(u));
        max_id = std::max({max_id, u, v});
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    long n = max_id + 1;
    if (header_n >= 0) {
        if (header_n < n)
            throw ValidationError("header declares " + std::to_string(header_n) +
                                  " vertices but edge list references vertex " +
                                  std::to_string(max_id));
        n = header_n;
    }
    if (n < 0) n = 0;
    return Graph(static_cast<std::size_t>(n), std::move(edges));
}

}  // namespace commkit
