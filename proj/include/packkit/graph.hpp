#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "packkit/error.hpp"

namespace packkit {

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Self-loops are rejected, duplicate edges are collapsed. Immutable by
/// convention once built; all algorithms take it by const reference.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const { return m_; }

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

    /// All edges as (u,v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

private:
    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

/// All-pairs hop distances. Unreachable pairs hold `unreachable`, chosen so
/// that the packing condition `dist(u,v) <= color` is a single comparison
/// with no special case for disconnected graphs.
class DistanceMatrix {
public:
    static constexpr int unreachable = std::numeric_limits<int>::max();

    DistanceMatrix() = default;
    explicit DistanceMatrix(int n)
        : n_(n), dist_(static_cast<size_t>(n) * static_cast<size_t>(n), unreachable) {}

    int n() const { return n_; }
    int at(int u, int v) const { return dist_[static_cast<size_t>(u) * n_ + v]; }
    void set(int u, int v, int d) { dist_[static_cast<size_t>(u) * n_ + v] = d; }

    /// Largest finite entry; 0 for a single vertex.
    int max_finite() const;

private:
    int n_ = 0;
    std::vector<int> dist_;
};

// ---- parsing / serialization --------------------------------------------
//
// Edge-list format: first line "n m", then m lines "u v" with 0 <= u,v < n.
// Lines starting with '#' are comments. The serializer emits edges sorted
// lexicographically, so parse(serialize(g)) == g.

Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

// ---- distances -----------------------------------------------------------

/// Hop distances from one source (any size graph).
std::vector<int> bfs_from(const Graph& g, int source);

/// Full n x n table. Guarded at 4096 vertices; everything in this toolkit
/// runs far below that, use bfs_from for anything bigger.
DistanceMatrix bfs_distances(const Graph& g);

bool is_connected(const Graph& g);

/// Max finite distance; nullopt means the graph is disconnected.
std::optional<int> diameter(const Graph& g);

// ---- generators ----------------------------------------------------------

Graph make_path(int n);
Graph make_cycle(int n);     // n >= 3
Graph make_complete(int n);
Graph make_star(int n);      // center 0, leaves 1..n-1
Graph make_grid(int rows, int cols);
Graph random_gnp(int n, double p, std::uint64_t seed);

} // namespace packkit
