#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pebbling {

using Vertex = int;

/// Undirected edge, stored with `first < second`.
using Edge = std::pair<Vertex, Vertex>;

/// Hop distances between every pair of vertices of a graph.
class DistanceMatrix
{
public:
    static constexpr int infinite = std::numeric_limits<int>::max();

    DistanceMatrix() = default;
    DistanceMatrix(int order, std::vector<int> entries);

    int order() const noexcept { return order_; }

    /// Number of edges on a shortest u-v path, or `infinite`.
    int operator()(Vertex u, Vertex v) const
    {
        return entries_[static_cast<std::size_t>(u) * order_ + v];
    }

    /// Largest finite entry (0 for the empty or single-vertex graph).
    int max_finite() const noexcept { return max_finite_; }
    bool all_finite() const noexcept { return all_finite_; }

private:
    int order_ = 0;
    std::vector<int> entries_;
    int max_finite_ = 0;
    bool all_finite_ = true;
};

/// Immutable simple undirected graph on vertices 0..order-1.
///
/// Adjacency is kept both as sorted neighbour lists and as a dense
/// adjacency matrix; all-pairs distances are computed once at construction.
class Graph
{
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicates (in either orientation)
    /// are merged; self-loops and out-of-range endpoints throw
    /// PreconditionError.
    Graph(int order, std::span<const Edge> edges);

    int order() const noexcept { return order_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    std::span<const Vertex> neighbors(Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const
    {
        return matrix_[static_cast<std::size_t>(u) * order_ + v] != 0;
    }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    /// Edges sorted lexicographically, each with first < second.
    const std::vector<Edge> & edges() const noexcept { return edges_; }

    const DistanceMatrix & distances() const noexcept { return distances_; }
    int distance(Vertex u, Vertex v) const { return distances_(u, v); }

    bool contains(Vertex v) const noexcept { return v >= 0 && v < order_; }

    friend bool operator==(const Graph & a, const Graph & b)
    {
        return a.order_ == b.order_ && a.edges_ == b.edges_;
    }

private:
    int order_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::uint8_t> matrix_;
    DistanceMatrix distances_;
};

/// BFS hop distances; unreachable pairs are DistanceMatrix::infinite.
DistanceMatrix all_pairs_distances(const Graph & g);

/// Throws PreconditionError on the empty graph.
int min_degree(const Graph & g);
int max_degree(const Graph & g);

/// Largest distance, or DistanceMatrix::infinite when disconnected.
int diameter(const Graph & g);

bool is_connected(const Graph & g);

/// Open neighbourhood as a sorted vector. Throws on an invalid vertex.
std::vector<Vertex> neighborhood(const Graph & g, Vertex v);

/// Vertex sets of the connected components, each sorted, ordered by their
/// smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph & g);

/// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph & g, std::span<const Vertex> vertices);

/// Parses the edge-list text format:
///
///     # comment
///     n 4
///     0 1
///     1 2
///
/// The "n <count>" header must precede every edge line. Throws FormatError
/// carrying the offending line number.
Graph parse_edge_list(std::string_view text);

/// Canonical edge-list text: header, then one sorted edge per line.
std::string format_edge_list(const Graph & g);

/// FNV-1a hash over the order and sorted edge list.
std::uint64_t fingerprint(const Graph & g);

} // namespace pebbling
