#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "chromascope/matrix.hpp"

namespace chromascope {

/// Thrown when an edge list violates the simple-graph invariants.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Edge {
    int u = 0;
    int v = 0;

    auto operator<=>(const Edge&) const = default;
};

using VertexPair = std::pair<int, int>;

class EdgeSubset;

/// Undirected simple graph on vertices 0..n-1.
///
/// Edges are stored normalized (u < v) in lexicographic order; the position
/// of an edge in that order is its stable index, which every mask-based
/// operation relies on. Values are immutable once built.
class Graph {
public:
    Graph() = default;

    /// Empty graph on `n` vertices.
    explicit Graph(int n);

    /// Normalizes, validates and sorts `pairs`. Throws GraphError naming the
    /// offending pair on a self-loop, an out-of-range vertex or a duplicate.
    static Graph from_edge_list(int n, std::span<const VertexPair> pairs);
    static Graph from_edge_list(int n, std::initializer_list<VertexPair> pairs) {
        return from_edge_list(n, std::span<const VertexPair>(pairs.begin(), pairs.size()));
    }

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_.at(i); }

    /// Sorted neighbor list.
    const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(int u, int v) const;

    /// Index of edge {u,v} in the stable edge order, if present.
    std::optional<std::size_t> edge_index(int u, int v) const;

    /// Graph with edge `i` removed (same vertex set).
    Graph without_edge(std::size_t i) const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    // Trusts that `edges` is already normalized, unique and sorted.
    Graph(int n, std::vector<Edge> edges);
    void build_adjacency();

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;

    friend Graph subgraph_by_mask(const Graph&, const EdgeSubset&);
    friend Graph induced_subgraph(const Graph&, std::span<const int>);
};

/// Bit i set iff edge i of the owning graph is kept.
class EdgeSubset {
public:
    EdgeSubset() = default;
    explicit EdgeSubset(std::size_t edge_count) : bits_(edge_count) {}

    static EdgeSubset full(std::size_t edge_count);
    /// Low `edge_count` bits of `mask`; requires edge_count <= 64.
    static EdgeSubset from_integer(std::size_t edge_count, std::uint64_t mask);

    std::size_t size() const { return bits_.size(); }
    std::size_t count() const { return bits_.count(); }
    bool test(std::size_t i) const { return bits_.test(i); }
    void set(std::size_t i, bool value = true) { bits_.set(i, value); }
    bool operator==(const EdgeSubset&) const = default;

    /// Bit string with edge 0 first.
    std::string to_string() const;

private:
    boost::dynamic_bitset<std::uint64_t> bits_;
};

Graph subgraph_by_mask(const Graph& g, const EdgeSubset& s);

/// Subgraph induced by `vertices`, relabeled 0..k-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

int max_degree(const Graph& g);

struct TriangleCount {
    std::size_t count = 0;
    std::vector<std::array<int, 3>> triangles;  // lexicographically sorted
};

TriangleCount count_triangles(const Graph& g);

DenseMatrix adjacency_matrix(const Graph& g);

/// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

}  // namespace chromascope
