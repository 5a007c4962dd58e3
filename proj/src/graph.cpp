#include "chromascope/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace chromascope {

namespace {

std::string pair_text(int u, int v) {
    std::ostringstream os;
    os << "(" << u << "," << v << ")";
    return os.str();
}

}  // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
    if (n < 0) throw GraphError("negative vertex count");
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) { build_adjacency(); }

Graph Graph::from_edge_list(int n, std::span<const VertexPair> pairs) {
    if (n < 0) throw GraphError("negative vertex count");
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw GraphError("vertex out of range in pair " + pair_text(a, b) + " for n=" + std::to_string(n));
        if (a == b) throw GraphError("self-loop " + pair_text(a, b));
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    std::vector<std::size_t> order(edges.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) { return edges[i] < edges[j]; });
    std::vector<Edge> sorted;
    sorted.reserve(edges.size());
    for (std::size_t i : order) {
        if (!sorted.empty() && sorted.back() == edges[i]) {
            auto [a, b] = pairs[i];
            throw GraphError("duplicate pair " + pair_text(a, b));
        }
        sorted.push_back(edges[i]);
    }
    return Graph(n, std::move(sorted));
}

void Graph::build_adjacency() {
    adj_.assign(static_cast<std::size_t>(n_), {});
    for (const auto& e : edges_) {
        adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
}

bool Graph::adjacent(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto& row = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(row.begin(), row.end(), v);
}

std::optional<std::size_t> Graph::edge_index(int u, int v) const {
    Edge key{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

Graph Graph::without_edge(std::size_t i) const {
    if (i >= edges_.size()) throw std::out_of_range("edge index out of range");
    std::vector<Edge> kept = edges_;
    kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    return Graph(n_, std::move(kept));
}

EdgeSubset EdgeSubset::full(std::size_t edge_count) {
    EdgeSubset s(edge_count);
    s.bits_.set();
    return s;
}

EdgeSubset EdgeSubset::from_integer(std::size_t edge_count, std::uint64_t mask) {
    if (edge_count > 64) throw std::invalid_argument("integer masks support at most 64 edges");
    EdgeSubset s(edge_count);
    for (std::size_t i = 0; i < edge_count; ++i)
        if ((mask >> i) & 1U) s.bits_.set(i);
    return s;
}

std::string EdgeSubset::to_string() const {
    std::string out(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_.test(i)) out[i] = '1';
    return out;
}

Graph subgraph_by_mask(const Graph& g, const EdgeSubset& s) {
    if (s.size() != g.edge_count())
        throw std::invalid_argument("mask length " + std::to_string(s.size()) + " does not match edge count " +
                                    std::to_string(g.edge_count()));
    std::vector<Edge> kept;
    kept.reserve(s.count());
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        if (s.test(i)) kept.push_back(g.edges_[i]);
    return Graph(g.vertex_count(), std::move(kept));
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    std::vector<int> relabel(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.vertex_count()) throw GraphError("vertex out of range in induced subgraph");
        if (relabel[static_cast<std::size_t>(v)] != -1) throw GraphError("repeated vertex in induced subgraph");
        relabel[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    std::vector<Edge> kept;
    for (const auto& e : g.edges()) {
        int a = relabel[static_cast<std::size_t>(e.u)];
        int b = relabel[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) kept.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(kept.begin(), kept.end());
    return Graph(static_cast<int>(vertices.size()), std::move(kept));
}

int max_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
    return best;
}

TriangleCount count_triangles(const Graph& g) {
    TriangleCount out;
    // Each triangle u<v<w is found once from its smallest edge (u,v).
    for (const auto& e : g.edges()) {
        const auto& nu = g.neighbors(e.u);
        const auto& nv = g.neighbors(e.v);
        auto iu = std::upper_bound(nu.begin(), nu.end(), e.v);
        auto iv = std::upper_bound(nv.begin(), nv.end(), e.v);
        while (iu != nu.end() && iv != nv.end()) {
            if (*iu < *iv) {
                ++iu;
            } else if (*iv < *iu) {
                ++iv;
            } else {
                out.triangles.push_back({e.u, e.v, *iu});
                ++iu;
                ++iv;
            }
        }
    }
    out.count = out.triangles.size();
    return out;
}

DenseMatrix adjacency_matrix(const Graph& g) {
    DenseMatrix m(static_cast<std::size_t>(g.vertex_count()));
    for (const auto& e : g.edges()) {
        m(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v)) = 1.0;
        m(static_cast<std::size_t>(e.v), static_cast<std::size_t>(e.u)) = 1.0;
    }
    return m;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = id;
        stack.push_back(static_cast<int>(s));
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (int w : g.neighbors(v)) {
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

double DenseMatrix::asymmetry() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j) worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
    return worst;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& other) {
    if (other.n_ != n_) throw std::invalid_argument("matrix size mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

DenseMatrix& DenseMatrix::operator*=(double s) {
    for (double& x : data_) x *= s;
    return *this;
}

}  // namespace chromascope
