// Slow, obviously-correct reference implementations used only by tests.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "chromascope/graph.hpp"
#include "chromascope/rational.hpp"

namespace oracle {

using chromascope::Graph;
using chromascope::Rational;
using chromascope::VertexPair;

inline bool extend_coloring(const std::vector<std::vector<bool>>& adj, int k, std::vector<int>& color, int v) {
    const int n = static_cast<int>(adj.size());
    if (v == n) return true;
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (adj[u][v] && color[u] == c) ok = false;
        if (!ok) continue;
        color[v] = c;
        if (extend_coloring(adj, k, color, v + 1)) return true;
    }
    return false;
}

inline std::vector<std::vector<bool>> matrix_of(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
    return adj;
}

// Tries k = 1, 2, ... with plain exhaustive assignment in index order.
inline int chromatic_number(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    const auto adj = matrix_of(g);
    for (int k = 1;; ++k) {
        std::vector<int> color(n, -1);
        if (extend_coloring(adj, k, color, 0)) return k;
    }
}

inline int independence_number(const Graph& g) {
    const int n = g.vertex_count();
    const auto adj = matrix_of(g);
    int best = 0;
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if ((s >> u & 1U) && (s >> v & 1U) && adj[u][v]) ok = false;
        if (ok) best = std::max(best, __builtin_popcount(s));
    }
    return best;
}

inline long triangles(const Graph& g) {
    const int n = g.vertex_count();
    const auto adj = matrix_of(g);
    long count = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (adj[a][b] && adj[b][c] && adj[a][c]) ++count;
    return count;
}

// Sum over all edge subsets of chi(subset) * p^|S| (1-p)^(m-|S|).
inline Rational expectation(const Graph& g, const Rational& p) {
    const auto& edges = g.edges();
    const std::size_t m = edges.size();
    Rational total = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<VertexPair> kept;
        for (std::size_t e = 0; e < m; ++e)
            if (mask >> e & 1U) kept.emplace_back(edges[e].u, edges[e].v);
        Rational weight = 1;
        for (std::size_t e = 0; e < m; ++e) weight *= (mask >> e & 1U) ? p : Rational(1) - p;
        total += weight * oracle::chromatic_number(Graph::from_edge_list(g.vertex_count(), kept));
    }
    return total;
}

inline Eigen::VectorXd eigenvalues(const Graph& g) {
    const int n = g.vertex_count();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const auto& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

inline Graph random_graph(int n, double density, std::mt19937_64& rng) {
    std::bernoulli_distribution keep(density);
    std::vector<VertexPair> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (keep(rng)) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

}  // namespace oracle
