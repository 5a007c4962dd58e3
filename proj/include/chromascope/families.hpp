#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chromascope/chromatic.hpp"
#include "chromascope/graph.hpp"
#include "chromascope/rational.hpp"

namespace chromascope {

inline constexpr int kDefaultVertexBudget = 5000;

Graph complete_graph(int n);
Graph cycle_graph(int n);

/// Standard Mycielskian: copy 0 occupies [0,n), copy 1 [n,2n), apex 2n.
/// Edges: u~v, u~(v+n), (u+n)~v for every edge uv, and (v+n)~apex.
Graph mycielskian(const Graph& g);

/// M_2 = K_2, M_k = mycielskian(M_{k-1}).
Graph mycielski_graph(int k);

/// Kneser graph KG(n,k): k-subsets of {0..n-1} in colexicographic order,
/// adjacent when disjoint.
Graph kneser_graph(int n, int k, int vertex_budget = kDefaultVertexBudget);

/// The k-subset (as a bitmask) behind vertex `index` of kneser_graph(n, k).
std::uint64_t kneser_vertex_set(int n, int k, int index);

std::int64_t binomial(int n, int k);

struct KneserCertificates {
    std::int64_t lambda_max = 0;
    std::int64_t lambda_min = 0;
    std::int64_t alpha = 0;
    std::int64_t chi = 0;
};

/// Closed forms for n >= 2k >= 2: (C(n-k,k), -C(n-k-1,k-1), C(n-1,k-1), n-2k+2).
KneserCertificates kneser_certificates(int n, int k);

/// Polynomials of degree <= t over F_q; vertex id = sum coeff_j q^j.
/// base is complete; in part i (i = 1..n) f ~ g iff f(0)+f(i) != g(0)+g(i).
struct ZykovFamily {
    int q = 0;
    int n_subgraphs = 0;
    int t = 0;
    Graph base;
    std::vector<Graph> parts;

    /// Coefficients (constant term first) of vertex `id`.
    std::vector<int> coefficients(int id) const;
    /// f(x) mod q for vertex `id`, by Horner's rule.
    int evaluate(int id, int x) const;
};

bool is_prime(int q);

ZykovFamily zykov_family(int q, int n, int t, int vertex_budget = kDefaultVertexBudget);

struct CoverageReport {
    int min_coverage = 0;
    std::optional<Edge> witness_edge;  // a base edge attaining the minimum
};

CoverageReport edge_coverage_check(const ZykovFamily& family);

struct ShinkarReport {
    int s = 0;
    int k = 0;
    Rational max_ratio;
    std::vector<int> witness;  // vertices of the extremal induced subgraph
    int witness_alpha = 0;
    std::uint64_t subsets_checked = 0;
    bool exhaustive = true;
};

/// Max |V(H)|/alpha(H) over all nonempty induced subgraphs H of KG(sk,k).
/// Ties favor larger H, then the larger vertex bitmask. Throws
/// EnumerationCapExceeded if 2^|V| - 1 > subset_cap.
ShinkarReport shinkar_ratio_check(int s, int k, std::uint64_t subset_cap = std::uint64_t{1} << 20);

/// Same check on `samples` uniformly random nonempty vertex subsets; no
/// completeness claim.
ShinkarReport shinkar_ratio_sample(int s, int k, std::uint64_t samples, std::uint64_t seed,
                                   const SolverLimits& limits = {});

struct AppendixCatalogEntry {
    std::string name;
    std::string description;
    Graph graph;
    double expected_value_at_half = 0.0;  // as printed, 4 decimals
};

/// The four-triangle configurations G1..G10 and K4 with their printed
/// E[chi(G_{1/2})] values.
std::vector<AppendixCatalogEntry> appendix_catalog();

/// Applies mycielskian (chi_target - 3) times to C_{girth_seed}.
Graph edge_critical_witness(int chi_target, int girth_seed, int vertex_budget = kDefaultVertexBudget);

}  // namespace chromascope
