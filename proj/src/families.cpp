#include "chromascope/families.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "chromascope/expectation.hpp"
#include "chromascope/philox.hpp"

namespace chromascope {

namespace {

void check_budget(std::int64_t vertices, int budget, const char* what) {
    if (vertices > budget)
        throw std::invalid_argument(std::string(what) + " would have " + std::to_string(vertices) +
                                    " vertices, above the budget of " + std::to_string(budget));
}

// Next integer with the same popcount (Gosper's hack).
std::uint64_t next_combination(std::uint64_t x) {
    const std::uint64_t low = x & (~x + 1);
    const std::uint64_t ripple = x + low;
    return ripple | (((x ^ ripple) >> 2) / low);
}

std::vector<std::uint64_t> colex_subsets(int n, int k) {
    std::vector<std::uint64_t> out;
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t x = (std::uint64_t{1} << k) - 1; x < limit; x = next_combination(x)) out.push_back(x);
    return out;
}

Graph with_pairs(int n, const std::vector<VertexPair>& pairs) { return Graph::from_edge_list(n, pairs); }

}  // namespace

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<VertexPair> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return with_pairs(n, pairs);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<VertexPair> pairs;
    for (int v = 0; v < n; ++v) pairs.emplace_back(v, (v + 1) % n);
    return with_pairs(n, pairs);
}

Graph mycielskian(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<VertexPair> pairs;
    pairs.reserve(3 * g.edge_count() + static_cast<std::size_t>(n));
    for (const auto& e : g.edges()) {
        pairs.emplace_back(e.u, e.v);
        pairs.emplace_back(e.u, e.v + n);
        pairs.emplace_back(e.u + n, e.v);
    }
    for (int v = 0; v < n; ++v) pairs.emplace_back(v + n, 2 * n);
    return with_pairs(2 * n + 1, pairs);
}

Graph mycielski_graph(int k) {
    if (k < 2) throw std::invalid_argument("Mycielski index must be >= 2");
    Graph g = complete_graph(2);
    for (int i = 3; i <= k; ++i) g = mycielskian(g);
    return g;
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t out = 1;
    for (int i = 1; i <= k; ++i) {
        const std::int64_t factor = n - k + i;
        if (out > std::numeric_limits<std::int64_t>::max() / factor) throw std::overflow_error("binomial overflow");
        out = out * factor / i;
    }
    return out;
}

Graph kneser_graph(int n, int k, int vertex_budget) {
    if (k < 0 || n < k) throw std::invalid_argument("Kneser graph needs n >= k >= 0");
    if (n > 62) throw std::invalid_argument("Kneser graph supports n <= 62");
    check_budget(binomial(n, k), vertex_budget, "Kneser graph");
    const auto sets = colex_subsets(n, k);
    std::vector<VertexPair> pairs;
    for (std::size_t a = 0; a < sets.size(); ++a)
        for (std::size_t b = a + 1; b < sets.size(); ++b)
            if ((sets[a] & sets[b]) == 0) pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
    return with_pairs(static_cast<int>(sets.size()), pairs);
}

std::uint64_t kneser_vertex_set(int n, int k, int index) {
    if (index < 0 || index >= binomial(n, k)) throw std::out_of_range("Kneser vertex index out of range");
    std::uint64_t x = k == 0 ? 0 : (std::uint64_t{1} << k) - 1;
    for (int i = 0; i < index; ++i) x = next_combination(x);
    return x;
}

KneserCertificates kneser_certificates(int n, int k) {
    if (k < 1 || n < 2 * k) throw std::invalid_argument("Kneser certificates need n >= 2k >= 2");
    return {binomial(n - k, k), -binomial(n - k - 1, k - 1), binomial(n - 1, k - 1), n - 2 * k + 2};
}

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

std::vector<int> ZykovFamily::coefficients(int id) const {
    std::vector<int> out(static_cast<std::size_t>(t) + 1);
    for (auto& c : out) {
        c = id % q;
        id /= q;
    }
    return out;
}

int ZykovFamily::evaluate(int id, int x) const {
    const auto c = coefficients(id);
    int acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * x + *it) % q;
    return acc;
}

ZykovFamily zykov_family(int q, int n, int t, int vertex_budget) {
    if (!is_prime(q)) throw std::invalid_argument("q = " + std::to_string(q) + " is not prime");
    if (n < 1) throw std::invalid_argument("need at least one subgraph");
    if (q <= n) throw std::invalid_argument("need q > n");
    if (t < 0 || t >= n) throw std::invalid_argument("need 0 <= t < n");
    std::int64_t size = 1;
    for (int i = 0; i <= t; ++i) {
        size *= q;
        check_budget(size, vertex_budget, "Zykov family");
    }
    ZykovFamily fam;
    fam.q = q;
    fam.n_subgraphs = n;
    fam.t = t;
    const int vertices = static_cast<int>(size);
    fam.base = complete_graph(vertices);
    for (int i = 1; i <= n; ++i) {
        std::vector<int> label(static_cast<std::size_t>(vertices));
        for (int f = 0; f < vertices; ++f) label[static_cast<std::size_t>(f)] = (fam.evaluate(f, 0) + fam.evaluate(f, i)) % q;
        std::vector<VertexPair> pairs;
        for (int f = 0; f < vertices; ++f)
            for (int g = f + 1; g < vertices; ++g)
                if (label[static_cast<std::size_t>(f)] != label[static_cast<std::size_t>(g)]) pairs.emplace_back(f, g);
        fam.parts.push_back(Graph::from_edge_list(vertices, pairs));
    }
    return fam;
}

CoverageReport edge_coverage_check(const ZykovFamily& family) {
    CoverageReport out;
    out.min_coverage = std::numeric_limits<int>::max();
    for (const auto& e : family.base.edges()) {
        int covered = 0;
        for (const auto& part : family.parts)
            if (part.adjacent(e.u, e.v)) ++covered;
        if (covered < out.min_coverage) {
            out.min_coverage = covered;
            out.witness_edge = e;
        }
    }
    if (!out.witness_edge) out.min_coverage = static_cast<int>(family.parts.size());
    return out;
}

ShinkarReport shinkar_ratio_check(int s, int k, std::uint64_t subset_cap) {
    if (s < 1 || k < 1) throw std::invalid_argument("need s >= 1 and k >= 1");
    const Graph g = kneser_graph(s * k, k);
    const int n = g.vertex_count();
    if (n >= 63 || (std::uint64_t{1} << n) - 1 > subset_cap)
        throw EnumerationCapExceeded("KG(" + std::to_string(s * k) + "," + std::to_string(k) + ") has " +
                                     std::to_string(n) +
                                     " vertices; exhaustive subset enumeration exceeds the cap, use sampling mode");
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (const auto& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
        adj[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
    }
    const std::uint64_t total = std::uint64_t{1} << n;
    // alpha(S) = max(alpha(S - v), 1 + alpha(S - N[v])) for the lowest v in S.
    std::vector<std::uint8_t> alpha(total, 0);
    ShinkarReport out;
    out.s = s;
    out.k = k;
    std::uint64_t best_mask = 0;
    int best_size = 0;
    int best_alpha = 1;
    for (std::uint64_t set = 1; set < total; ++set) {
        const int v = std::countr_zero(set);
        const std::uint64_t bit = std::uint64_t{1} << v;
        const auto skip = alpha[set & ~bit];
        const auto take = static_cast<std::uint8_t>(1 + alpha[set & ~(bit | adj[static_cast<std::size_t>(v)])]);
        const int a = std::max(skip, take);
        alpha[set] = static_cast<std::uint8_t>(a);
        const int size = std::popcount(set);
        const std::int64_t lhs = static_cast<std::int64_t>(size) * best_alpha;
        const std::int64_t rhs = static_cast<std::int64_t>(best_size) * a;
        if (lhs > rhs || (lhs == rhs && size >= best_size)) {
            best_mask = set;
            best_size = size;
            best_alpha = a;
        }
    }
    out.subsets_checked = total - 1;
    out.max_ratio = Rational(best_size, best_alpha);
    out.witness_alpha = best_alpha;
    for (int v = 0; v < n; ++v)
        if ((best_mask >> v) & 1U) out.witness.push_back(v);
    return out;
}

ShinkarReport shinkar_ratio_sample(int s, int k, std::uint64_t samples, std::uint64_t seed,
                                   const SolverLimits& limits) {
    if (s < 1 || k < 1) throw std::invalid_argument("need s >= 1 and k >= 1");
    const Graph g = kneser_graph(s * k, k);
    const int n = g.vertex_count();
    ShinkarReport out;
    out.s = s;
    out.k = k;
    out.exhaustive = false;
    out.max_ratio = Rational(0);
    std::uint64_t draw = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        std::vector<int> chosen;
        while (chosen.empty()) {
            for (int v = 0; v < n; ++v)
                if (philox_word(seed, draw, static_cast<std::uint64_t>(v)) >> 63) chosen.push_back(v);
            ++draw;
        }
        const Graph h = induced_subgraph(g, chosen);
        const int a = independence_number(h, limits).get().alpha;
        const Rational ratio(static_cast<std::int64_t>(chosen.size()), a);
        if (ratio > out.max_ratio || (ratio == out.max_ratio && chosen.size() > out.witness.size())) {
            out.max_ratio = ratio;
            out.witness = chosen;
            out.witness_alpha = a;
        }
        ++out.subsets_checked;
    }
    return out;
}

std::vector<AppendixCatalogEntry> appendix_catalog() {
    const std::vector<VertexPair> diamond = {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 1}};
    auto shifted = [](std::vector<VertexPair> pairs, int by) {
        for (auto& [a, b] : pairs) {
            a += by;
            b += by;
        }
        return pairs;
    };
    auto join = [](std::initializer_list<std::vector<VertexPair>> parts) {
        std::vector<VertexPair> out;
        for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
        return out;
    };
    const std::vector<VertexPair> triangle = {{0, 1}, {1, 2}, {2, 0}};
    // Three triangles 012, 123, 134 in a row.
    const std::vector<VertexPair> strip3 = {{0, 1}, {0, 2}, {1, 2}, {1, 4}, {2, 3}, {3, 1}, {4, 3}};
    // Triangles 012, 123, 124 on the common edge 12.
    const std::vector<VertexPair> book3 = {{0, 1}, {0, 2}, {1, 2}, {1, 4}, {2, 3}, {3, 1}, {4, 2}};

    std::vector<AppendixCatalogEntry> out;
    auto add = [&](std::string name, std::string description, int n, const std::vector<VertexPair>& pairs,
                   double value) {
        out.push_back({std::move(name), std::move(description), Graph::from_edge_list(n, pairs), value});
    };
    add("G1", "four disjoint triangles", 12,
        join({triangle, shifted(triangle, 3), shifted(triangle, 6), shifted(triangle, 9)}), 2.4136);
    add("G2", "diamond plus two disjoint triangles", 10, join({diamond, shifted(triangle, 4), shifted(triangle, 7)}),
        2.4014);
    add("G3", "two disjoint diamonds", 8, join({diamond, shifted(diamond, 4)}), 2.3887);
    add("G4", "strip of three triangles plus a disjoint triangle", 8, join({strip3, shifted(triangle, 5)}), 2.3975);
    add("G5", "book of three triangles plus a disjoint triangle", 8, join({book3, shifted(triangle, 5)}), 2.3770);
    add("G6", "strip of four triangles", 6, join({strip3, {{5, 3}, {5, 4}}}), 2.3906);
    add("G7", "book of three triangles with a triangle on an outer edge", 6, join({book3, {{5, 1}, {0, 5}}}), 2.3809);
    add("G8", "book of four triangles", 6, join({book3, {{5, 1}, {2, 5}}}), 2.3398);
    add("G9", "4-wheel", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}, {2, 4}, {3, 4}}, 2.3828);
    add("G10", "central triangle with a triangle on each edge", 6,
        {{0, 1}, {0, 3}, {1, 2}, {3, 4}, {2, 3}, {3, 1}, {4, 2}, {5, 1}, {2, 5}}, 2.3984);
    add("K4", "complete graph on four vertices", 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, 2.3594);
    return out;
}

Graph edge_critical_witness(int chi_target, int girth_seed, int vertex_budget) {
    if (chi_target < 3) throw std::invalid_argument("target chromatic number must be >= 3");
    if (girth_seed < 3 || girth_seed % 2 == 0) throw std::invalid_argument("seed cycle length must be odd and >= 3");
    std::int64_t size = girth_seed;
    for (int i = 3; i < chi_target; ++i) {
        size = 2 * size + 1;
        check_budget(size, vertex_budget, "edge-critical witness");
    }
    check_budget(size, vertex_budget, "edge-critical witness");
    Graph g = cycle_graph(girth_seed);
    for (int i = 3; i < chi_target; ++i) g = mycielskian(g);
    return g;
}

}  // namespace chromascope
