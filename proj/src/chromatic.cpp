#include "chromascope/chromatic.hpp"

#include <algorithm>
#include <cmath>

#include <boost/dynamic_bitset.hpp>

namespace chromascope {

namespace {

// Backtracking k-colorability search. Vertices are picked by highest
// saturation, then highest degree, then lowest index; a vertex may only open
// color (max used)+1, which fixes the first vertex to color 0.
class ColoringSearch {
public:
    ColoringSearch(const Graph& g, int k, std::uint64_t budget)
        : g_(g),
          n_(g.vertex_count()),
          k_(k),
          budget_(budget),
          color_(static_cast<std::size_t>(n_), -1),
          conflicts_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(std::max(k, 1)), 0),
          saturation_(static_cast<std::size_t>(n_), 0) {}

    bool run() { return n_ == 0 || (k_ > 0 && descend(0, -1)); }
    bool exhausted() const { return exhausted_; }
    std::uint64_t nodes() const { return nodes_; }
    const std::vector<int>& colors() const { return color_; }

private:
    int& conflict(int v, int c) {
        return conflicts_[static_cast<std::size_t>(v) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)];
    }

    int select() const {
        int best = -1;
        int best_sat = -1;
        int best_deg = -1;
        for (int v = 0; v < n_; ++v) {
            if (color_[static_cast<std::size_t>(v)] != -1) continue;
            const int sat = saturation_[static_cast<std::size_t>(v)];
            const int deg = g_.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    void assign(int v, int c) {
        color_[static_cast<std::size_t>(v)] = c;
        for (int w : g_.neighbors(v))
            if (conflict(w, c)++ == 0) ++saturation_[static_cast<std::size_t>(w)];
    }

    void unassign(int v, int c) {
        color_[static_cast<std::size_t>(v)] = -1;
        for (int w : g_.neighbors(v))
            if (--conflict(w, c) == 0) --saturation_[static_cast<std::size_t>(w)];
    }

    bool descend(int colored, int max_used) {
        if (colored == n_) return true;
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return false;
        }
        const int v = select();
        if (saturation_[static_cast<std::size_t>(v)] >= k_) return false;
        const int limit = std::min(k_ - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            if (conflict(v, c) != 0) continue;
            assign(v, c);
            if (descend(colored + 1, std::max(max_used, c))) return true;
            unassign(v, c);
            if (exhausted_) return false;
        }
        return false;
    }

    const Graph& g_;
    int n_;
    int k_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::vector<int> color_;
    std::vector<int> conflicts_;
    std::vector<int> saturation_;
};

using Bitset = boost::dynamic_bitset<std::uint64_t>;

// Maximum clique with greedy-coloring bound (Tomita-style), run on the
// complement to obtain a maximum independent set.
class CliqueSearch {
public:
    CliqueSearch(std::vector<Bitset> adj, std::uint64_t budget) : adj_(std::move(adj)), budget_(budget) {}

    void run() {
        const std::size_t n = adj_.size();
        if (n == 0) return;
        Bitset all(n);
        all.set();
        std::vector<int> current;
        expand(current, all);
    }

    bool exhausted() const { return exhausted_; }
    std::uint64_t nodes() const { return nodes_; }
    const std::vector<int>& best() const { return best_; }

private:
    void expand(std::vector<int>& current, Bitset candidates) {
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return;
        }
        std::vector<int> order;
        std::vector<int> bound;
        Bitset uncolored = candidates;
        int color = 0;
        while (uncolored.any()) {
            ++color;
            Bitset open = uncolored;
            for (auto v = open.find_first(); v != Bitset::npos; v = open.find_next(v)) {
                open -= adj_[v];
                uncolored.reset(v);
                order.push_back(static_cast<int>(v));
                bound.push_back(color);
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current.size() + static_cast<std::size_t>(bound[i]) <= best_.size()) return;
            const int v = order[i];
            current.push_back(v);
            Bitset next = candidates & adj_[static_cast<std::size_t>(v)];
            if (next.none()) {
                if (current.size() > best_.size()) best_ = current;
            } else {
                expand(current, std::move(next));
                if (exhausted_) return;
            }
            current.pop_back();
            candidates.reset(static_cast<std::size_t>(v));
        }
    }

    std::vector<Bitset> adj_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::vector<int> best_;
};

}  // namespace

std::vector<int> dsatur_greedy(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<char>> seen(static_cast<std::size_t>(n));
    std::vector<int> saturation(static_cast<std::size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
        int v = -1;
        for (int u = 0; u < n; ++u) {
            if (color[static_cast<std::size_t>(u)] != -1) continue;
            if (v == -1 || saturation[static_cast<std::size_t>(u)] > saturation[static_cast<std::size_t>(v)] ||
                (saturation[static_cast<std::size_t>(u)] == saturation[static_cast<std::size_t>(v)] &&
                 g.degree(u) > g.degree(v)))
                v = u;
        }
        auto& used = seen[static_cast<std::size_t>(v)];
        int c = 0;
        while (c < static_cast<int>(used.size()) && used[static_cast<std::size_t>(c)]) ++c;
        color[static_cast<std::size_t>(v)] = c;
        for (int w : g.neighbors(v)) {
            auto& mark = seen[static_cast<std::size_t>(w)];
            if (static_cast<int>(mark.size()) <= c) mark.resize(static_cast<std::size_t>(c) + 1, 0);
            if (!mark[static_cast<std::size_t>(c)]) {
                mark[static_cast<std::size_t>(c)] = 1;
                ++saturation[static_cast<std::size_t>(w)];
            }
        }
    }
    return color;
}

std::vector<int> greedy_clique(const Graph& g) {
    std::vector<int> best;
    std::vector<int> clique;
    std::vector<int> candidates;
    for (int seed = 0; seed < g.vertex_count(); ++seed) {
        if (g.degree(seed) + 1 <= static_cast<int>(best.size())) continue;
        clique.assign(1, seed);
        candidates = g.neighbors(seed);
        while (!candidates.empty()) {
            auto pick = std::max_element(candidates.begin(), candidates.end(),
                                         [&](int a, int b) { return g.degree(a) < g.degree(b); });
            const int v = *pick;
            clique.push_back(v);
            std::erase_if(candidates, [&](int w) { return w == v || !g.adjacent(v, w); });
        }
        if (clique.size() > best.size()) best = clique;
    }
    std::sort(best.begin(), best.end());
    return best;
}

Outcome<std::optional<std::vector<int>>> find_k_coloring(const Graph& g, int k, const SolverLimits& limits) {
    Outcome<std::optional<std::vector<int>>> out;
    ColoringSearch search(g, k, limits.node_budget);
    const bool found = search.run();
    out.nodes = search.nodes();
    if (search.exhausted()) {
        out.status = SolveStatus::budget_exhausted;
        return out;
    }
    if (found) out.value = search.colors();
    return out;
}

Outcome<ColoringResult> chromatic_number(const Graph& g, const SolverLimits& limits) {
    Outcome<ColoringResult> out;
    const int n = g.vertex_count();
    if (n == 0) return out;
    if (g.edge_count() == 0) {
        out.value = {1, std::vector<int>(static_cast<std::size_t>(n), 0)};
        return out;
    }
    std::vector<int> greedy = dsatur_greedy(g);
    const int upper = *std::max_element(greedy.begin(), greedy.end()) + 1;
    const int lower = std::max(2, static_cast<int>(greedy_clique(g).size()));
    std::uint64_t remaining = limits.node_budget;
    for (int k = lower; k < upper; ++k) {
        ColoringSearch search(g, k, remaining);
        const bool found = search.run();
        out.nodes += search.nodes();
        if (search.exhausted()) {
            out.status = SolveStatus::budget_exhausted;
            return out;
        }
        remaining -= search.nodes();
        if (found) {
            out.value = {k, search.colors()};
            return out;
        }
    }
    out.value = {upper, std::move(greedy)};
    return out;
}

Outcome<IndependentSetResult> independence_number(const Graph& g, const SolverLimits& limits) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<Bitset> complement(n, Bitset(n));
    for (std::size_t v = 0; v < n; ++v) {
        complement[v].set();
        complement[v].reset(v);
        for (int w : g.neighbors(static_cast<int>(v))) complement[v].reset(static_cast<std::size_t>(w));
    }
    CliqueSearch search(std::move(complement), limits.node_budget);
    search.run();
    Outcome<IndependentSetResult> out;
    out.nodes = search.nodes();
    if (search.exhausted()) {
        out.status = SolveStatus::budget_exhausted;
        return out;
    }
    out.value.witness = search.best();
    std::sort(out.value.witness.begin(), out.value.witness.end());
    out.value.alpha = static_cast<int>(out.value.witness.size());
    return out;
}

CriticalityResult is_edge_critical(const Graph& g, const SolverLimits& limits) {
    if (g.edge_count() == 0) throw std::invalid_argument("edge-criticality needs at least one edge");
    CriticalityResult out;
    out.chi = chromatic_number(g, limits).get().chi;
    // Deleting one edge lowers chi by at most one, so it suffices to ask
    // whether each g - e is (chi-1)-colorable.
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Graph reduced = g.without_edge(i);
        const auto coloring = find_k_coloring(reduced, out.chi - 1, limits).get();
        if (!coloring) {
            out.violating_edge = g.edge(i);
            return out;
        }
    }
    out.critical = true;
    return out;
}

double aks_lower_bound(int chi, int n) {
    if (n < 2) throw std::invalid_argument("AKS bound needs n >= 2");
    return static_cast<double>(chi) / (2.0 * std::log2(static_cast<double>(n)));
}

bool is_proper_coloring(const Graph& g, std::span<const int> colors) {
    if (colors.size() != static_cast<std::size_t>(g.vertex_count())) return false;
    for (int c : colors)
        if (c < 0) return false;
    for (const auto& e : g.edges())
        if (colors[static_cast<std::size_t>(e.u)] == colors[static_cast<std::size_t>(e.v)]) return false;
    return true;
}

bool is_independent_set(const Graph& g, std::span<const int> vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j] || g.adjacent(vertices[i], vertices[j])) return false;
    return true;
}

}  // namespace chromascope
