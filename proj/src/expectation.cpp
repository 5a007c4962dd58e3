#include "chromascope/expectation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "chromascope/format.hpp"
#include "chromascope/parallel.hpp"
#include "chromascope/philox.hpp"

namespace chromascope {

namespace {

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in [0,1], got " + format_double(p));
}

void check_probability(const Rational& p) {
    if (p < 0 || p > 1) throw std::invalid_argument("probability must lie in [0,1], got " + to_string(p));
}

// Chromatic number of spanning subgraphs given by integer edge masks, for
// graphs with at most 64 vertices. Components are peeled off with bit
// operations; forests, single edges and bipartite pieces never reach the
// exact solver.
class SmallSubgraphChi {
public:
    SmallSubgraphChi(const Graph& g, const SolverLimits& limits) : g_(g), limits_(limits) {
        for (const auto& e : g.edges()) ends_.push_back({e.u, e.v});
    }

    int operator()(std::uint64_t mask) {
        const int n = g_.vertex_count();
        if (n == 0) return 0;
        std::fill(adj_.begin(), adj_.begin() + n, 0);
        for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
            const auto [u, v] = ends_[static_cast<std::size_t>(std::countr_zero(bits))];
            adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
            adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
        }
        std::uint64_t remaining = 0;
        for (int v = 0; v < n; ++v)
            if (adj_[static_cast<std::size_t>(v)] != 0) remaining |= std::uint64_t{1} << v;
        int best = 1;
        while (remaining != 0) {
            const std::uint64_t comp = peel_component(remaining);
            remaining &= ~comp;
            if (!odd_) {
                best = std::max(best, 2);
                continue;
            }
            if (best >= std::popcount(comp)) continue;
            best = std::max(best, solve_component(comp));
        }
        return best;
    }

private:
    // BFS layering from the lowest vertex; the component is bipartite iff no
    // edge joins two vertices of the same layer.
    std::uint64_t peel_component(std::uint64_t remaining) {
        std::uint64_t frontier = remaining & (~remaining + 1);
        std::uint64_t seen = frontier;
        odd_ = false;
        while (frontier != 0) {
            std::uint64_t next = 0;
            for (std::uint64_t bits = frontier; bits != 0; bits &= bits - 1) {
                const auto nb = adj_[static_cast<std::size_t>(std::countr_zero(bits))];
                if (nb & frontier) odd_ = true;
                next |= nb;
            }
            next &= ~seen;
            seen |= next;
            frontier = next;
        }
        return seen;
    }

    int solve_component(std::uint64_t comp) {
        int index[64];
        int k = 0;
        for (std::uint64_t bits = comp; bits != 0; bits &= bits - 1) index[std::countr_zero(bits)] = k++;
        pairs_.clear();
        for (std::uint64_t bits = comp; bits != 0; bits &= bits - 1) {
            const int u = std::countr_zero(bits);
            for (std::uint64_t nb = adj_[static_cast<std::size_t>(u)] & ~((std::uint64_t{2} << u) - 1); nb != 0;
                 nb &= nb - 1)
                pairs_.emplace_back(index[u], index[std::countr_zero(nb)]);
        }
        const Graph piece = Graph::from_edge_list(k, pairs_);
        return chromatic_number(piece, limits_).get().chi;
    }

    const Graph& g_;
    SolverLimits limits_;
    std::vector<std::pair<int, int>> ends_;
    std::array<std::uint64_t, 64> adj_{};
    std::vector<VertexPair> pairs_;
    bool odd_ = false;
};

bool is_bipartite(const Graph& g) {
    std::vector<int> side(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<int> stack;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (side[static_cast<std::size_t>(s)] != -1) continue;
        side[static_cast<std::size_t>(s)] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                auto& sw = side[static_cast<std::size_t>(w)];
                if (sw == -1) {
                    sw = 1 - side[static_cast<std::size_t>(v)];
                    stack.push_back(w);
                } else if (sw == side[static_cast<std::size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

int chi_by_components(const Graph& h, const SolverLimits& limits) {
    if (h.vertex_count() == 0) return 0;
    int best = 1;
    for (const auto& comp : connected_components(h)) {
        if (comp.size() < 2) continue;
        best = std::max(best, 2);
        const Graph piece = induced_subgraph(h, comp);
        if (piece.edge_count() <= 1 || static_cast<int>(comp.size()) <= best || is_bipartite(piece)) continue;
        best = std::max(best, chromatic_number(piece, limits).get().chi);
    }
    return best;
}

// Draws the keep/drop bit for every edge of one sample.
template <class Sink>
void draw_edges(std::size_t m, double p, std::uint64_t seed, std::uint64_t sample_index, Sink&& keep) {
    for (std::size_t block = 0; block * 4 < m; ++block) {
        const auto words = Philox4x64::block({block, sample_index, 0, 0}, {seed, 0});
        for (std::size_t w = 0; w < 4 && block * 4 + w < m; ++w)
            if (to_unit_interval(words[w]) < p) keep(block * 4 + w);
    }
}

template <class T>
T power(T base, std::size_t e) {
    T out = 1;
    while (e != 0) {
        if (e & 1U) out *= base;
        base *= base;
        e >>= 1U;
    }
    return out;
}

}  // namespace

ChiExpectationPolynomial::ChiExpectationPolynomial(int vertex_count, std::size_t edge_count,
                                                   std::vector<std::vector<BigInt>> counts)
    : n_(vertex_count), m_(edge_count), counts_(std::move(counts)) {
    if (counts_.size() != m_ + 1) throw std::invalid_argument("count table needs m+1 rows");
    // uniform rows of width max_chi+1 so equal tables compare equal
    std::size_t width = 1;
    for (const auto& row : counts_)
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) width = std::max(width, j + 1);
    for (auto& row : counts_) row.resize(width, BigInt(0));
    weights_.assign(m_ + 1, BigInt(0));
    for (std::size_t k = 0; k <= m_; ++k)
        for (std::size_t j = 0; j < counts_[k].size(); ++j) weights_[k] += counts_[k][j] * static_cast<int>(j);
}

int ChiExpectationPolynomial::max_chi() const {
    int best = 0;
    for (const auto& row : counts_)
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) best = std::max(best, static_cast<int>(j));
    return best;
}

BigInt ChiExpectationPolynomial::count(std::size_t k, int j) const {
    if (k >= counts_.size() || j < 0 || static_cast<std::size_t>(j) >= counts_[k].size()) return 0;
    return counts_[k][static_cast<std::size_t>(j)];
}

double ChiExpectationPolynomial::evaluate(double p) const {
    check_probability(p);
    double total = 0.0;
    for (std::size_t k = 0; k <= m_; ++k) {
        if (weights_[k] == 0) continue;
        total += weights_[k].convert_to<double>() * std::pow(p, static_cast<double>(k)) *
                 std::pow(1.0 - p, static_cast<double>(m_ - k));
    }
    return total;
}

Rational ChiExpectationPolynomial::evaluate(const Rational& p) const {
    check_probability(p);
    const BigInt a = boost::multiprecision::numerator(p);
    const BigInt b = boost::multiprecision::denominator(p);
    BigInt numerator = 0;
    for (std::size_t k = 0; k <= m_; ++k) {
        if (weights_[k] == 0) continue;
        numerator += weights_[k] * power<BigInt>(a, k) * power<BigInt>(b - a, m_ - k);
    }
    return Rational(numerator, power<BigInt>(b, m_));
}

nlohmann::json ChiExpectationPolynomial::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t k = 0; k < counts_.size(); ++k)
        for (std::size_t j = 0; j < counts_[k].size(); ++j)
            if (counts_[k][j] != 0) rows.push_back({k, j, counts_[k][j].str()});
    return {{"n", n_}, {"m", m_}, {"counts", rows}};
}

ChiExpectationPolynomial ChiExpectationPolynomial::from_json(const nlohmann::json& j) {
    const int n = j.at("n").get<int>();
    const auto m = j.at("m").get<std::size_t>();
    std::vector<std::vector<BigInt>> counts(m + 1);
    for (const auto& row : j.at("counts")) {
        const auto k = row.at(0).get<std::size_t>();
        const auto c = row.at(1).get<std::size_t>();
        if (k > m) throw std::invalid_argument("count row has k > m");
        if (counts[k].size() <= c) counts[k].resize(c + 1, BigInt(0));
        counts[k][c] = BigInt(row.at(2).get<std::string>());
    }
    return {n, m, std::move(counts)};
}

ChiExpectationPolynomial exact_expectation_polynomial(const Graph& g, const EnumerationLimits& limits) {
    const std::size_t m = g.edge_count();
    const std::size_t cap = std::min(limits.edge_cap, kMaxEnumerableEdges);
    if (m > cap)
        throw EnumerationCapExceeded("graph has " + std::to_string(m) + " edges, above the enumeration cap of " +
                                     std::to_string(cap) + "; use Monte Carlo mode instead");
    const int n = g.vertex_count();
    const std::size_t width = static_cast<std::size_t>(n) + 1;
    const std::uint64_t total = std::uint64_t{1} << m;
    const unsigned workers = limits.workers == 0 ? default_worker_count() : limits.workers;
    std::vector<std::vector<std::uint64_t>> tables(workers);

    parallel_chunks(total, workers, [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
        auto& table = tables[chunk];
        table.assign((m + 1) * width, 0);
        std::uint64_t mask = begin;
        try {
            if (n <= 64) {
                SmallSubgraphChi chi(g, limits.solver);
                for (; mask < end; ++mask)
                    ++table[static_cast<std::size_t>(std::popcount(mask)) * width + static_cast<std::size_t>(chi(mask))];
            } else {
                for (; mask < end; ++mask) {
                    const int j = chi_of_subgraph(g, EdgeSubset::from_integer(m, mask), limits.solver);
                    ++table[static_cast<std::size_t>(std::popcount(mask)) * width + static_cast<std::size_t>(j)];
                }
            }
        } catch (const BudgetExhausted& e) {
            throw BudgetExhausted(std::string(e.what()) + " at edge mask " + std::to_string(mask));
        }
    });

    std::vector<std::vector<BigInt>> counts(m + 1, std::vector<BigInt>(width, BigInt(0)));
    for (const auto& table : tables) {
        if (table.empty()) continue;
        for (std::size_t k = 0; k <= m; ++k)
            for (std::size_t j = 0; j < width; ++j) counts[k][j] += table[k * width + j];
    }
    int top = 0;
    for (const auto& row : counts)
        for (std::size_t j = 0; j < width; ++j)
            if (row[j] != 0) top = std::max(top, static_cast<int>(j));
    for (auto& row : counts) row.resize(static_cast<std::size_t>(top) + 1);
    return {n, m, std::move(counts)};
}

double odd_cycle_closed_form(int k, double p) {
    if (k < 1) throw std::invalid_argument("odd cycle index k must be >= 1");
    check_probability(p);
    const double e = 2.0 * k + 1.0;
    return 2.0 + std::pow(p, e) - std::pow(1.0 - p, e);
}

Rational odd_cycle_closed_form(int k, const Rational& p) {
    if (k < 1) throw std::invalid_argument("odd cycle index k must be >= 1");
    check_probability(p);
    const auto e = static_cast<std::size_t>(2 * k + 1);
    return Rational(2) + power<Rational>(p, e) - power<Rational>(Rational(1) - p, e);
}

EdgeSubset sample_subgraph(const Graph& g, double p, std::uint64_t seed, std::uint64_t sample_index) {
    check_probability(p);
    EdgeSubset out(g.edge_count());
    draw_edges(g.edge_count(), p, seed, sample_index, [&](std::size_t e) { out.set(e); });
    return out;
}

int chi_of_subgraph(const Graph& g, const EdgeSubset& mask, const SolverLimits& limits) {
    return chi_by_components(subgraph_by_mask(g, mask), limits);
}

MonteCarloEstimate expected_chi_montecarlo(const Graph& g, double p, std::uint64_t samples, std::uint64_t base_seed,
                                           const EnumerationLimits& limits) {
    check_probability(p);
    if (samples < 2) throw std::invalid_argument("Monte Carlo needs at least 2 samples");
    const std::size_t m = g.edge_count();
    const bool small = g.vertex_count() <= 64 && m <= 64;
    const unsigned workers = limits.workers == 0 ? default_worker_count() : limits.workers;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> sums(workers, {0, 0});

    parallel_chunks(samples, workers, [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
        std::uint64_t sum = 0;
        std::uint64_t sum_sq = 0;
        std::uint64_t s = begin;
        try {
            if (small) {
                SmallSubgraphChi chi(g, limits.solver);
                for (; s < end; ++s) {
                    std::uint64_t mask = 0;
                    draw_edges(m, p, base_seed, s, [&](std::size_t e) { mask |= std::uint64_t{1} << e; });
                    const auto x = static_cast<std::uint64_t>(chi(mask));
                    sum += x;
                    sum_sq += x * x;
                }
            } else {
                for (; s < end; ++s) {
                    const auto x =
                        static_cast<std::uint64_t>(chi_of_subgraph(g, sample_subgraph(g, p, base_seed, s), limits.solver));
                    sum += x;
                    sum_sq += x * x;
                }
            }
        } catch (const BudgetExhausted& e) {
            throw BudgetExhausted(std::string(e.what()) + " at sample " + std::to_string(s));
        }
        sums[chunk] = {sum, sum_sq};
    });

    unsigned __int128 sum = 0;
    unsigned __int128 sum_sq = 0;
    for (auto [a, b] : sums) {
        sum += a;
        sum_sq += b;
    }
    const auto n = static_cast<unsigned __int128>(samples);
    // N * sum(x^2) - (sum x)^2 is exact and nonnegative.
    const unsigned __int128 spread = n * sum_sq - sum * sum;
    MonteCarloEstimate out;
    out.samples = samples;
    out.base_seed = base_seed;
    out.p = p;
    out.mean = static_cast<double>(sum) / static_cast<double>(samples);
    const double variance = static_cast<double>(spread) / (static_cast<double>(samples) * static_cast<double>(samples - 1));
    out.std_error = std::sqrt(variance / static_cast<double>(samples));
    return out;
}

std::vector<CurvePoint> curve(const Graph& g, const std::vector<double>& p_grid, CurveMode mode,
                              const CurveParams& params) {
    for (double p : p_grid) check_probability(p);
    std::vector<CurvePoint> out;
    out.reserve(p_grid.size());
    if (mode == CurveMode::exact) {
        const auto poly = exact_expectation_polynomial(g, params.limits);
        for (double p : p_grid) out.push_back({p, poly.evaluate(p), std::nullopt});
    } else {
        for (double p : p_grid) {
            const auto est = expected_chi_montecarlo(g, p, params.samples, params.base_seed, params.limits);
            out.push_back({p, est.mean, est.std_error});
        }
    }
    return out;
}

std::string curve_to_csv(const std::vector<CurvePoint>& points) {
    std::ostringstream os;
    os << "p,value,std_error\n";
    for (const auto& pt : points) {
        os << format_double(pt.p) << ',' << format_double(pt.value) << ',';
        if (pt.std_error) os << format_double(*pt.std_error);
        os << '\n';
    }
    return os.str();
}

}  // namespace chromascope
