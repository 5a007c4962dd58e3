#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chromascope/chromatic.hpp"
#include "chromascope/graph.hpp"
#include "chromascope/rational.hpp"

namespace chromascope {

/// Thrown when a graph has too many edges for 2^m enumeration.
class EnumerationCapExceeded : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct EnumerationLimits {
    std::size_t edge_cap = 24;
    SolverLimits solver{};
    unsigned workers = 0;  // 0: default_worker_count()
};

/// Hard ceiling for integer-mask enumeration regardless of configuration.
inline constexpr std::size_t kMaxEnumerableEdges = 62;

/// E[chi(G_p)] as an exact polynomial in p.
///
/// counts[k][j] is the number of k-edge subsets whose spanning subgraph has
/// chromatic number j, so
///
///     E[chi(G_p)] = sum_k sum_j j * counts[k][j] * p^k * (1-p)^(m-k).
class ChiExpectationPolynomial {
public:
    ChiExpectationPolynomial() = default;
    ChiExpectationPolynomial(int vertex_count, std::size_t edge_count, std::vector<std::vector<BigInt>> counts);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return m_; }
    /// Largest j with a nonzero count (chi of the full graph).
    int max_chi() const;
    /// counts[k][j]; zero outside the stored table.
    BigInt count(std::size_t k, int j) const;
    const std::vector<std::vector<BigInt>>& counts() const { return counts_; }

    double evaluate(double p) const;
    Rational evaluate(const Rational& p) const;

    /// {"n":..,"m":..,"counts":[[k,j,"c"],..]} with nonzero entries only.
    nlohmann::json to_json() const;
    static ChiExpectationPolynomial from_json(const nlohmann::json& j);

    bool operator==(const ChiExpectationPolynomial&) const = default;

private:
    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::vector<BigInt>> counts_;
    std::vector<BigInt> weights_;  // sum_j j * counts[k][j]
};

/// Enumerates all 2^m edge subsets in integer order, split into contiguous
/// ranges across workers. Throws EnumerationCapExceeded when m > edge_cap and
/// BudgetExhausted (naming the mask) if a chi search runs out.
ChiExpectationPolynomial exact_expectation_polynomial(const Graph& g, const EnumerationLimits& limits = {});

/// 2 + p^(2k+1) - (1-p)^(2k+1), the expectation for the odd cycle C_{2k+1}.
double odd_cycle_closed_form(int k, double p);
Rational odd_cycle_closed_form(int k, const Rational& p);

/// Keeps edge e iff the Philox word for (seed, sample_index, e) maps below p.
EdgeSubset sample_subgraph(const Graph& g, double p, std::uint64_t seed, std::uint64_t sample_index = 0);

struct MonteCarloEstimate {
    double mean = 0.0;
    double std_error = 0.0;  // sample standard deviation / sqrt(samples)
    std::uint64_t samples = 0;
    std::uint64_t base_seed = 0;
    double p = 0.0;
};

/// Sample i uses sample_subgraph(g, p, base_seed, i); results are identical
/// for every worker count.
MonteCarloEstimate expected_chi_montecarlo(const Graph& g, double p, std::uint64_t samples, std::uint64_t base_seed,
                                           const EnumerationLimits& limits = {});

/// Chromatic number of the spanning subgraph selected by `mask`, computed
/// per connected component.
int chi_of_subgraph(const Graph& g, const EdgeSubset& mask, const SolverLimits& limits = {});

enum class CurveMode { exact, montecarlo };

struct CurveParams {
    std::uint64_t samples = 100'000;
    std::uint64_t base_seed = 0;
    EnumerationLimits limits{};
};

struct CurvePoint {
    double p = 0.0;
    double value = 0.0;
    std::optional<double> std_error;
};

/// Exact mode builds one polynomial and evaluates it on the grid; Monte Carlo
/// mode reuses base_seed at every grid point.
std::vector<CurvePoint> curve(const Graph& g, const std::vector<double>& p_grid, CurveMode mode,
                              const CurveParams& params = {});

/// CSV with header "p,value,std_error"; std_error is empty in exact mode.
std::string curve_to_csv(const std::vector<CurvePoint>& points);

}  // namespace chromascope
