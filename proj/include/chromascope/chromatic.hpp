#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "chromascope/graph.hpp"

namespace chromascope {

struct SolverLimits {
    std::uint64_t node_budget = 100'000'000;
};

/// Raised when a caller needs a value from a search that ran out of budget.
class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SolveStatus { solved, budget_exhausted };

/// Result of an exact search. `value` is only meaningful when solved.
template <class T>
struct Outcome {
    SolveStatus status = SolveStatus::solved;
    T value{};
    std::uint64_t nodes = 0;

    bool solved() const { return status == SolveStatus::solved; }
    const T& get() const {
        if (!solved()) throw BudgetExhausted("node budget exhausted after " + std::to_string(nodes) + " nodes");
        return value;
    }
};

struct ColoringResult {
    int chi = 0;
    std::vector<int> witness;  // vertex -> color in [0, chi)
};

struct IndependentSetResult {
    int alpha = 0;
    std::vector<int> witness;  // sorted vertex ids
};

/// Exact chromatic number. DSATUR greedy gives the upper bound, a greedy
/// clique the lower bound, and a DSATUR-ordered backtracking search decides
/// k-colorability for each k in between.
Outcome<ColoringResult> chromatic_number(const Graph& g, const SolverLimits& limits = {});

/// Decides k-colorability; the optional is empty when no k-coloring exists.
Outcome<std::optional<std::vector<int>>> find_k_coloring(const Graph& g, int k, const SolverLimits& limits = {});

/// Exact independence number (maximum clique search on the complement with
/// a greedy-coloring bound).
Outcome<IndependentSetResult> independence_number(const Graph& g, const SolverLimits& limits = {});

struct CriticalityResult {
    bool critical = false;
    int chi = 0;
    std::optional<Edge> violating_edge;  // first edge whose removal keeps chi
};

/// True iff removing any single edge lowers chi. Requires at least one edge;
/// throws BudgetExhausted if any underlying search runs out.
CriticalityResult is_edge_critical(const Graph& g, const SolverLimits& limits = {});

/// chi / (2 log2 n). Requires n >= 2.
double aks_lower_bound(int chi, int n);

bool is_proper_coloring(const Graph& g, std::span<const int> colors);
bool is_independent_set(const Graph& g, std::span<const int> vertices);

/// Greedy DSATUR coloring (upper bound only).
std::vector<int> dsatur_greedy(const Graph& g);

/// Vertices of a maximal clique found greedily (lower bound only).
std::vector<int> greedy_clique(const Graph& g);

}  // namespace chromascope
