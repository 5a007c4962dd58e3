#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "chromascope/expectation.hpp"
#include "chromascope/graph.hpp"
#include "chromascope/rational.hpp"
#include "chromascope/report.hpp"

namespace chromascope::cli {

/// A probability given either as a decimal (kept exactly) or as a fraction.
struct Probability {
    Rational exact;
    double value = 0.0;
    std::string text;

    static Probability from_decimal(const std::string& text);
    static Probability from_fraction(const std::string& text);
};

struct Limits {
    std::size_t edge_cap = 24;
    std::uint64_t node_budget = 100'000'000;
    unsigned workers = 0;

    EnumerationLimits enumeration() const { return {edge_cap, SolverLimits{node_budget}, workers}; }
};

enum class Mode { exact, montecarlo };
Mode parse_mode(const std::string& text);

/// Seed used when the caller did not supply one; always echoed in reports.
std::uint64_t fresh_seed();

struct GeneratedGraph {
    std::string label;  // "base", "part1", ... or the family name
    Graph graph;
};

/// Builds the graphs for a generator family: complete N, cycle N,
/// mycielski K, kneser N K, petersen, zykov Q N T, appendix NAME,
/// critical CHI GIRTH.
std::vector<GeneratedGraph> generate_family(const std::string& family, const std::vector<std::string>& params);

/// Writes generated graphs to `out` (zykov: out.base.txt, out.part<i>.txt).
RunReport cmd_gen(const std::string& family, const std::vector<std::string>& params,
                  const std::optional<std::filesystem::path>& out);

RunReport cmd_chi(const std::string& graph, const Limits& limits);

RunReport cmd_expect(const std::string& graph, const Probability& p, Mode mode, std::uint64_t samples,
                     std::optional<std::uint64_t> seed, const Limits& limits);

RunReport cmd_verify_appendix(const Limits& limits);

struct CurveRequest {
    std::string graph;
    double p_min = 0.0;
    double p_max = 1.0;
    int steps = 11;
    Mode mode = Mode::exact;
    std::uint64_t samples = 100'000;
    std::optional<std::uint64_t> seed;
    /// Optional graph whose exact curve is compared pointwise (value >= ref).
    std::optional<std::string> reference;
};

/// Verdict for an estimate against a reference value it should not fall
/// below: "consistent", "inconclusive" or "violation at >=4 sigma".
std::string conjecture_verdict(double value, std::optional<double> std_error, double reference);

RunReport cmd_curve(const CurveRequest& request, const Limits& limits);

RunReport cmd_bounds(const std::string& graph, const Probability& p, double c, const Limits& limits);

RunReport cmd_verify_theorem3(int q, int n, int t, const Limits& limits);

RunReport cmd_deviation_bench(const std::string& graph, double p, int trials, std::uint64_t base_seed,
                              double c_envelope);

/// Exhaustive when samples is empty; otherwise random-subset sampling.
RunReport cmd_verify_shinkar(int s, int k, std::uint64_t subset_cap, std::optional<std::uint64_t> samples,
                             std::optional<std::uint64_t> seed, const Limits& limits);

}  // namespace chromascope::cli
