// chromascope command-line driver.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chromascope/chromatic.hpp"
#include "chromascope/commands.hpp"
#include "chromascope/expectation.hpp"
#include "chromascope/graph_io.hpp"

using namespace chromascope;
using namespace chromascope::cli;

namespace {

struct Options {
    std::string graph;
    std::string reference;
    std::string p_decimal;
    std::string p_fraction;
    std::string mode = "exact";
    std::uint64_t samples = 100'000;
    std::optional<std::uint64_t> seed;
    double c = 1.0;
    double c_envelope = 4.0;
    std::string out;
    std::string format = "text";
    Limits limits;
    std::vector<std::string> params;
    double p_min = 0.0;
    double p_max = 0.5;
    int steps = 11;
    int trials = 100;
    std::uint64_t subset_cap = std::uint64_t{1} << 20;
    bool sample = false;
};

Probability probability(const Options& o) {
    if (!o.p_fraction.empty()) return Probability::from_fraction(o.p_fraction);
    if (o.p_decimal.empty()) throw std::invalid_argument("--p or --p-frac is required");
    return Probability::from_decimal(o.p_decimal);
}

std::string render(const RunReport& report, const std::string& format) {
    if (format == "json") return report.to_json().dump(2) + "\n";
    if (format == "csv") {
        if (report.csv().empty()) throw std::invalid_argument(report.command() + " has no CSV output");
        return report.csv();
    }
    return report.to_text();
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--edge-cap", o.limits.edge_cap, "Largest edge count for exact enumeration");
    sub->add_option("--node-budget", o.limits.node_budget, "Search node budget per chi/alpha solve");
}

void add_graph(CLI::App* sub, Options& o) {
    sub->add_option("--graph", o.graph, "Edge-list or DIMACS file, or a name such as K4, C7, M5, KG6,2, G3")
        ->required();
}

void add_probability(CLI::App* sub, Options& o, bool required) {
    auto* group = sub->add_option_group("probability");
    group->add_option("--p", o.p_decimal, "Edge retention probability as a decimal");
    group->add_option("--p-frac", o.p_fraction, "Edge retention probability as A/B");
    if (required) group->require_option(1);
    else group->require_option(0, 1);
}

void add_seed(CLI::App* sub, Options& o) {
    sub->add_option("--seed", o.seed, "Random seed (generated and recorded when omitted)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Expected chromatic numbers of random subgraphs, spectral bounds and graph families"};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("gen", "Generate a graph family as edge-list file(s)");
    gen->add_option("family", o.params,
                    "Family and parameters: complete N, cycle N, mycielski K, kneser N K, petersen, zykov Q N T, "
                    "appendix NAME, critical CHI GIRTH")
        ->required();
    gen->add_option("--out", o.out, "Output path (zykov: prefix for .base.txt and .part<i>.txt)");
    add_common(gen, o);

    auto* chi = app.add_subcommand("chi", "Exact chromatic and independence numbers");
    add_graph(chi, o);
    add_common(chi, o);

    auto* expect = app.add_subcommand("expect", "Expected chromatic number of G_p");
    add_graph(expect, o);
    add_probability(expect, o, true);
    expect->add_option("--mode", o.mode, "exact or mc")->check(CLI::IsMember({"exact", "mc", "montecarlo"}));
    expect->add_option("--samples", o.samples, "Monte Carlo sample count");
    add_seed(expect, o);
    add_common(expect, o);

    auto* appendix = app.add_subcommand("verify-appendix", "Check the four-triangle catalog values");
    add_common(appendix, o);

    auto* curve = app.add_subcommand("curve", "E[chi(G_p)] over a grid of p");
    add_graph(curve, o);
    curve->add_option("--p-min", o.p_min, "Smallest p");
    curve->add_option("--p-max", o.p_max, "Largest p");
    curve->add_option("--steps", o.steps, "Number of grid points");
    curve->add_option("--mode", o.mode, "exact or mc")->check(CLI::IsMember({"exact", "mc", "montecarlo"}));
    curve->add_option("--samples", o.samples, "Monte Carlo samples per grid point");
    curve->add_option("--reference", o.reference, "Graph whose exact curve must not exceed this one");
    curve->add_option("--out", o.out, "Write output here instead of stdout");
    add_seed(curve, o);
    add_common(curve, o);

    auto* bounds = app.add_subcommand("bounds", "Spectral and combinatorial bounds side by side");
    add_graph(bounds, o);
    add_probability(bounds, o, false);
    bounds->add_option("--c", o.c, "Concentration constant");
    add_common(bounds, o);

    auto* theorem3 = app.add_subcommand("verify-theorem3", "Product bound tightness on polynomial families");
    theorem3->add_option("q", o.params, "q n t")->expected(3)->required();
    add_common(theorem3, o);

    auto* deviation = app.add_subcommand("deviation-bench", "Operator norm of A(G_p) - p A(G) over seeded trials");
    add_graph(deviation, o);
    add_probability(deviation, o, true);
    deviation->add_option("--trials", o.trials, "Number of trials");
    deviation->add_option("--c", o.c_envelope, "Envelope constant");
    deviation->add_option("--out", o.out, "Write output here instead of stdout");
    add_seed(deviation, o);
    add_common(deviation, o);

    auto* shinkar = app.add_subcommand("verify-shinkar", "max |V(H)|/alpha(H) over induced subgraphs of KG(sk,k)");
    shinkar->add_option("s", o.params, "s k")->expected(2)->required();
    shinkar->add_option("--subset-cap", o.subset_cap, "Largest subset count for exhaustive search");
    shinkar->add_flag("--sample", o.sample, "Sample random subsets instead of enumerating");
    shinkar->add_option("--samples", o.samples, "Sampled subset count");
    add_seed(shinkar, o);
    add_common(shinkar, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        std::optional<RunReport> report;
        std::optional<std::filesystem::path> out;
        if (!o.out.empty()) out = o.out;
        if (app.got_subcommand(gen)) {
            if (o.params.empty()) throw std::invalid_argument("gen needs a family");
            const std::string family = o.params.front();
            const std::vector<std::string> rest(o.params.begin() + 1, o.params.end());
            report = cmd_gen(family, rest, out);
            out.reset();
        } else if (app.got_subcommand(chi)) {
            report = cmd_chi(o.graph, o.limits);
        } else if (app.got_subcommand(expect)) {
            report = cmd_expect(o.graph, probability(o), parse_mode(o.mode), o.samples, o.seed, o.limits);
        } else if (app.got_subcommand(appendix)) {
            report = cmd_verify_appendix(o.limits);
        } else if (app.got_subcommand(curve)) {
            CurveRequest req;
            req.graph = o.graph;
            req.p_min = o.p_min;
            req.p_max = o.p_max;
            req.steps = o.steps;
            req.mode = parse_mode(o.mode);
            req.samples = o.samples;
            req.seed = o.seed;
            if (!o.reference.empty()) req.reference = o.reference;
            report = cmd_curve(req, o.limits);
        } else if (app.got_subcommand(bounds)) {
            const Probability p = o.p_decimal.empty() && o.p_fraction.empty() ? Probability::from_fraction("1/2")
                                                                                : probability(o);
            report = cmd_bounds(o.graph, p, o.c, o.limits);
        } else if (app.got_subcommand(theorem3)) {
            report = cmd_verify_theorem3(std::stoi(o.params[0]), std::stoi(o.params[1]), std::stoi(o.params[2]),
                                         o.limits);
        } else if (app.got_subcommand(deviation)) {
            const std::uint64_t seed = o.seed.value_or(fresh_seed());
            report = cmd_deviation_bench(o.graph, probability(o).value, o.trials, seed, o.c_envelope);
        } else if (app.got_subcommand(shinkar)) {
            std::optional<std::uint64_t> samples;
            if (o.sample) samples = o.samples;
            report = cmd_verify_shinkar(std::stoi(o.params[0]), std::stoi(o.params[1]), o.subset_cap, samples, o.seed,
                                        o.limits);
        }
        const std::string text = render(*report, o.format);
        if (out) {
            std::ofstream file(*out);
            if (!file) throw std::runtime_error("cannot write " + out->string());
            file << text;
        } else {
            std::cout << text;
        }
        return report->exit_code();
    } catch (const EnumerationCapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const BudgetExhausted& e) {
        std::cerr << "error: " << e.what() << " (raise --node-budget)\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
