#include "chromascope/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "chromascope/chromatic.hpp"
#include "chromascope/families.hpp"
#include "chromascope/format.hpp"
#include "chromascope/graph_io.hpp"
#include "chromascope/named_graphs.hpp"
#include "chromascope/spectral.hpp"

namespace chromascope::cli {

namespace {

constexpr double kAppendixTolerance = 5e-5;
constexpr double kBoundSlack = 1e-8;
constexpr double kPerturbationSlack = 1e-7;

int to_int(const std::string& text, const char* what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) throw std::invalid_argument(std::string("expected integer ") + what);
    return value;
}

void expect_params(const std::string& family, const std::vector<std::string>& params, std::size_t count) {
    if (params.size() != count)
        throw std::invalid_argument("gen " + family + " takes " + std::to_string(count) + " parameter(s)");
}

std::string monte_carlo_provenance(std::uint64_t seed, std::uint64_t samples) {
    return "monte-carlo seed=" + std::to_string(seed) + " samples=" + std::to_string(samples);
}

void describe_graph(RunReport& report, const Graph& g) {
    report.add_result("n", g.vertex_count(), "exact");
    report.add_result("m", g.edge_count(), "exact");
}

}  // namespace

Probability Probability::from_decimal(const std::string& text) {
    Probability p;
    p.exact = parse_decimal(text);
    p.value = p.exact.convert_to<double>();
    p.text = text;
    if (p.exact < 0 || p.exact > 1) throw std::invalid_argument("probability must lie in [0,1]");
    return p;
}

Probability Probability::from_fraction(const std::string& text) {
    Probability p;
    p.exact = parse_fraction(text);
    p.value = p.exact.convert_to<double>();
    p.text = text;
    if (p.exact < 0 || p.exact > 1) throw std::invalid_argument("probability must lie in [0,1]");
    return p;
}

Mode parse_mode(const std::string& text) {
    if (text == "exact") return Mode::exact;
    if (text == "mc" || text == "montecarlo") return Mode::montecarlo;
    throw std::invalid_argument("mode must be exact or mc");
}

std::uint64_t fresh_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

std::vector<GeneratedGraph> generate_family(const std::string& family, const std::vector<std::string>& params) {
    if (family == "complete") {
        expect_params(family, params, 1);
        return {{"complete", complete_graph(to_int(params[0], "n"))}};
    }
    if (family == "cycle") {
        expect_params(family, params, 1);
        return {{"cycle", cycle_graph(to_int(params[0], "n"))}};
    }
    if (family == "mycielski") {
        expect_params(family, params, 1);
        return {{"mycielski", mycielski_graph(to_int(params[0], "k"))}};
    }
    if (family == "kneser") {
        expect_params(family, params, 2);
        return {{"kneser", kneser_graph(to_int(params[0], "n"), to_int(params[1], "k"))}};
    }
    if (family == "petersen") {
        expect_params(family, params, 0);
        return {{"petersen", kneser_graph(5, 2)}};
    }
    if (family == "critical") {
        expect_params(family, params, 2);
        return {{"critical", edge_critical_witness(to_int(params[0], "chi"), to_int(params[1], "girth"))}};
    }
    if (family == "appendix") {
        expect_params(family, params, 1);
        for (auto& entry : appendix_catalog())
            if (entry.name == params[0]) return {{entry.name, entry.graph}};
        throw std::invalid_argument("unknown catalog entry " + params[0] + " (G1..G10, K4)");
    }
    if (family == "zykov") {
        expect_params(family, params, 3);
        auto fam = zykov_family(to_int(params[0], "q"), to_int(params[1], "n"), to_int(params[2], "t"));
        std::vector<GeneratedGraph> out{{"base", fam.base}};
        for (std::size_t i = 0; i < fam.parts.size(); ++i) out.push_back({"part" + std::to_string(i + 1), fam.parts[i]});
        return out;
    }
    throw std::invalid_argument("unknown family " + family +
                                " (complete, cycle, mycielski, kneser, petersen, zykov, appendix, critical)");
}

RunReport cmd_gen(const std::string& family, const std::vector<std::string>& params,
                  const std::optional<std::filesystem::path>& out) {
    RunReport report("gen");
    report.set_input("family", family);
    report.set_input("params", params);
    const auto graphs = generate_family(family, params);
    if (graphs.size() > 1 && !out) throw std::invalid_argument("gen " + family + " writes several files; pass --out");
    for (const auto& [label, g] : graphs) {
        const std::string prefix = graphs.size() > 1 ? label + "." : "";
        report.add_result(prefix + "n", g.vertex_count(), "exact");
        report.add_result(prefix + "m", g.edge_count(), "exact");
        if (out) {
            std::filesystem::path path = *out;
            if (graphs.size() > 1) path += "." + label + ".txt";
            write_graph_file(path, g);
            report.add_result(prefix + "file", path.string(), "output");
        }
    }
    if (family == "kneser" || family == "petersen") {
        const int n = family == "petersen" ? 5 : to_int(params[0], "n");
        const int k = family == "petersen" ? 2 : to_int(params[1], "k");
        if (k >= 1 && n >= 2 * k) {
            const auto cert = kneser_certificates(n, k);
            report.add_result("lambda_max", cert.lambda_max, "closed-form");
            report.add_result("lambda_min", cert.lambda_min, "closed-form");
            report.add_result("alpha", cert.alpha, "closed-form");
            report.add_result("chi", cert.chi, "closed-form");
        }
    } else if (family == "mycielski") {
        report.add_result("chi", to_int(params[0], "k"), "closed-form");
    } else if (family == "complete") {
        report.add_result("chi", to_int(params[0], "n"), "closed-form");
    } else if (family == "cycle") {
        report.add_result("chi", to_int(params[0], "n") % 2 == 0 ? 2 : 3, "closed-form");
    } else if (family == "critical") {
        report.add_result("chi", to_int(params[0], "chi"), "closed-form");
    } else if (family == "zykov") {
        const int q = to_int(params[0], "q");
        report.add_result("chi_part", q, "closed-form");
        report.add_result("chi_base", graphs.front().graph.vertex_count(), "closed-form");
    } else if (family == "appendix") {
        for (auto& entry : appendix_catalog())
            if (entry.name == params[0]) report.add_result("expected_chi_at_half", entry.expected_value_at_half, "printed");
        report.add_result("triangles", count_triangles(graphs.front().graph).count, "exact");
    }
    return report;
}

RunReport cmd_chi(const std::string& graph, const Limits& limits) {
    RunReport report("chi");
    report.set_input("graph", graph);
    const Graph g = resolve_graph(graph);
    describe_graph(report, g);
    const SolverLimits solver{limits.node_budget};
    const auto chi = chromatic_number(g, solver).get();
    const auto alpha = independence_number(g, solver).get();
    report.add_result("chi", chi.chi, "exact");
    report.add_result("chi_witness", chi.witness, "exact");
    report.add_result("alpha", alpha.alpha, "exact");
    report.add_result("alpha_witness", alpha.witness, "exact");
    report.add_result("max_degree", max_degree(g), "exact");
    report.add_result("triangles", count_triangles(g).count, "exact");
    if (g.edge_count() > 0) {
        const auto crit = is_edge_critical(g, solver);
        report.add_result("edge_critical", crit.critical, "exact");
        if (crit.violating_edge)
            report.add_result("violating_edge", {crit.violating_edge->u, crit.violating_edge->v}, "exact");
    }
    report.add_check("coloring witness is proper", true, is_proper_coloring(g, chi.witness),
                     is_proper_coloring(g, chi.witness));
    report.add_check("independent set witness", true, is_independent_set(g, alpha.witness),
                     is_independent_set(g, alpha.witness));
    return report;
}

RunReport cmd_expect(const std::string& graph, const Probability& p, Mode mode, std::uint64_t samples,
                     std::optional<std::uint64_t> seed, const Limits& limits) {
    RunReport report("expect");
    report.set_input("graph", graph);
    report.set_input("p", p.text);
    report.set_input("mode", mode == Mode::exact ? "exact" : "mc");
    const Graph g = resolve_graph(graph);
    describe_graph(report, g);
    if (mode == Mode::exact) {
        const auto poly = exact_expectation_polynomial(g, limits.enumeration());
        const Rational value = poly.evaluate(p.exact);
        report.add_result("expected_chi", to_string(value), "exact");
        report.add_result("expected_chi_decimal", to_decimal(value, 12), "exact");
        report.add_result("chi", poly.max_chi(), "exact");
        report.add_result("polynomial", poly.to_json(), "exact");
        bool rows_ok = true;
        for (std::size_t k = 0; k <= poly.edge_count(); ++k) {
            BigInt row = 0;
            for (const auto& c : poly.counts()[k]) row += c;
            BigInt binom = 1;
            for (std::size_t i = 0; i < k; ++i) binom = binom * (poly.edge_count() - i) / (i + 1);
            rows_ok = rows_ok && row == binom;
        }
        report.add_check("count rows sum to C(m,k)", true, rows_ok, rows_ok);
        if (g.vertex_count() > 0) {
            const bool bounded = value >= 1 && value <= poly.max_chi();
            report.add_check("1 <= E[chi] <= chi", true, bounded, bounded);
        }
    } else {
        const std::uint64_t s = seed.value_or(fresh_seed());
        report.set_input("seed", s);
        report.set_input("samples", samples);
        const auto est = expected_chi_montecarlo(g, p.value, samples, s, limits.enumeration());
        const std::string prov = monte_carlo_provenance(s, samples);
        report.add_result("expected_chi", est.mean, prov);
        report.add_result("std_error", est.std_error, prov);
        report.add_result("ci95_low", est.mean - 1.96 * est.std_error, prov);
        report.add_result("ci95_high", est.mean + 1.96 * est.std_error, prov);
    }
    return report;
}

RunReport cmd_verify_appendix(const Limits& limits) {
    RunReport report("verify-appendix");
    const auto catalog = appendix_catalog();
    std::vector<ChiExpectationPolynomial> polys;
    for (const auto& entry : catalog) polys.push_back(exact_expectation_polynomial(entry.graph, limits.enumeration()));

    const Rational half(1, 2);
    std::vector<double> at_half;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        const Rational exact = polys[i].evaluate(half);
        const double value = exact.convert_to<double>();
        at_half.push_back(value);
        report.add_result(catalog[i].name, to_string(exact), "exact");
        const double err = std::abs(value - catalog[i].expected_value_at_half);
        report.add_check(catalog[i].name + " E[chi] at p=1/2", catalog[i].expected_value_at_half, value,
                         err <= kAppendixTolerance, kAppendixTolerance);
        const auto triangles = count_triangles(catalog[i].graph).count;
        report.add_check(catalog[i].name + " has 4 triangles", 4, triangles, triangles == 4);
    }

    const std::size_t k4 = catalog.size() - 1;
    for (int tenth = 1; tenth <= 5; ++tenth) {
        const Rational p(tenth, 10);
        const Rational k4_value = polys[k4].evaluate(p);
        std::string runner_up;
        Rational runner_value = -1;
        for (std::size_t i = 0; i < k4; ++i) {
            const Rational v = polys[i].evaluate(p);
            if (runner_value < 0 || v < runner_value) {
                runner_value = v;
                runner_up = catalog[i].name;
            }
        }
        const bool minimal = k4_value < runner_value;
        report.add_check("K4 strictly minimal at p=" + to_string(p), to_decimal(k4_value, 6),
                         runner_up + "=" + to_decimal(runner_value, 6), minimal);
    }

    std::vector<std::string> below;
    for (std::size_t i = 0; i < k4; ++i)
        if (at_half[i] < at_half[k4]) below.push_back(catalog[i].name);
    report.add_check("entries below K4 at p=1/2", std::vector<std::string>{"G8"}, below,
                     below == std::vector<std::string>{"G8"});
    return report;
}

std::string conjecture_verdict(double value, std::optional<double> std_error, double reference) {
    if (value >= reference) return "consistent";
    const double se = std_error.value_or(0.0);
    if (value + 4.0 * se < reference) return "violation at >=4 sigma";
    return "inconclusive";
}

RunReport cmd_curve(const CurveRequest& request, const Limits& limits) {
    RunReport report("curve");
    report.set_input("graph", request.graph);
    report.set_input("p_min", request.p_min);
    report.set_input("p_max", request.p_max);
    report.set_input("steps", request.steps);
    report.set_input("mode", request.mode == Mode::exact ? "exact" : "mc");
    if (!(0.0 <= request.p_min && request.p_min <= request.p_max && request.p_max <= 1.0))
        throw std::invalid_argument("need 0 <= p_min <= p_max <= 1");
    if (request.steps < 1) throw std::invalid_argument("need at least one grid point");
    std::vector<double> grid;
    for (int i = 0; i < request.steps; ++i) {
        const double t = request.steps == 1 ? 0.0 : static_cast<double>(i) / (request.steps - 1);
        // snap to 12 decimals so grids like 0.05..0.5 print as typed
        grid.push_back(std::round((request.p_min + t * (request.p_max - request.p_min)) * 1e12) / 1e12);
    }
    const Graph g = resolve_graph(request.graph);
    describe_graph(report, g);
    CurveParams params;
    params.limits = limits.enumeration();
    params.samples = request.samples;
    std::string provenance = "exact";
    if (request.mode == Mode::montecarlo) {
        params.base_seed = request.seed.value_or(fresh_seed());
        report.set_input("seed", params.base_seed);
        report.set_input("samples", request.samples);
        provenance = monte_carlo_provenance(params.base_seed, request.samples);
    }
    const auto points =
        curve(g, grid, request.mode == Mode::exact ? CurveMode::exact : CurveMode::montecarlo, params);
    report.set_csv(curve_to_csv(points));
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& pt : points) {
        nlohmann::json row = {{"p", pt.p}, {"value", pt.value}};
        if (pt.std_error) row["std_error"] = *pt.std_error;
        rows.push_back(std::move(row));
    }
    report.add_result("points", rows, provenance);

    if (request.reference) {
        report.set_input("reference", *request.reference);
        const Graph ref = resolve_graph(*request.reference);
        const auto ref_points = curve(ref, grid, CurveMode::exact, params);
        nlohmann::json verdicts = nlohmann::json::array();
        for (std::size_t i = 0; i < points.size(); ++i) {
            const std::string verdict = conjecture_verdict(points[i].value, points[i].std_error, ref_points[i].value);
            verdicts.push_back({{"p", points[i].p}, {"reference", ref_points[i].value}, {"verdict", verdict}});
            report.add_check("value >= reference at p=" + format_double(points[i].p), ref_points[i].value,
                             points[i].value, verdict != "violation at >=4 sigma");
        }
        report.add_result("verdicts", verdicts, provenance + " vs exact reference");
    }
    return report;
}

RunReport cmd_bounds(const std::string& graph, const Probability& p, double c, const Limits& limits) {
    RunReport report("bounds");
    report.set_input("graph", graph);
    report.set_input("p", p.text);
    report.set_input("c", c);
    const Graph g = resolve_graph(graph);
    describe_graph(report, g);
    const SolverLimits solver{limits.node_budget};
    const int chi = chromatic_number(g, solver).get().chi;
    const int alpha = independence_number(g, solver).get().alpha;
    const int n = g.vertex_count();
    report.add_result("chi", chi, "exact");
    report.add_result("alpha", alpha, "exact");
    report.add_result("max_degree", max_degree(g), "exact");
    const double ratio = alpha > 0 ? static_cast<double>(n) / alpha : 0.0;
    report.add_result("n_over_alpha", ratio, "exact");
    report.add_result("chi_pow_p", std::pow(static_cast<double>(chi), p.value), "closed-form");
    if (n >= 2) report.add_result("aks_value", aks_lower_bound(chi, n), "closed-form");
    if (g.edge_count() == 0) {
        report.add_result("hoffman", "undefined (edgeless; chi >= 1 trivially)", "closed-form");
        return report;
    }
    const auto spectrum = spectrum_summary(g);
    report.add_result("lambda_max", spectrum.lambda_max, "jacobi");
    report.add_result("lambda_min", spectrum.lambda_min, "jacobi");
    const double hoffman = hoffman_bound(spectrum);
    report.add_result("hoffman", hoffman, "jacobi");
    if (p.value > 0.0) {
        const auto bound = theorem2_bound(spectrum, p.value, c);
        report.add_result("spectral_ratio_bound", bound.ratio_bound, "jacobi + closed-form");
        report.add_result("spectral_chi_bound", bound.chi_bound, "jacobi + closed-form");
        report.add_result("spectral_compact_bound", compact_spectral_bound(g, spectrum, p.value, c),
                          "jacobi + closed-form");
    }
    report.add_check("hoffman <= chi", chi, hoffman, hoffman <= chi + kBoundSlack, kBoundSlack);
    // the ratio bound n/alpha >= hoffman is a theorem only for regular graphs
    const int d0 = g.degree(0);
    bool regular = true;
    for (int v = 1; v < n; ++v) regular = regular && g.degree(v) == d0;
    if (regular) report.add_check("hoffman <= n/alpha", ratio, hoffman, hoffman <= ratio + kBoundSlack, kBoundSlack);
    else report.add_result("hoffman_vs_n_over_alpha", "not asserted (graph is not regular)", "closed-form");
    report.add_check("n/alpha <= chi", chi, ratio, ratio <= chi + kBoundSlack, kBoundSlack);
    return report;
}

RunReport cmd_verify_theorem3(int q, int n, int t, const Limits& limits) {
    RunReport report("verify-theorem3");
    report.set_input("q", q);
    report.set_input("n", n);
    report.set_input("t", t);
    const auto fam = zykov_family(q, n, t);
    report.add_result("vertices", fam.base.vertex_count(), "exact");
    const auto coverage = edge_coverage_check(fam);
    report.add_result("min_coverage", coverage.min_coverage, "exact");
    report.add_check("every base edge lies in >= n-t parts", n - t, coverage.min_coverage,
                     coverage.min_coverage >= n - t);

    const SolverLimits solver{limits.node_budget};
    BigInt product = 1;
    for (std::size_t i = 0; i < fam.parts.size(); ++i) {
        const auto coloring = chromatic_number(fam.parts[i], solver).get();
        product *= coloring.chi;
        report.add_check("chi(G_" + std::to_string(i + 1) + ") = q", q, coloring.chi, coloring.chi == q);
    }
    const int chi_base = chromatic_number(fam.base, solver).get().chi;
    report.add_result("chi_base", chi_base, "exact");
    report.add_result("product", product.str(), "exact");

    BigInt q_pow_n = 1;
    for (int i = 0; i < n; ++i) q_pow_n *= q;
    report.add_check("product = q^n", q_pow_n.str(), product.str(), product == q_pow_n);
    // product = chi_base^(n/(t+1))  <=>  product^(t+1) = chi_base^n
    BigInt lhs = 1;
    for (int i = 0; i <= t; ++i) lhs *= product;
    BigInt rhs = 1;
    for (int i = 0; i < n; ++i) rhs *= chi_base;
    report.add_check("product = chi(base)^(n/(t+1))", rhs.str(), lhs.str(), lhs == rhs);
    return report;
}

RunReport cmd_deviation_bench(const std::string& graph, double p, int trials, std::uint64_t base_seed,
                              double c_envelope) {
    RunReport report("deviation-bench");
    report.set_input("graph", graph);
    report.set_input("p", p);
    report.set_input("trials", trials);
    report.set_input("seed", base_seed);
    report.set_input("c", c_envelope);
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    const Graph g = resolve_graph(graph);
    describe_graph(report, g);

    std::ostringstream csv;
    csv << "seed,p,norm_x,sigma_exact,envelope_c4,perturb_slack_max,perturb_slack_min\n";
    int violations = 0;
    int perturbation_failures = 0;
    double max_ratio = 0.0;
    double worst_slack = std::numeric_limits<double>::infinity();
    for (int i = 0; i < trials; ++i) {
        const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(i);
        const auto r = perturbation_check(g, p, seed);
        const double envelope = c_envelope * r.envelope_unit;
        if (r.norm_x > envelope) ++violations;
        if (!r.holds(kPerturbationSlack)) ++perturbation_failures;
        if (r.envelope_unit > 0.0) max_ratio = std::max(max_ratio, r.norm_x / r.envelope_unit);
        worst_slack = std::min({worst_slack, r.slack_max, r.slack_min});
        csv << seed << ',' << format_double(p) << ',' << format_double(r.norm_x) << ','
            << format_double(r.sigma_exact) << ',' << format_double(envelope) << ',' << format_double(r.slack_max)
            << ',' << format_double(r.slack_min) << '\n';
    }
    report.set_csv(csv.str());
    const std::string prov = "sampled seeds " + std::to_string(base_seed) + ".." +
                             std::to_string(base_seed + static_cast<std::uint64_t>(trials) - 1);
    report.add_result("max_norm_ratio", max_ratio, prov);
    report.add_result("envelope_violations", violations, prov);
    report.add_result("worst_perturbation_slack", worst_slack, prov);
    report.add_check("perturbation inequality holds in every trial", 0, perturbation_failures,
                     perturbation_failures == 0, kPerturbationSlack);
    report.add_check("norm within c(sqrt(delta)+sqrt(ln n))", 0, violations, violations == 0);
    return report;
}

RunReport cmd_verify_shinkar(int s, int k, std::uint64_t subset_cap, std::optional<std::uint64_t> samples,
                             std::optional<std::uint64_t> seed, const Limits& limits) {
    RunReport report("verify-shinkar");
    report.set_input("s", s);
    report.set_input("k", k);
    ShinkarReport result;
    std::string prov = "exhaustive";
    if (samples) {
        const std::uint64_t used = seed.value_or(fresh_seed());
        report.set_input("samples", *samples);
        report.set_input("seed", used);
        result = shinkar_ratio_sample(s, k, *samples, used, SolverLimits{limits.node_budget});
        prov = "sampled seed=" + std::to_string(used) + " subsets=" + std::to_string(*samples);
    } else {
        result = shinkar_ratio_check(s, k, subset_cap);
    }
    const Graph g = kneser_graph(s * k, k);
    describe_graph(report, g);
    report.add_result("subsets_checked", result.subsets_checked, prov);
    report.add_result("max_ratio", to_string(result.max_ratio), prov);
    report.add_result("witness", result.witness, prov);
    report.add_result("witness_alpha", result.witness_alpha, prov);
    report.add_result("exhaustive", result.exhaustive, prov);
    if (s * k >= 2 * k) {
        const auto cert = kneser_certificates(s * k, k);
        report.add_result("chi", cert.chi, "closed-form");
        report.add_result("alpha", cert.alpha, "closed-form");
        report.add_result("n_over_alpha", to_string(Rational(g.vertex_count(), cert.alpha)), "closed-form");
    }
    report.add_check("max |V(H)|/alpha(H) <= s", s, to_string(result.max_ratio), result.max_ratio <= s);
    return report;
}

}  // namespace chromascope::cli
