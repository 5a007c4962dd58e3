#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chromascope/chromatic.hpp"
#include "chromascope/expectation.hpp"
#include "chromascope/families.hpp"
#include "chromascope/graph_io.hpp"
#include "chromascope/spectral.hpp"

namespace py = pybind11;
using namespace chromascope;

namespace {

Rational to_rational(const py::handle& value) {
    py::object frac = py::module_::import("fractions").attr("Fraction")(value);
    return parse_fraction(py::str(frac.attr("numerator")).cast<std::string>() + "/" +
                          py::str(frac.attr("denominator")).cast<std::string>());
}

py::object to_fraction(const Rational& r) {
    return py::module_::import("fractions").attr("Fraction")(py::str(to_string(r)));
}

SolverLimits solver(std::uint64_t node_budget) { return SolverLimits{node_budget}; }

EnumerationLimits enumeration(std::size_t edge_cap, std::uint64_t node_budget) {
    EnumerationLimits limits;
    limits.edge_cap = edge_cap;
    limits.solver = solver(node_budget);
    return limits;
}

py::list edge_tuples(const Graph& g) {
    py::list out;
    for (const auto& e : g.edges()) out.append(py::make_tuple(e.u, e.v));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact and sampled chromatic statistics of random subgraphs";

    py::register_exception<BudgetExhausted>(m, "BudgetExhausted", PyExc_RuntimeError);
    py::register_exception<EnumerationCapExceeded>(m, "EnumerationCapExceeded", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    constexpr std::uint64_t budget = SolverLimits{}.node_budget;

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n") = 0)
        .def(py::init([](int n, const std::vector<VertexPair>& edges) { return Graph::from_edge_list(n, edges); }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def_property_readonly("edges", &edge_tuples)
        .def("neighbors", &Graph::neighbors)
        .def("degree", &Graph::degree)
        .def("adjacent", &Graph::adjacent)
        .def("without_edge", &Graph::without_edge)
        .def("__eq__", &Graph::operator==)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) + ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("read_graph", [](const std::string& path) { return read_graph_file(path); });
    m.def("write_graph", [](const std::string& path, const Graph& g) { write_graph_file(path, g); });
    m.def("triangles", [](const Graph& g) { return count_triangles(g).triangles; });

    m.def(
        "chromatic_number",
        [](const Graph& g, std::uint64_t node_budget) {
            const auto r = chromatic_number(g, solver(node_budget)).get();
            return py::make_tuple(r.chi, r.witness);
        },
        py::arg("graph"), py::arg("node_budget") = budget, "(chi, coloring) with coloring[v] in [0, chi)");
    m.def(
        "independence_number",
        [](const Graph& g, std::uint64_t node_budget) {
            const auto r = independence_number(g, solver(node_budget)).get();
            return py::make_tuple(r.alpha, r.witness);
        },
        py::arg("graph"), py::arg("node_budget") = budget);
    m.def(
        "is_edge_critical",
        [](const Graph& g, std::uint64_t node_budget) { return is_edge_critical(g, solver(node_budget)).critical; },
        py::arg("graph"), py::arg("node_budget") = budget);

    py::class_<ChiExpectationPolynomial>(m, "ExpectationPolynomial")
        .def_property_readonly("n", &ChiExpectationPolynomial::vertex_count)
        .def_property_readonly("m", &ChiExpectationPolynomial::edge_count)
        .def_property_readonly("chi", &ChiExpectationPolynomial::max_chi)
        .def("__call__", [](const ChiExpectationPolynomial& poly, double p) { return poly.evaluate(p); })
        .def("exact", [](const ChiExpectationPolynomial& poly, const py::handle& p) {
            return to_fraction(poly.evaluate(to_rational(p)));
        }, "Exact value at a rational p (Fraction, int or decimal string)")
        .def("to_json", [](const ChiExpectationPolynomial& poly) { return poly.to_json().dump(); });

    m.def("expectation_polynomial",
          [](const Graph& g, std::size_t edge_cap, std::uint64_t node_budget) {
              py::gil_scoped_release release;
              return exact_expectation_polynomial(g, enumeration(edge_cap, node_budget));
          },
          py::arg("graph"), py::arg("edge_cap") = 24, py::arg("node_budget") = budget);
    m.def(
        "expected_chi_montecarlo",
        [](const Graph& g, double p, std::uint64_t samples, std::uint64_t seed) {
            MonteCarloEstimate est;
            {
                py::gil_scoped_release release;
                est = expected_chi_montecarlo(g, p, samples, seed);
            }
            return py::make_tuple(est.mean, est.std_error);
        },
        py::arg("graph"), py::arg("p"), py::arg("samples"), py::arg("seed"), "(mean, std_error)");
    m.def("odd_cycle_closed_form",
          [](int k, const py::handle& p) { return to_fraction(odd_cycle_closed_form(k, to_rational(p))); });

    m.def("extreme_eigenvalues", [](const Graph& g) {
        const auto e = extreme_eigenvalues(adjacency_matrix(g));
        return py::make_tuple(e.lambda_max, e.lambda_min);
    });
    m.def("hoffman_bound", [](const Graph& g) { return hoffman_bound(g); });
    m.def(
        "spectral_bound",
        [](const Graph& g, double p, double c) {
            const auto b = theorem2_bound(g, p, c);
            return py::make_tuple(b.ratio_bound, b.chi_bound);
        },
        py::arg("graph"), py::arg("p"), py::arg("c") = 1.0, "(ratio_bound, chi_bound)");
    m.def(
        "perturbation_slack",
        [](const Graph& g, double p, std::uint64_t seed) {
            const auto r = perturbation_check(g, p, seed);
            return py::make_tuple(r.norm_x, r.slack_max, r.slack_min);
        },
        py::arg("graph"), py::arg("p"), py::arg("seed"), "(norm, slack_max, slack_min)");

    m.def("complete_graph", &complete_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("mycielskian", &mycielskian);
    m.def("mycielski_graph", &mycielski_graph);
    m.def("kneser_graph", [](int n, int k) { return kneser_graph(n, k); });
    m.def("kneser_certificates", [](int n, int k) {
        const auto c = kneser_certificates(n, k);
        return py::dict(py::arg("lambda_max") = c.lambda_max, py::arg("lambda_min") = c.lambda_min,
                        py::arg("alpha") = c.alpha, py::arg("chi") = c.chi);
    });
    m.def("zykov_family", [](int q, int n, int t) {
        auto fam = zykov_family(q, n, t);
        return py::make_tuple(fam.base, fam.parts, edge_coverage_check(fam).min_coverage);
    }, "(base, parts, min_coverage)");
    m.def(
        "kneser_ratio_check",
        [](int s, int k) {
            const auto r = shinkar_ratio_check(s, k);
            return py::make_tuple(to_fraction(r.max_ratio), r.witness);
        },
        "(max |V(H)|/alpha(H) over induced subgraphs of KG(sk,k), witness vertices)");
    m.def("edge_critical_witness", [](int chi, int girth) { return edge_critical_witness(chi, girth); });
    m.def("catalog", [] {
        py::list out;
        for (auto& entry : appendix_catalog())
            out.append(py::make_tuple(entry.name, entry.graph, entry.expected_value_at_half));
        return out;
    }, "[(name, graph, printed value at p=1/2)] for the four-triangle configurations and K4");
}
