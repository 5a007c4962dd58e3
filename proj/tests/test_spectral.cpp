#include <doctest.h>

#include <cmath>
#include <random>

#include "chromascope/chromatic.hpp"
#include "chromascope/expectation.hpp"
#include "chromascope/families.hpp"
#include "chromascope/spectral.hpp"
#include "oracles.hpp"

using namespace chromascope;

namespace {

Graph star_graph(int leaves) {
    std::vector<VertexPair> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph::from_edge_list(leaves + 1, edges);
}

std::vector<Graph> corpus() {
    std::vector<Graph> out{complete_graph(2), complete_graph(5), complete_graph(8), cycle_graph(5),
                           cycle_graph(8),    cycle_graph(11),   mycielski_graph(3), mycielski_graph(4),
                           mycielski_graph(5), kneser_graph(5, 2), kneser_graph(6, 2), kneser_graph(7, 3),
                           star_graph(6)};
    std::mt19937_64 rng(31);
    for (int i = 0; i < 12; ++i) {
        auto g = oracle::random_graph(9 + i % 4, 0.45, rng);
        if (g.edge_count() > 0) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace

TEST_CASE("Jacobi matches Eigen on the full spectrum") {
    for (const auto& g : corpus()) {
        const auto ours = symmetric_eigenvalues(adjacency_matrix(g));
        const auto ref = oracle::eigenvalues(g);
        REQUIRE(ours.size() == static_cast<std::size_t>(ref.size()));
        for (std::size_t i = 0; i < ours.size(); ++i) CHECK(ours[i] == doctest::Approx(ref[i]).epsilon(1e-9));
    }
}

TEST_CASE("known spectra up to n = 200") {
    for (int n : {3, 10, 57, 200}) {
        const auto k = extreme_eigenvalues(adjacency_matrix(complete_graph(n)));
        CHECK(std::abs(k.lambda_max - (n - 1)) < 1e-8);
        CHECK(std::abs(k.lambda_min + 1) < 1e-8);
        const auto c = extreme_eigenvalues(adjacency_matrix(cycle_graph(n)));
        CHECK(std::abs(c.lambda_max - 2) < 1e-8);
        const double cmin = n % 2 == 0 ? -2.0 : 2.0 * std::cos(M_PI * (n - 1) / n);
        CHECK(std::abs(c.lambda_min - cmin) < 1e-8);
        const auto s = extreme_eigenvalues(adjacency_matrix(star_graph(n - 1)));
        CHECK(std::abs(s.lambda_max - std::sqrt(n - 1.0)) < 1e-8);
        CHECK(std::abs(s.lambda_min + std::sqrt(n - 1.0)) < 1e-8);
    }
}

TEST_CASE("spectral summaries respect the Perron bound") {
    for (const auto& g : corpus()) {
        const auto s = spectrum_summary(g);
        CHECK(s.lambda_min <= s.lambda_max);
        CHECK(std::abs(s.lambda_max) <= s.delta + 1e-9);
        CHECK(std::abs(s.lambda_min) <= s.delta + 1e-9);
        CHECK(s.lambda_min < 0.0);
        CHECK(s.lambda_max > 0.0);
    }
}

TEST_CASE("asymmetric input and empty matrices") {
    DenseMatrix a(2);
    a(0, 1) = 1.0;
    CHECK_THROWS_AS(symmetric_eigenvalues(a), std::invalid_argument);
    CHECK_THROWS(extreme_eigenvalues(DenseMatrix(0)));
    CHECK(operator_norm(DenseMatrix(0)) == 0.0);
    JacobiOptions stingy;
    stingy.max_sweeps = 0;
    CHECK_THROWS_AS(symmetric_eigenvalues(adjacency_matrix(cycle_graph(5)), stingy), EigenSolverError);
}

bool regular(const Graph& g) {
    for (int v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) != g.degree(0)) return false;
    return true;
}

TEST_CASE("Hoffman bound never exceeds chi, nor n/alpha on regular graphs") {
    int regular_seen = 0;
    for (const auto& g : corpus()) {
        const double h = hoffman_bound(g);
        const int chi = chromatic_number(g).get().chi;
        const int alpha = independence_number(g).get().alpha;
        CHECK(h <= chi + 1e-8);
        if (regular(g)) {
            ++regular_seen;
            CHECK(h <= static_cast<double>(g.vertex_count()) / alpha + 1e-8);
        }
    }
    CHECK(regular_seen >= 9);
}

TEST_CASE("n/alpha can fall below the Hoffman value off regular graphs") {
    const auto star = star_graph(6);
    CHECK(hoffman_bound(star) == doctest::Approx(2.0));
    CHECK(7.0 / independence_number(star).get().alpha < 2.0);
}

TEST_CASE("Hoffman reference values") {
    CHECK(hoffman_bound(complete_graph(10)) == doctest::Approx(10.0));
    CHECK(hoffman_bound(kneser_graph(5, 2)) == doctest::Approx(2.5));
    CHECK(hoffman_bound(kneser_graph(6, 2)) == doctest::Approx(3.0));
    CHECK_THROWS(hoffman_bound(Graph(4)));
}

TEST_CASE("spectral bound is monotone in c and p") {
    for (const auto& g : corpus()) {
        const auto s = spectrum_summary(g);
        double prev = theorem2_bound(s, 0.5, 0.25).chi_bound;
        for (double c : {0.5, 1.0, 2.0, 8.0}) {
            const double next = theorem2_bound(s, 0.5, c).chi_bound;
            CHECK(next <= prev + 1e-12);
            prev = next;
        }
        prev = theorem2_bound(s, 0.1, 1.0).chi_bound;
        for (double p : {0.2, 0.5, 0.9, 1.0}) {
            const double next = theorem2_bound(s, p, 1.0).chi_bound;
            CHECK(next >= prev - 1e-12);
            prev = next;
        }
        CHECK(theorem2_bound(s, 0.5, 1e9).chi_bound > 0.0);
        CHECK(theorem2_bound(s, 0.5, 1e9).chi_bound < 1e-6);
    }
}

TEST_CASE("spectral bound closed form") {
    const auto g = complete_graph(10);
    const auto b = theorem2_bound(g, 0.5, 1.0);
    const double shift = 2.0 * (3.0 + std::sqrt(std::log(10.0)));
    CHECK(b.chi_bound == doctest::Approx(9.0 / (1.0 + shift)));
    CHECK(b.ratio_bound == doctest::Approx((9.0 - shift) / (1.0 + shift)));
    const auto s = spectrum_summary(g);
    CHECK(compact_spectral_bound(g, s, 0.5, 1.0) == doctest::Approx(9.0 / (1.0 + 6.0)));
    CHECK_THROWS(theorem2_bound(g, 0.0, 1.0));
    CHECK_THROWS(theorem2_bound(g, 0.5, 0.0));
    CHECK_THROWS(theorem2_bound(Graph(3), 0.5, 1.0));
}

TEST_CASE("perturbation inequality on sampled instances") {
    for (const auto& g : {complete_graph(4), kneser_graph(5, 2), mycielski_graph(4), mycielski_graph(5)}) {
        for (double p : {0.3, 0.5, 0.8}) {
            for (std::uint64_t seed = 0; seed < 20; ++seed) {
                const auto r = perturbation_check(g, p, seed);
                CHECK(r.holds(1e-8));
                CHECK(r.norm_x >= 0.0);
                CHECK(r.sigma_exact <= std::sqrt(static_cast<double>(max_degree(g))) + 1e-12);
            }
        }
    }
}

TEST_CASE("deviation at p = 1 vanishes") {
    const auto t = deviation_trial(kneser_graph(5, 2), 1.0, 3);
    CHECK(t.norm_x == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(t.sigma_exact == 0.0);
}

TEST_CASE("deviation envelope on Petersen") {
    const auto g = kneser_graph(5, 2);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto t = deviation_trial(g, 0.5, seed);
        CHECK(t.norm_x <= t.envelope(4.0));
    }
}

TEST_CASE("deviation matrix uses the sampled subgraph") {
    const auto g = mycielski_graph(4);
    const auto kept = sample_subgraph(g, 0.5, 12);
    DenseMatrix d = adjacency_matrix(subgraph_by_mask(g, kept));
    DenseMatrix scaled = adjacency_matrix(g);
    scaled *= 0.5;
    d -= scaled;
    CHECK(deviation_trial(g, 0.5, 12).norm_x == doctest::Approx(operator_norm(d)).epsilon(1e-12));
}
