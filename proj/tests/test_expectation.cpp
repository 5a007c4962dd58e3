#include <doctest.h>

#include <cmath>
#include <random>

#include "chromascope/expectation.hpp"
#include "chromascope/families.hpp"
#include "chromascope/philox.hpp"
#include "oracles.hpp"

using namespace chromascope;

namespace {

Rational tenth(int i) { return Rational(i, 10); }

ChiExpectationPolynomial poly(const Graph& g) { return exact_expectation_polynomial(g); }

// Exact r^(1/m) comparisons stay rational: value >= r^(1/m) iff value^m >= r.
bool at_least_root(const Rational& value, int r, int m) {
    Rational power = 1;
    for (int i = 0; i < m; ++i) power *= value;
    return power >= r;
}

}  // namespace

TEST_CASE("Philox4x64-10 known-answer vectors") {
    const auto zero = Philox4x64::block({0, 0, 0, 0}, {0, 0});
    CHECK(zero[0] == 0x16554d9eca36314cULL);
    CHECK(zero[1] == 0xdb20fe9d672d0fdcULL);
    CHECK(zero[2] == 0xd7e772cee186176bULL);
    CHECK(zero[3] == 0x7e68b68aec7ba23bULL);
    const auto one = Philox4x64::block({1, 0, 0, 0}, {0, 0});
    CHECK(one[0] == 213000021201967259ULL);
    CHECK(one[1] == 4455796210202625458ULL);
    CHECK(one[2] == 2055444239878205049ULL);
    CHECK(one[3] == 10411612076246414556ULL);
    CHECK(to_unit_interval(0) == 0.0);
    CHECK(to_unit_interval(~std::uint64_t{0}) < 1.0);
}

TEST_CASE("K4 at one half") {
    const auto p = poly(complete_graph(4));
    CHECK(p.evaluate(Rational(1, 2)) == Rational(151, 64));
    CHECK(p.evaluate(0.5) == doctest::Approx(2.359375).epsilon(1e-15));
    CHECK(oracle::expectation(complete_graph(4), Rational(1, 2)) == Rational(151, 64));
}

TEST_CASE("C7 at one half is exactly two") {
    CHECK(poly(cycle_graph(7)).evaluate(Rational(1, 2)) == 2);
}

TEST_CASE("exact polynomial matches brute-force enumeration with an independent chi oracle") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 3 + trial % 5;
        const auto g = oracle::random_graph(n, 0.6, rng);
        if (g.edge_count() > 12) continue;
        const auto e = poly(g);
        for (const Rational& p : {Rational(1, 3), Rational(1, 2), Rational(7, 10)})
            CHECK(e.evaluate(p) == oracle::expectation(g, p));
    }
}

TEST_CASE("count table structure") {
    const auto g = mycielski_graph(4);
    const auto e = poly(g);
    CHECK(e.count(0, 1) == 1);
    CHECK(e.max_chi() == 4);
    for (std::size_t k = 0; k <= e.edge_count(); ++k) {
        BigInt row = 0;
        for (const auto& c : e.counts()[k]) row += c;
        BigInt binom = 1;
        for (std::size_t i = 0; i < k; ++i) binom = binom * (e.edge_count() - i) / (i + 1);
        CHECK(row == binom);
    }
    CHECK(e.evaluate(Rational(0)) == 1);
    CHECK(e.evaluate(Rational(1)) == 4);
    CHECK_THROWS(e.evaluate(1.5));
    CHECK_THROWS(e.evaluate(Rational(-1, 3)));
    CHECK(ChiExpectationPolynomial::from_json(e.to_json()) == e);
}

TEST_CASE("odd cycles follow the closed form exactly") {
    for (int k = 1; k <= 6; ++k) {
        const auto e = poly(cycle_graph(2 * k + 1));
        for (int i = 1; i <= 9; ++i) CHECK(e.evaluate(tenth(i)) == odd_cycle_closed_form(k, tenth(i)));
    }
    CHECK(odd_cycle_closed_form(2, 0.3) == doctest::Approx(2 + std::pow(0.3, 5) - std::pow(0.7, 5)));
}

TEST_CASE("deleting any single edge strictly lowers the expectation") {
    for (const auto& g : {complete_graph(4), complete_graph(5), mycielski_graph(4)}) {
        const auto full = poly(g);
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            const auto less = poly(g.without_edge(i));
            for (int j = 1; j <= 9; ++j) CHECK(less.evaluate(tenth(j)) < full.evaluate(tenth(j)));
        }
    }
}

TEST_CASE("power bound at p = 1/m") {
    std::vector<Graph> corpus{complete_graph(4), complete_graph(5), complete_graph(6), cycle_graph(5),
                              cycle_graph(9), kneser_graph(5, 2), mycielski_graph(4)};
    std::mt19937_64 rng(13);
    for (int i = 0; i < 8; ++i) corpus.push_back(oracle::random_graph(7, 0.6, rng));
    for (const auto& g : corpus) {
        if (g.edge_count() > 20) continue;
        const auto e = poly(g);
        const int x = e.max_chi();
        CHECK(at_least_root(e.evaluate(Rational(1, 2)), x, 2));
        CHECK(at_least_root(e.evaluate(Rational(1, 3)), x, 3));
    }
}

TEST_CASE("evaluation stays within [1, chi]") {
    const auto e = poly(kneser_graph(5, 2));
    for (int i = 0; i <= 20; ++i) {
        const double v = e.evaluate(i / 20.0);
        CHECK(v >= 1.0 - 1e-12);
        CHECK(v <= 3.0 + 1e-12);
    }
}

TEST_CASE("enumeration cap is enforced") {
    CHECK_THROWS_AS(exact_expectation_polynomial(mycielski_graph(5)), EnumerationCapExceeded);
    EnumerationLimits tight;
    tight.edge_cap = 5;
    CHECK_THROWS_AS(exact_expectation_polynomial(complete_graph(4), tight), EnumerationCapExceeded);
}

TEST_CASE("worker count does not change the polynomial") {
    EnumerationLimits one;
    one.workers = 1;
    EnumerationLimits three;
    three.workers = 3;
    const auto g = kneser_graph(5, 2);
    CHECK(exact_expectation_polynomial(g, one) == exact_expectation_polynomial(g, three));
}

TEST_CASE("sampled subgraphs are reproducible and keep edges at rate p") {
    const auto g = complete_graph(30);
    CHECK(sample_subgraph(g, 0.4, 9, 3) == sample_subgraph(g, 0.4, 9, 3));
    CHECK_FALSE(sample_subgraph(g, 0.4, 9, 3) == sample_subgraph(g, 0.4, 9, 4));
    std::size_t kept = 0;
    for (std::uint64_t s = 0; s < 200; ++s) kept += sample_subgraph(g, 0.4, 1, s).count();
    const double rate = static_cast<double>(kept) / (200.0 * g.edge_count());
    CHECK(rate == doctest::Approx(0.4).epsilon(0.02));
    CHECK(sample_subgraph(g, 0.0, 1).count() == 0);
    CHECK(sample_subgraph(g, 1.0, 1).count() == g.edge_count());
}

TEST_CASE("Monte Carlo agrees with the exact value") {
    const auto g = complete_graph(4);
    const auto est = expected_chi_montecarlo(g, 0.5, 200000, 17);
    CHECK(std::abs(est.mean - 2.359375) <= 4 * est.std_error);
    const auto again = expected_chi_montecarlo(g, 0.5, 200000, 17);
    CHECK(again.mean == est.mean);
    CHECK(again.std_error == est.std_error);

    const auto zero = expected_chi_montecarlo(g, 0.0, 100, 1);
    CHECK(zero.mean == 1.0);
    CHECK(zero.std_error == 0.0);
    const auto one = expected_chi_montecarlo(g, 1.0, 100, 1);
    CHECK(one.mean == 4.0);
    CHECK(one.std_error == 0.0);
    CHECK_THROWS(expected_chi_montecarlo(g, 0.5, 1, 1));
}

TEST_CASE("Monte Carlo does not depend on the worker count") {
    EnumerationLimits one;
    one.workers = 1;
    EnumerationLimits four;
    four.workers = 4;
    const auto g = mycielski_graph(4);
    const auto a = expected_chi_montecarlo(g, 0.3, 5000, 8, one);
    const auto b = expected_chi_montecarlo(g, 0.3, 5000, 8, four);
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);
}

TEST_CASE("Monte Carlo mean lies in [1, chi]") {
    const auto est = expected_chi_montecarlo(mycielski_graph(5), 0.5, 2000, 3);
    CHECK(est.mean >= 1.0);
    CHECK(est.mean <= 5.0);
}

TEST_CASE("per-mask chi matches the general solver") {
    std::mt19937_64 rng(23);
    const auto g = mycielski_graph(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto mask = sample_subgraph(g, 0.2 + 0.015 * trial, 77, trial);
        CHECK(chi_of_subgraph(g, mask) == chromatic_number(subgraph_by_mask(g, mask)).get().chi);
    }
}

TEST_CASE("curves") {
    const std::vector<double> grid{0.0, 0.25, 0.5};
    const auto exact = curve(complete_graph(4), grid, CurveMode::exact, {});
    REQUIRE(exact.size() == 3);
    CHECK(exact[0].value == 1.0);
    CHECK(exact[2].value == doctest::Approx(2.359375));
    CHECK_FALSE(exact[1].std_error.has_value());
    const auto csv = curve_to_csv(exact);
    CHECK(csv.rfind("p,value,std_error\n", 0) == 0);

    CurveParams mc;
    mc.samples = 2000;
    mc.base_seed = 5;
    const auto sampled = curve(complete_graph(4), grid, CurveMode::montecarlo, mc);
    CHECK(sampled[1].std_error.has_value());
}
