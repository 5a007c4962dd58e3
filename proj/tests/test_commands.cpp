#include <doctest.h>

#include "chromascope/commands.hpp"

using namespace chromascope;
using namespace chromascope::cli;

namespace {

const nlohmann::json& value(const RunReport& r, const std::string& key) { return r.results().at(key).at("value"); }

}  // namespace

TEST_CASE("probabilities parse exactly") {
    CHECK(Probability::from_decimal("0.35").exact == Rational(7, 20));
    CHECK(Probability::from_fraction("3/8").exact == Rational(3, 8));
    CHECK(Probability::from_fraction("3/8").value == 0.375);
    CHECK_THROWS(Probability::from_decimal("1.5"));
    CHECK_THROWS(Probability::from_fraction("1/0"));
    CHECK_THROWS(Probability::from_decimal("abc"));
}

TEST_CASE("expect reports exact rationals") {
    const auto k4 = cmd_expect("K4", Probability::from_decimal("0.5"), Mode::exact, 0, std::nullopt, {});
    CHECK(value(k4, "expected_chi") == "151/64");
    CHECK(k4.results().at("expected_chi").at("provenance") == "exact");
    CHECK(k4.exit_code() == 0);
    const auto c7 = cmd_expect("C7", Probability::from_fraction("1/2"), Mode::exact, 0, std::nullopt, {});
    CHECK(value(c7, "expected_chi") == "2");
    Limits tight;
    tight.edge_cap = 4;
    CHECK_THROWS_AS(cmd_expect("K4", Probability::from_decimal("0.5"), Mode::exact, 0, std::nullopt, tight),
                    EnumerationCapExceeded);
}

TEST_CASE("Monte Carlo reports are reproducible and carry the seed") {
    auto run = [] { return cmd_expect("M4", Probability::from_decimal("0.5"), Mode::montecarlo, 3000, 7, {}); };
    const auto a = run();
    CHECK(a.to_json().dump() == run().to_json().dump());
    CHECK(a.inputs().at("seed") == 7);
    CHECK(a.results().at("expected_chi").at("provenance") == "monte-carlo seed=7 samples=3000");
    const auto unseeded = cmd_expect("K4", Probability::from_decimal("0.5"), Mode::montecarlo, 100, std::nullopt, {});
    CHECK(unseeded.inputs().contains("seed"));
}

TEST_CASE("catalog verification value rows") {
    const auto r = cmd_verify_appendix({});
    int value_rows = 0;
    for (const auto& c : r.checks())
        if (c.name.find("E[chi] at p=1/2") != std::string::npos) {
            ++value_rows;
            CHECK(c.pass);
        }
    CHECK(value_rows == 11);
    for (const auto& c : r.checks())
        if (c.name == "entries below K4 at p=1/2") CHECK(c.pass);
}

TEST_CASE("curve of M4 stays above K4 on [0.05, 0.5]") {
    CurveRequest req;
    req.graph = "M4";
    req.p_min = 0.05;
    req.p_max = 0.5;
    req.steps = 10;
    req.reference = "K4";
    const auto r = cmd_curve(req, {});
    CHECK(r.all_passed());
    CHECK(r.checks().size() == 10);
    CHECK(r.csv().rfind("p,value,std_error\n", 0) == 0);

    req.steps = 11;
    req.p_min = 0.0;
    req.reference.reset();
    CHECK(cmd_curve(req, {}).results().at("points").at("value").size() == 11);
    req.p_min = 0.7;
    CHECK_THROWS(cmd_curve(req, {}));
}

TEST_CASE("curve comparison verdicts") {
    CHECK(conjecture_verdict(2.5, 0.01, 2.4) == "consistent");
    CHECK(conjecture_verdict(2.39, 0.01, 2.4) == "inconclusive");
    CHECK(conjecture_verdict(2.3, 0.01, 2.4) == "violation at >=4 sigma");
    CHECK(conjecture_verdict(2.3, std::nullopt, 2.4) == "violation at >=4 sigma");
}

TEST_CASE("bounds side by side") {
    const auto k10 = cmd_bounds("K10", Probability::from_decimal("0.5"), 1.0, {});
    CHECK(value(k10, "chi") == 10);
    CHECK(value(k10, "hoffman").get<double>() == doctest::Approx(10.0));
    CHECK(k10.all_passed());
    const auto kg = cmd_bounds("KG6,2", Probability::from_decimal("0.5"), 1.0, {});
    CHECK(value(kg, "hoffman").get<double>() == doctest::Approx(3.0));
    CHECK(value(kg, "chi") == 4);
    CHECK(kg.results().contains("spectral_compact_bound"));
    CHECK(kg.results().contains("spectral_chi_bound"));
    CHECK(kg.results().contains("aks_value"));
    CHECK(kg.results().contains("chi_pow_p"));
    CHECK(cmd_bounds("E4", Probability::from_decimal("0.5"), 1.0, {}).exit_code() == 0);
}

TEST_CASE("product family verification instances") {
    for (auto [q, n, t] : {std::tuple{3, 2, 1}, {5, 2, 1}, {5, 3, 1}, {5, 4, 1}}) {
        const auto r = cmd_verify_theorem3(q, n, t, {});
        CHECK(r.exit_code() == 0);
    }
    CHECK(value(cmd_verify_theorem3(3, 2, 1, {}), "product") == "9");
    CHECK(value(cmd_verify_theorem3(5, 3, 1, {}), "product") == "125");
    CHECK_THROWS(cmd_verify_theorem3(4, 2, 1, {}));
}

TEST_CASE("deviation bench") {
    const auto r = cmd_deviation_bench("petersen", 0.5, 100, 1, 4.0);
    CHECK(value(r, "envelope_violations") == 0);
    CHECK(r.exit_code() == 0);
    CHECK(r.csv().rfind("seed,p,norm_x,sigma_exact,envelope_c4,perturb_slack_max,perturb_slack_min\n", 0) == 0);
    const auto full = cmd_deviation_bench("petersen", 1.0, 5, 1, 4.0);
    CHECK(value(full, "max_norm_ratio").get<double>() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS(cmd_deviation_bench("petersen", 0.5, 0, 1, 4.0));
}

TEST_CASE("Kneser ratio command") {
    const auto r = cmd_verify_shinkar(3, 2, std::uint64_t{1} << 20, std::nullopt, std::nullopt, {});
    CHECK(r.exit_code() == 0);
    CHECK(value(r, "max_ratio") == "3");
    CHECK(value(r, "chi") == 4);
    CHECK(value(r, "witness").size() == 15);
    CHECK(cmd_verify_shinkar(2, 2, 1000, std::nullopt, std::nullopt, {}).exit_code() == 0);
    CHECK_THROWS_AS(cmd_verify_shinkar(3, 2, 100, std::nullopt, std::nullopt, {}), EnumerationCapExceeded);
}

TEST_CASE("gen reports sizes and certificates") {
    const auto kg = cmd_gen("kneser", {"5", "2"}, std::nullopt);
    CHECK(value(kg, "n") == 10);
    CHECK(value(kg, "m") == 15);
    CHECK(value(kg, "chi") == 3);
    const auto m4 = cmd_gen("mycielski", {"4"}, std::nullopt);
    CHECK(value(m4, "n") == 11);
    CHECK_THROWS(cmd_gen("zykov", {"3", "2", "1"}, std::nullopt));
    CHECK_THROWS(cmd_gen("kneser", {"5"}, std::nullopt));
    CHECK_THROWS(cmd_gen("nope", {}, std::nullopt));
}

TEST_CASE("chi command") {
    const auto r = cmd_chi("grotzsch", {});
    CHECK(value(r, "chi") == 4);
    CHECK(value(r, "edge_critical") == true);
    CHECK(r.all_passed());
    CHECK_THROWS(cmd_chi("no-such-graph", {}));
}

TEST_CASE("reports are byte-identical across reruns") {
    CHECK(cmd_bounds("petersen", Probability::from_decimal("0.3"), 1.0, {}).to_json().dump() ==
          cmd_bounds("petersen", Probability::from_decimal("0.3"), 1.0, {}).to_json().dump());
    CHECK(cmd_deviation_bench("M4", 0.5, 10, 3, 4.0).to_text() == cmd_deviation_bench("M4", 0.5, 10, 3, 4.0).to_text());
}
