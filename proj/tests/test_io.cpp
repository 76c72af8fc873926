#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "memwalk/io.hpp"

using namespace memwalk;

namespace {

Distribution sample_dist(int steps) {
    return run_distribution({WalkKind::quantum_order2, CoinSpec::hadamard(), ShiftCase::c,
                             InitialCondition::standard(), steps});
}

}  // namespace

TEST_CASE("json round-trip is exact") {
    for (int n : {2, 7, 14}) {
        Distribution d = sample_dist(n);
        nlohmann::json j = distribution_to_json(d, n);
        CHECK(j["schema"] == 1);
        CHECK(j["steps"] == n);
        CHECK(distribution_from_json(j) == d);
    }
}

TEST_CASE("json schema is validated") {
    nlohmann::json bad = {{"schema", 2}, {"positions", nlohmann::json::array()}};
    CHECK_THROWS_AS(distribution_from_json(bad), std::invalid_argument);
}

TEST_CASE("csv round-trip within float tolerance") {
    Distribution d = sample_dist(11);
    std::string csv = distribution_to_csv(d);
    CHECK(csv.rfind("position,probability\n", 0) == 0);
    CHECK(csv.find("\r") == std::string::npos);
    auto parsed = distribution_from_csv(csv);
    CHECK(parsed.size() == d.entries().size());
    for (const auto& [k, p] : d.entries())
        CHECK(std::abs(parsed.at(k) - p.to_double()) < 1e-12);
}

TEST_CASE("comparison table layout") {
    WalkComparison cmp = compare_walks(2);
    std::string csv = comparison_to_csv(cmp);
    CHECK(csv.rfind("position,p_classical,p_quantum,p_memory\n", 0) == 0);
    // Every position from -n to n appears, including zero-probability rows.
    CHECK(csv.find("\n-1,0,") != std::string::npos);
    CHECK(csv.find("\n0,0.5,") != std::string::npos);
    // Each column sums to one.
    auto rows = distribution_from_csv(csv);  // reuses position,first-column parse
    double classical_total = 0;
    for (const auto& [k, v] : rows) classical_total += v;
    CHECK(classical_total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("rational strings") {
    CHECK(Dyadic(5, 3).to_string() == "5/8");
    Distribution d = sample_dist(4);
    nlohmann::json j = distribution_to_json(d, 4);
    bool found = false;
    for (const auto& row : j["positions"])
        if (row["position"] == 0 && row["probability"] == "5/8") found = true;
    CHECK(found);
}
