#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "memwalk/analysis.hpp"

using namespace memwalk;

namespace {

Distribution memory_dist(int steps) {
    return run_distribution({WalkKind::quantum_order2, CoinSpec::hadamard(), ShiftCase::c,
                             InitialCondition::standard(), steps});
}

}  // namespace

TEST_CASE("localization series from the standard start") {
    auto rows = localization_series(24, InitialCondition::standard());
    REQUIRE(rows.size() == 12);

    CHECK(rows[0].steps == 2);
    CHECK(rows[0].lr == ScaledAmplitude{1, 2});
    CHECK(rows[0].rl == ScaledAmplitude{1, 2});
    CHECK(rows[0].origin_probability == Dyadic(1, 1));

    for (const auto& row : rows) {
        // a_LR(n) and a_RL(n) are positive and sum to exactly one.
        CHECK(row.lr.numerator > 0);
        CHECK(row.rl.numerator > 0);
        CHECK(row.lr.numerator + row.rl.numerator == 1LL << (row.steps / 2));
        CHECK(row.origin_probability >= Dyadic(1, 1));
        CHECK(row.origin_probability >=
              row.lr.squared() + row.rl.squared());
    }

    // The inductive transfer keeps the pair sum at one across step pairs.
    for (std::size_t i = 1; i < rows.size(); ++i)
        CHECK(rows[i].lr.numerator + rows[i].rl.numerator ==
              2 * (rows[i - 1].lr.numerator + rows[i - 1].rl.numerator));

    CHECK_THROWS_AS(localization_series(7, InitialCondition::standard()),
                    std::invalid_argument);
}

TEST_CASE("symmetric-start series is measured but carries no exact pair identity") {
    auto rows = localization_series(12, InitialCondition::symmetric());
    for (const auto& row : rows) CHECK(row.origin_probability > Dyadic::zero());
}

TEST_CASE("symmetry check") {
    SUBCASE("even-step distributions are symmetric") {
        for (int n : {2, 6, 12, 40}) {
            auto rep = symmetry_check(memory_dist(n));
            CHECK(rep.symmetric);
        }
    }
    SUBCASE("short odd walks are still symmetric") {
        // One and three steps coincide with the classical shape; the
        // asymmetry first shows at five steps.
        CHECK(symmetry_check(memory_dist(1)).symmetric);
        CHECK(symmetry_check(memory_dist(3)).symmetric);
    }
    SUBCASE("longer odd walks break symmetry only at +-1") {
        for (int n : {5, 9, 15, 21}) {
            auto rep = symmetry_check(memory_dist(n));
            CHECK(!rep.symmetric);
            std::vector<long long> v = rep.asymmetric_positions;
            std::sort(v.begin(), v.end());
            CHECK(v == std::vector<long long>{-1, 1});
        }
    }
    SUBCASE("point mass at the origin is symmetric") {
        Distribution d;
        d.add(0, Dyadic::one());
        CHECK(symmetry_check(d).symmetric);
    }
}

TEST_CASE("peak locations") {
    auto p10 = peak_locations(memory_dist(10));
    CHECK(p10 == std::vector<long long>{-6, 0, 6});

    auto p40 = peak_locations(memory_dist(40));
    REQUIRE(!p40.empty());
    CHECK(p40.front() == -28);
    CHECK(p40.back() == 28);
    CHECK(std::find(p40.begin(), p40.end(), 0) != p40.end());

    Distribution two;
    two.add(-2, Dyadic(1, 2));
    two.add(0, Dyadic(1, 1));
    two.add(2, Dyadic(1, 2));
    CHECK(peak_locations(two) == std::vector<long long>{0});

    // Ballistic tails: the outermost side peak moves out with n.
    CHECK(p40.back() > p10.back());
}

TEST_CASE("three-walk comparison") {
    WalkComparison c10 = compare_walks(10);
    CHECK(c10.memory.probability(0) > c10.classical.probability(0));
    CHECK(c10.memory.probability(0) > c10.quantum.probability(0));

    WalkComparison c3 = compare_walks(3);
    CHECK(c3.classical.probability(-3) == Dyadic(1, 3));
    CHECK(c3.classical.probability(-1) == Dyadic(3, 3));
    CHECK(c3.classical.probability(1) == Dyadic(3, 3));
    CHECK(c3.classical.probability(3) == Dyadic(1, 3));

    WalkComparison sym = compare_walks(40, true);
    CHECK(sym.classical.total() == Dyadic::one());
    CHECK(sym.quantum.total() == Dyadic::one());
    CHECK(sym.memory.total() == Dyadic::one());
    CHECK(sym.memory.probability(0) > Dyadic(1, 1));
}
