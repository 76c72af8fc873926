#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "memwalk/engine.hpp"
#include "memwalk/state.hpp"

using namespace memwalk;

TEST_CASE("dyadic arithmetic and normalization") {
    CHECK(Dyadic(1, 2) + Dyadic(1, 2) == Dyadic(1, 1));
    CHECK(Dyadic(1, 1) + Dyadic(1, 1) == Dyadic::one());
    CHECK(Dyadic(2, 2) == Dyadic(1, 1));
    CHECK(Dyadic(0, 5) == Dyadic::zero());
    CHECK(Dyadic(3, 3) * Dyadic(1, 1) == Dyadic(3, 4));
    CHECK(Dyadic(5, 3).to_string() == "5/8");
    CHECK(Dyadic(1, 0).to_string() == "1");
    CHECK(Dyadic(1, 2) < Dyadic(1, 1));
    CHECK(Dyadic(3, 3).to_double() == doctest::Approx(0.375));
    CHECK_THROWS_AS(Dyadic(1, -1), std::invalid_argument);
}

TEST_CASE("scaled amplitude views") {
    ScaledAmplitude half{1, 2};
    CHECK(half.value() == doctest::Approx(0.5));
    CHECK(half.squared() == Dyadic(1, 2));
    ScaledAmplitude neg{-1, 2};
    CHECK(neg.squared() == Dyadic(1, 2));
    CHECK(same_value({1, 2}, {2, 4}));
    CHECK(!same_value({1, 2}, {3, 4}));
    CHECK(same_value({0, 3}, {0, 8}));
}

TEST_CASE("float view matches extended-precision evaluation") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> num(-2000000, 2000000);
    std::uniform_int_distribution<int> scale(0, 40);
    for (int i = 0; i < 1000; ++i) {
        ScaledAmplitude a{num(rng), scale(rng)};
        long double exact = static_cast<long double>(a.numerator) *
                            std::exp2l(-a.scale_steps / 2.0L);
        if (exact == 0.0L) continue;
        CHECK(std::abs((a.value() - static_cast<double>(exact)) / exact) < 1e-15);
    }
}

TEST_CASE("basis state invariants") {
    CHECK_THROWS_AS(BasisState::order2(0, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(BasisState::order2(0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(BasisState::order1(0, 2), std::invalid_argument);
    CHECK(BasisState::order2(-1, 0, 0).is_right_mover());
    CHECK(!BasisState::order2(1, 0, 0).is_right_mover());
}

TEST_CASE("norm_squared") {
    CHECK(norm_squared(WalkState::basis(BasisState::order2(-1, 0, 0))) == Dyadic::one());

    // The four-entry two-step state, each amplitude +-1/2.
    WalkState s = WalkState::superposition({{BasisState::order2(-1, 0, 0), 1},
                                            {BasisState::order2(-1, -2, 1), 1},
                                            {BasisState::order2(1, 0, 0), 1},
                                            {BasisState::order2(1, 2, 1), -1}},
                                           2);
    CHECK(norm_squared(s) == Dyadic::one());

    WalkState sub = WalkState::superposition({{BasisState::order2(0, 1, 0), 1}}, 2);
    CHECK(norm_squared(sub) == Dyadic(1, 2));

    WalkState empty;
    CHECK_THROWS_AS(norm_squared(empty), std::invalid_argument);
}

TEST_CASE("measure_positions") {
    WalkState s = WalkState::superposition({{BasisState::order2(-1, 0, 0), 1},
                                            {BasisState::order2(-1, -2, 1), 1},
                                            {BasisState::order2(1, 0, 0), 1},
                                            {BasisState::order2(1, 2, 1), -1}},
                                           2);
    Distribution d = measure_positions(s);
    CHECK(d.probability(0) == Dyadic(1, 1));
    CHECK(d.probability(-2) == Dyadic(1, 2));
    CHECK(d.probability(2) == Dyadic(1, 2));
    CHECK(d.total() == Dyadic::one());

    Distribution point = measure_positions(WalkState::basis(BasisState::order2(-1, 0, 0)));
    CHECK(point.probability(0) == Dyadic::one());

    WalkState sub = WalkState::superposition({{BasisState::order2(0, 1, 0), 1}}, 2);
    CHECK_THROWS_AS(measure_positions(sub), std::domain_error);
}

TEST_CASE("amplitude_of") {
    WalkState s = WalkState::superposition({{BasisState::order2(-1, 0, 0), 1},
                                            {BasisState::order2(-1, -2, 1), 1},
                                            {BasisState::order2(1, 0, 0), 1},
                                            {BasisState::order2(1, 2, 1), -1}},
                                           2);
    CHECK(amplitude_of(s, BasisState::order2(1, 2, 1)) == ScaledAmplitude{-1, 2});
    CHECK(amplitude_of(s, BasisState::order2(5, 6, 0)) == ScaledAmplitude{0, 2});
    CHECK(amplitude_of(s, BasisState::order2(-1, 0, 0)) == ScaledAmplitude{1, 2});
}

TEST_CASE("mixed basis kinds rejected") {
    CHECK_THROWS_AS(WalkState::superposition({{BasisState::order2(-1, 0, 0), 1},
                                              {BasisState::order1(0, 0), 1}},
                                             1),
                    std::invalid_argument);
}

TEST_CASE("norm conservation and parity up to 24 steps") {
    WalkState s = WalkState::basis(BasisState::order2(-1, 0, 0));
    CoinSpec h = CoinSpec::hadamard();
    for (int n = 1; n <= 24; ++n) {
        s = step(s, h, ShiftCase::c);
        long long sum = 0;
        for (const auto& [b, num] : s.entries()) sum += num * num;
        CHECK(sum == 1LL << n);
        CHECK(s.scale_steps() == n);
        Distribution d = measure_positions(s);
        for (const auto& [k, p] : d.entries()) CHECK((k - n) % 2 == 0);
    }
}

TEST_CASE("zero amplitudes are pruned") {
    WalkState s = WalkState::superposition({{BasisState::order2(-1, 0, 0), 1},
                                            {BasisState::order2(-1, 0, 0), -1},
                                            {BasisState::order2(1, 0, 0), 1}},
                                           0);
    CHECK(s.entries().size() == 1);
}
