#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "memwalk/operators.hpp"
#include "memwalk/state.hpp"

namespace memwalk {

enum class WalkKind { classical_order2, quantum_order1, quantum_order2 };

struct InitialCondition {
    enum class Preset { standard, symmetric, custom };

    Preset preset = Preset::standard;
    // Custom start: entries share one scale; must be unit norm.
    std::vector<std::pair<BasisState, long long>> custom_entries;
    int custom_scale = 0;

    static InitialCondition standard() { return {}; }
    static InitialCondition symmetric() { return {Preset::symmetric, {}, 0}; }
    static InitialCondition custom(std::vector<std::pair<BasisState, long long>> entries,
                                   int scale) {
        return {Preset::custom, std::move(entries), scale};
    }
};

struct WalkSpec {
    WalkKind kind = WalkKind::quantum_order2;
    CoinSpec coin = CoinSpec::hadamard();
    ShiftCase shift = ShiftCase::c;  // quantum_order2 only
    InitialCondition initial;
    int steps = 0;
};

inline WalkState init_state(const InitialCondition& cond, WalkKind kind) {
    switch (cond.preset) {
        case InitialCondition::Preset::standard:
            switch (kind) {
                case WalkKind::classical_order2:
                    return WalkState::basis(BasisState::classical(0));
                case WalkKind::quantum_order1:
                    return WalkState::basis(BasisState::order1(0, 0));
                case WalkKind::quantum_order2:
                    return WalkState::basis(BasisState::order2(-1, 0, 0));
            }
            break;
        case InitialCondition::Preset::symmetric:
            switch (kind) {
                case WalkKind::classical_order2:
                    return WalkState::basis(BasisState::classical(0));
                case WalkKind::quantum_order1:
                    // (|0,0> + |0,1>)/sqrt(2)
                    return WalkState::superposition(
                        {{BasisState::order1(0, 0), 1}, {BasisState::order1(0, 1), 1}}, 1);
                case WalkKind::quantum_order2:
                    // (|-1,0,0> + |-1,0,1> + |1,0,0> + |1,0,1>)/2
                    return WalkState::superposition({{BasisState::order2(-1, 0, 0), 1},
                                                     {BasisState::order2(-1, 0, 1), 1},
                                                     {BasisState::order2(1, 0, 0), 1},
                                                     {BasisState::order2(1, 0, 1), 1}},
                                                    2);
            }
            break;
        case InitialCondition::Preset::custom: {
            WalkState s = WalkState::superposition(cond.custom_entries, cond.custom_scale);
            if (norm_squared(s) != Dyadic::one())
                throw std::invalid_argument("init_state: custom start is not unit norm");
            return s;
        }
    }
    throw std::invalid_argument("init_state: bad preset");
}

/// One order-1 coined step: Hadamard on p, then |n,0> moves left and
/// |n,1> moves right.
inline WalkState step_order1(const WalkState& state) {
    if (state.kind() != StateKind::order1)
        throw std::invalid_argument("step_order1: order1 state required");
    WalkState out;
    out.set_kind(StateKind::order1);
    out.set_scale(state.scale_steps() + 1);
    out.set_steps(state.steps_taken() + 1);
    auto& nums = out.mutable_entries();
    for (const auto& [b, a] : state.entries()) {
        nums[BasisState::order1(b.pos - 1, 0)] += a;
        nums[BasisState::order1(b.pos + 1, 1)] += (b.coin == 0) ? a : -a;
    }
    out.prune();
    return out;
}

/// Fair-coin walk distribution after n steps from the origin, computed
/// as the exact binomial (no sampling).
inline Distribution classical_distribution(int steps) {
    if (steps < 0) throw std::invalid_argument("classical_distribution: negative steps");
    Distribution d;
    // binom(n, j) / 2^n at position 2j - n
    long long c = 1;
    for (int j = 0; j <= steps; ++j) {
        d.add(2LL * j - steps, Dyadic(c, steps));
        if (j < steps) c = c * (steps - j) / (j + 1);
    }
    return d;
}

/// Seeded Monte Carlo counterpart of classical_distribution; demo only.
inline std::map<long long, long long> classical_sample(int steps, long long samples,
                                                       std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution flip(0.5);
    std::map<long long, long long> counts;
    for (long long s = 0; s < samples; ++s) {
        long long pos = 0;
        for (int i = 0; i < steps; ++i) pos += flip(rng) ? 1 : -1;
        ++counts[pos];
    }
    return counts;
}

/// Runs the quantum kinds; classical runs go through run_distribution.
inline WalkState run(const WalkSpec& spec) {
    if (spec.steps < 0) throw std::invalid_argument("run: negative steps");
    switch (spec.kind) {
        case WalkKind::quantum_order1: {
            if (spec.coin.kind() != CoinSpec::Kind::hadamard)
                throw std::invalid_argument("run: exact order1 path requires Hadamard");
            WalkState s = init_state(spec.initial, spec.kind);
            for (int i = 0; i < spec.steps; ++i) s = step_order1(s);
            return s;
        }
        case WalkKind::quantum_order2: {
            WalkState s = init_state(spec.initial, spec.kind);
            for (int i = 0; i < spec.steps; ++i) s = step(s, spec.coin, spec.shift);
            return s;
        }
        case WalkKind::classical_order2:
            throw std::invalid_argument("run: classical walks have no wavefunction");
    }
    throw std::invalid_argument("run: bad kind");
}

/// General-coin runs on the float path.
inline FloatWalkState run_general(const WalkSpec& spec) {
    if (spec.kind != WalkKind::quantum_order2)
        throw std::invalid_argument("run_general: order2 only");
    FloatWalkState s = to_float(init_state(spec.initial, spec.kind));
    for (int i = 0; i < spec.steps; ++i) s = step(s, spec.coin, spec.shift);
    return s;
}

inline Distribution run_distribution(const WalkSpec& spec) {
    if (spec.kind == WalkKind::classical_order2) return classical_distribution(spec.steps);
    return measure_positions(run(spec));
}

}  // namespace memwalk
