#pragma once

#include <stdexcept>
#include <vector>

#include "memwalk/combinatorics.hpp"
#include "memwalk/engine.hpp"

namespace memwalk {

/// Origin amplitudes and probability of one even step count.
struct LocalizationRow {
    int steps = 0;
    ScaledAmplitude lr, rl, ll, rr;  // amplitudes of the four k = 0 kets
    Dyadic origin_probability;
};

/// Case-c Hadamard walk origin data for every even n up to max_steps.
inline std::vector<LocalizationRow> localization_series(int max_steps,
                                                        const InitialCondition& initial) {
    if (max_steps < 2 || max_steps % 2 != 0)
        throw std::invalid_argument("localization_series: max_steps must be even and >= 2");
    std::vector<LocalizationRow> rows;
    WalkState s = init_state(initial, WalkKind::quantum_order2);
    CoinSpec coin = CoinSpec::hadamard();
    for (int n = 1; n <= max_steps; ++n) {
        s = step(s, coin, ShiftCase::c);
        if (n % 2 != 0) continue;
        LocalizationRow row;
        row.steps = n;
        row.lr = s.amplitude(ending_ket(0, Ending::LR));
        row.rl = s.amplitude(ending_ket(0, Ending::RL));
        row.ll = s.amplitude(ending_ket(0, Ending::LL));
        row.rr = s.amplitude(ending_ket(0, Ending::RR));
        row.origin_probability = row.lr.squared() + row.rl.squared() + row.ll.squared() +
                                 row.rr.squared();
        rows.push_back(row);
    }
    return rows;
}

struct SymmetryReport {
    bool symmetric = true;
    std::vector<long long> asymmetric_positions;  // all k with P(k) != P(-k)
};

/// Exact comparison of P(k) with P(-k).
inline SymmetryReport symmetry_check(const Distribution& dist) {
    SymmetryReport rep;
    for (const auto& [k, p] : dist.entries()) {
        if (dist.probability(-k) != p) {
            rep.symmetric = false;
            rep.asymmetric_positions.push_back(k);
        }
    }
    return rep;
}

/// Local maxima within the distribution's parity class (step-2 neighbors;
/// the skipped parity is identically zero).
inline std::vector<long long> peak_locations(const Distribution& dist) {
    std::vector<long long> peaks;
    for (const auto& [k, p] : dist.entries()) {
        if (p > dist.probability(k - 2) && p > dist.probability(k + 2)) peaks.push_back(k);
    }
    return peaks;
}

/// The three walks side by side: classical, order-1 Hadamard, order-2
/// case-c Hadamard, all after the same number of steps.
struct WalkComparison {
    int steps = 0;
    Distribution classical;
    Distribution quantum;  // order 1
    Distribution memory;   // order 2, case c
};

inline WalkComparison compare_walks(int steps, bool symmetric_start = false) {
    WalkComparison cmp;
    cmp.steps = steps;
    InitialCondition init =
        symmetric_start ? InitialCondition::symmetric() : InitialCondition::standard();
    cmp.classical = classical_distribution(steps);
    cmp.quantum = run_distribution(
        {WalkKind::quantum_order1, CoinSpec::hadamard(), ShiftCase::c, init, steps});
    cmp.memory = run_distribution(
        {WalkKind::quantum_order2, CoinSpec::hadamard(), ShiftCase::c, init, steps});
    return cmp;
}

}  // namespace memwalk
