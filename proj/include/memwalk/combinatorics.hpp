#pragma once

#include <algorithm>
#include <future>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "memwalk/dyadic.hpp"
#include "memwalk/state.hpp"

namespace memwalk {

/// Final two moves of a walk; selects the final ket at position k.
enum class Ending { LL, LR, RL, RR };

inline const char* to_string(Ending e) {
    switch (e) {
        case Ending::LL: return "LL";
        case Ending::LR: return "LR";
        case Ending::RL: return "RL";
        case Ending::RR: return "RR";
    }
    return "?";
}

/// Ket reached at position k by a walk with the given ending:
/// LR -> |k-1,k,0>, RR -> |k-1,k,1>, RL -> |k+1,k,0>, LL -> |k+1,k,1>.
inline BasisState ending_ket(long long k, Ending e) {
    switch (e) {
        case Ending::LR: return BasisState::order2(k - 1, k, 0);
        case Ending::RR: return BasisState::order2(k - 1, k, 1);
        case Ending::RL: return BasisState::order2(k + 1, k, 0);
        case Ending::LL: return BasisState::order2(k + 1, k, 1);
    }
    throw std::invalid_argument("ending_ket: bad ending");
}

struct PathStats {
    long long n_left = 0, n_right = 0;          // move counts
    long long isolated_left = 0, isolated_right = 0;
    long long clusters_left = 0, clusters_right = 0;

    bool operator==(const PathStats&) const = default;
};

/// Single-scan extraction of move, cluster and isolated-move counts.
inline PathStats path_stats(std::string_view moves) {
    if (moves.empty()) throw std::invalid_argument("path_stats: empty sequence");
    PathStats st;
    std::size_t i = 0;
    while (i < moves.size()) {
        char c = moves[i];
        if (c != 'L' && c != 'R') throw std::invalid_argument("path_stats: bad move letter");
        std::size_t j = i;
        while (j < moves.size() && moves[j] == c) ++j;
        long long size = static_cast<long long>(j - i);
        if (c == 'L') {
            st.n_left += size;
            ++st.clusters_left;
            if (size == 1) ++st.isolated_left;
        } else {
            st.n_right += size;
            ++st.clusters_right;
            if (size == 1) ++st.isolated_right;
        }
        i = j;
    }
    return st;
}

/// Phase of a path: (-1)^(N_L + N_R + N_L1 + N_R1).
inline int path_phase(std::string_view moves) {
    PathStats st = path_stats(moves);
    long long e = st.n_left + st.n_right + st.isolated_left + st.isolated_right;
    return (e % 2 == 0) ? 1 : -1;
}

struct OnesBounds {
    bool all_ones = false;   // degenerate n == parts case: every part is 1
    long long min_ones = 0;
    long long max_ones = 0;

    bool operator==(const OnesBounds&) const = default;
};

/// Range of possible 1-counts over compositions of n into `parts` parts.
inline OnesBounds ones_bounds(long long n, long long parts) {
    if (parts < 1 || parts > n) throw std::invalid_argument("ones_bounds: need 1 <= parts <= n");
    if (n == parts) return {true, n, n};
    return {false, std::max(0LL, 2 * parts - n), parts - 1};
}

namespace detail {

inline long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace detail

/// Number of compositions of n into `parts` parts with exactly `ones`
/// parts equal to 1: binom(parts, ones) * binom(n-parts-1, parts-ones-1),
/// with the all-ones composition (n == parts == ones) counted separately.
inline long long compositions_with_ones(long long n, long long parts, long long ones) {
    if (parts < 1 || parts > n || ones < 0) return 0;
    if (n == parts) return ones == n ? 1 : 0;
    return detail::binomial(parts, ones) * detail::binomial(n - parts - 1, parts - ones - 1);
}

// ---------------------------------------------------------------------------
// Brute-force path-sum oracle.
//
// The start |-1,0,0> is encoded as the fixed two-move bookkeeping prefix
// "LR"; only the n physical moves are enumerated (2^n suffixes). With the
// prefix counted, N_R + N_L = n + 2 and k = N_R - N_L.

namespace detail {

inline std::map<std::pair<long long, Ending>, long long> path_sum_chunk(
    int steps, unsigned long long begin, unsigned long long end) {
    std::map<std::pair<long long, Ending>, long long> acc;
    std::string seq(static_cast<std::size_t>(steps) + 2, 'L');
    seq[0] = 'L';
    seq[1] = 'R';
    for (unsigned long long bits = begin; bits < end; ++bits) {
        long long k = 0;
        for (int i = 0; i < steps; ++i) {
            bool right = (bits >> i) & 1ULL;
            seq[static_cast<std::size_t>(i) + 2] = right ? 'R' : 'L';
            k += right ? 1 : -1;
        }
        char last = seq[seq.size() - 1];
        char prev = seq[seq.size() - 2];
        Ending e = (prev == 'L') ? (last == 'L' ? Ending::LL : Ending::LR)
                                 : (last == 'L' ? Ending::RL : Ending::RR);
        acc[{k, e}] += path_phase(seq);
    }
    return acc;
}

}  // namespace detail

/// All oracle amplitudes after `steps` steps, as integer numerators at
/// scale 2^(-steps/2). Enumeration is split into chunks summed with an
/// associative merge, so the result is independent of the thread count.
inline std::map<std::pair<long long, Ending>, long long> path_sum_table(int steps,
                                                                        unsigned threads = 1) {
    if (steps < 1 || steps > 30) throw std::invalid_argument("path_sum_table: steps out of range");
    const unsigned long long total = 1ULL << steps;
    threads = std::max(1u, threads);
    if (threads == 1 || total < 1024) return detail::path_sum_chunk(steps, 0, total);

    unsigned long long chunk = (total + threads - 1) / threads;
    std::vector<std::future<std::map<std::pair<long long, Ending>, long long>>> parts;
    for (unsigned long long b = 0; b < total; b += chunk)
        parts.push_back(std::async(std::launch::async, detail::path_sum_chunk, steps, b,
                                   std::min(b + chunk, total)));
    std::map<std::pair<long long, Ending>, long long> acc;
    for (auto& f : parts)
        for (const auto& [key, v] : f.get()) acc[key] += v;
    return acc;
}

/// Signed path count for one (position, ending) pair. Parity-mismatched
/// or empty queries give exact zero.
inline ScaledAmplitude path_sum_amplitude(int steps, long long position, Ending ending,
                                          unsigned threads = 1) {
    if (steps < 1) throw std::invalid_argument("path_sum_amplitude: steps must be >= 1");
    if (std::llabs(position) > steps || ((position - steps) % 2) != 0)
        return {0, steps};
    auto table = path_sum_table(steps, threads);
    auto it = table.find({position, ending});
    return {it == table.end() ? 0 : it->second, steps};
}

}  // namespace memwalk
