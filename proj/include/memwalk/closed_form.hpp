#pragma once

#include <cstdlib>
#include <stdexcept>

#include "memwalk/combinatorics.hpp"
#include "memwalk/dyadic.hpp"

namespace memwalk {

/// The three-argument combinatorial symbol:
/// combn(a, b, c) = binom(a, b) * binom(c-a-1, a-b-1).
/// Out-of-range binomial arguments contribute 0.
inline long long combn(long long a, long long b, long long c) {
    return detail::binomial(a, b) * detail::binomial(c - a - 1, a - b - 1);
}

struct AmplitudeQuery {
    int steps = 0;        // n >= 1
    long long position = 0;  // k, with k == n (mod 2)
    Ending ending = Ending::LR;

    long long n_right() const { return (steps + 2 + position) / 2; }
    long long n_left() const { return (steps + 2 - position) / 2; }

    bool reachable() const {
        return steps >= 1 && ((position - steps) % 2) == 0 && n_left() >= 1 && n_right() >= 1;
    }
};

namespace detail {

// Exact fraction accumulator; every finished amplitude sum is an integer.
struct Frac {
    __int128 num = 0;
    __int128 den = 1;

    void add(__int128 n, __int128 d) {
        num = num * d + n * den;
        den *= d;
        reduce();
    }

    void reduce() {
        __int128 a = num < 0 ? -num : num;
        __int128 b = den;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            num /= a;
            den /= a;
        }
    }

    long long as_integer() const {
        if (den != 1) throw std::logic_error("closed form: non-integer amplitude sum");
        return static_cast<long long>(num);
    }
};

inline int sign_pow(long long e) { return (e % 2 == 0) ? 1 : -1; }

// Walks ending LL: the L composition starts and ends with clusters of
// size 1 and not-1 respectively; C_R = C_L - 1.
inline long long amp_ll(int n, long long nl, long long nr) {
    Frac acc;
    for (long long c = 2; c <= nl - 1; ++c)
        for (long long l1 = std::max(1LL, 2 * c - nl); l1 <= c - 1; ++l1)
            for (long long r1 = std::max(0LL, 2 * c - nr - 2); r1 <= c - 2; ++r1)
                acc.add(sign_pow(n + l1 + r1) * l1 * (c - l1) * combn(c, l1, nl) *
                            combn(c - 1, r1, nr),
                        c * (c - 1));
    for (long long l1 = std::max(1LL, 2 * nr - nl + 2); l1 <= nr; ++l1)
        acc.add(sign_pow(nl + l1) * l1 * (nr - l1 + 1) * combn(nr + 1, l1, nl),
                nr * (nr + 1));
    return acc.as_integer();
}

inline long long amp_lr(int n, long long nl, long long nr) {
    Frac acc;
    for (long long c = 2; c <= nl - 1; ++c)
        for (long long l1 = std::max(1LL, 2 * c - nl); l1 <= c - 1; ++l1)
            for (long long r1 = std::max(1LL, 2 * c - nr); r1 <= c - 1; ++r1)
                acc.add(sign_pow(n + l1 + r1) * l1 * r1 * combn(c, l1, nl) * combn(c, r1, nr),
                        c * c);
    if (nl == nr) acc.add(1, 1);
    for (long long l1 = std::max(1LL, 2 * nr - nl); l1 <= nr - 1; ++l1)
        acc.add(sign_pow(nl + l1) * l1 * combn(nr, l1, nl), nr);
    for (long long r1 = std::max(1LL, 2 * nl - nr); r1 <= nl - 1; ++r1)
        acc.add(sign_pow(nr + r1) * r1 * combn(nl, r1, nr), nl);
    return acc.as_integer();
}

inline long long amp_rl(int n, long long nl, long long nr) {
    Frac acc;
    for (long long c = 2; c <= nl - 1; ++c)
        for (long long l1 = std::max(2LL, 2 * c - nl); l1 <= c - 1; ++l1)
            for (long long r1 = std::max(0LL, 2 * c - nr - 2); r1 <= c - 2; ++r1)
                acc.add(sign_pow(n + l1 + r1) * l1 * (l1 - 1) * combn(c, l1, nl) *
                            combn(c - 1, r1, nr),
                        c * (c - 1));
    if (nl - 1 == nr) acc.add(1, 1);
    for (long long l1 = std::max(2LL, 2 * nr - nl + 2); l1 <= nr; ++l1)
        acc.add(sign_pow(nl + l1) * l1 * (l1 - 1) * combn(nr + 1, l1, nl), nr * (nr + 1));
    for (long long r1 = std::max(0LL, 2 * nl - nr - 2); r1 <= nl - 2; ++r1)
        acc.add(sign_pow(nr + r1) * combn(nl - 1, r1, nr), 1);
    return acc.as_integer();
}

// Walks ending RR. The triple sum's second symbol runs over the R
// clusters, of which there are C (the sequence starts with L and ends
// with R), so it is combn(C, N_R1, N_R).
inline long long amp_rr(int n, long long nl, long long nr) {
    Frac acc;
    for (long long c = 1; c <= nl - 1; ++c)
        for (long long l1 = std::max(1LL, 2 * c - nl); l1 <= c - 1; ++l1)
            for (long long r1 = std::max(0LL, 2 * c - nr); r1 <= c - 1; ++r1)
                acc.add(sign_pow(n + l1 + r1) * l1 * (c - r1) * combn(c, l1, nl) *
                            combn(c, r1, nr),
                        c * c);
    for (long long r1 = std::max(0LL, 2 * nl - nr); r1 <= nl - 1; ++r1)
        acc.add(sign_pow(nr + r1) * (nl - r1) * combn(nl, r1, nr), nl);
    return acc.as_integer();
}

}  // namespace detail

/// Direct evaluation of the four closed-form amplitude sums, as an exact
/// integer numerator at scale 2^(-n/2). Empty sums contribute zero.
inline ScaledAmplitude closed_form_amplitude(const AmplitudeQuery& q) {
    if (q.steps < 1) throw std::invalid_argument("closed_form_amplitude: steps must be >= 1");
    if (!q.reachable()) return {0, q.steps};
    long long nl = q.n_left(), nr = q.n_right();
    long long num = 0;
    switch (q.ending) {
        case Ending::LL: num = detail::amp_ll(q.steps, nl, nr); break;
        case Ending::LR: num = detail::amp_lr(q.steps, nl, nr); break;
        case Ending::RL: num = detail::amp_rl(q.steps, nl, nr); break;
        case Ending::RR: num = detail::amp_rr(q.steps, nl, nr); break;
    }
    return {num, q.steps};
}

/// P(k) after n steps: sum of the four squared amplitudes.
inline Dyadic closed_form_probability(int steps, long long position) {
    if (steps < 1) throw std::invalid_argument("closed_form_probability: steps must be >= 1");
    Dyadic p;
    for (Ending e : {Ending::LL, Ending::LR, Ending::RL, Ending::RR})
        p = p + closed_form_amplitude({steps, position, e}).squared();
    return p;
}

}  // namespace memwalk
