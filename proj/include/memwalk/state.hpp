#pragma once

#include <compare>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "memwalk/dyadic.hpp"

namespace memwalk {

enum class StateKind { classical, order1, order2 };

/// One basis ket. Classical: position only. Order1: |n, p>.
/// Order2: |n2, n1, p> with |n2 - n1| = 1 (previous and current position).
struct BasisState {
    StateKind kind = StateKind::classical;
    long long prev = 0;  // order2 only
    long long pos = 0;
    int coin = 0;  // quantum kinds only

    static BasisState classical(long long n) { return {StateKind::classical, 0, n, 0}; }

    static BasisState order1(long long n, int p) {
        check_coin(p);
        return {StateKind::order1, 0, n, p};
    }

    static BasisState order2(long long n2, long long n1, int p) {
        check_coin(p);
        if (std::llabs(n2 - n1) != 1)
            throw std::invalid_argument("BasisState: order2 requires |n2 - n1| = 1");
        return {StateKind::order2, n2, n1, p};
    }

    /// Right-mover = last move was to the right (|n-1, n, p>).
    bool is_right_mover() const { return prev == pos - 1; }

    auto operator<=>(const BasisState&) const = default;

private:
    static void check_coin(int p) {
        if (p != 0 && p != 1) throw std::invalid_argument("BasisState: coin must be 0 or 1");
    }
};

/// Exact probability distribution over lattice positions.
class Distribution {
public:
    using Map = std::map<long long, Dyadic>;

    void add(long long position, const Dyadic& p) {
        auto& slot = probs_[position];
        slot = slot + p;
    }

    Dyadic probability(long long position) const {
        auto it = probs_.find(position);
        return it == probs_.end() ? Dyadic::zero() : it->second;
    }

    Dyadic total() const {
        Dyadic t;
        for (const auto& [k, p] : probs_) t = t + p;
        return t;
    }

    const Map& entries() const { return probs_; }
    bool operator==(const Distribution&) const = default;

private:
    Map probs_;
};

/// Sparse superposition with a single shared dyadic scale: entry b carries
/// amplitude numerator(b) / 2^(scale_steps/2). Zero entries are pruned.
class WalkState {
public:
    using Map = std::map<BasisState, long long>;

    WalkState() = default;

    static WalkState basis(const BasisState& b) {
        WalkState s;
        s.nums_[b] = 1;
        s.kind_ = b.kind;
        return s;
    }

    static WalkState superposition(const std::vector<std::pair<BasisState, long long>>& entries,
                                   int scale_steps) {
        if (entries.empty()) throw std::invalid_argument("WalkState: empty superposition");
        WalkState s;
        s.kind_ = entries.front().first.kind;
        s.scale_ = scale_steps;
        for (const auto& [b, num] : entries) {
            if (b.kind != s.kind_)
                throw std::invalid_argument("WalkState: mixed basis kinds");
            if (num != 0) s.nums_[b] += num;
        }
        s.prune();
        return s;
    }

    const Map& entries() const { return nums_; }
    StateKind kind() const { return kind_; }
    int scale_steps() const { return scale_; }
    int steps_taken() const { return steps_; }
    bool empty() const { return nums_.empty(); }

    /// Stored amplitude, or exact zero at this state's scale.
    ScaledAmplitude amplitude(const BasisState& b) const {
        auto it = nums_.find(b);
        return {it == nums_.end() ? 0 : it->second, scale_};
    }

    bool operator==(const WalkState& o) const {
        return kind_ == o.kind_ && scale_ == o.scale_ && nums_ == o.nums_;
    }

    // Mutation is reserved for the operator layer; states handed to users
    // are value copies.
    Map& mutable_entries() { return nums_; }
    void set_scale(int s) { scale_ = s; }
    void set_steps(int n) { steps_ = n; }
    void set_kind(StateKind k) { kind_ = k; }

    void prune() {
        for (auto it = nums_.begin(); it != nums_.end();)
            it = (it->second == 0) ? nums_.erase(it) : std::next(it);
    }

private:
    Map nums_;
    StateKind kind_ = StateKind::order2;
    int scale_ = 0;
    int steps_ = 0;
};

inline Dyadic norm_squared(const WalkState& state) {
    if (state.empty()) throw std::invalid_argument("norm_squared: empty state");
    long long sum = 0;
    for (const auto& [b, num] : state.entries()) sum += num * num;
    return Dyadic(sum, state.scale_steps());
}

/// Measurement in the position basis; requires a normalized state.
inline Distribution measure_positions(const WalkState& state) {
    if (norm_squared(state) != Dyadic::one())
        throw std::domain_error("measure_positions: state is not normalized");
    Distribution d;
    for (const auto& [b, num] : state.entries())
        d.add(b.pos, Dyadic(num * num, state.scale_steps()));
    return d;
}

inline ScaledAmplitude amplitude_of(const WalkState& state, const BasisState& b) {
    return state.amplitude(b);
}

}  // namespace memwalk
