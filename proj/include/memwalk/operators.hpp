#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>

#include "memwalk/state.hpp"

namespace memwalk {

/// Coin selection. Hadamard and the classical fair coin run on the exact
/// integer path; a general SU(2)-like matrix runs on the float path.
class CoinSpec {
public:
    enum class Kind { hadamard, classical_fair, general };

    static CoinSpec hadamard() { return CoinSpec(Kind::hadamard); }
    static CoinSpec classical_fair() { return CoinSpec(Kind::classical_fair); }

    /// Matrix ((a, b), (c, d)); rejected unless unitary to 1e-12.
    static CoinSpec general(std::complex<double> a, std::complex<double> b,
                            std::complex<double> c, std::complex<double> d) {
        CoinSpec s(Kind::general);
        s.m_ = {a, b, c, d};
        const double tol = 1e-12;
        auto dot = [](std::complex<double> x, std::complex<double> y) {
            return std::conj(x) * y;
        };
        if (std::abs(dot(a, a) + dot(b, b) - 1.0) > tol ||
            std::abs(dot(c, c) + dot(d, d) - 1.0) > tol ||
            std::abs(dot(a, c) + dot(b, d)) > tol)
            throw std::invalid_argument("CoinSpec: matrix is not unitary");
        return s;
    }

    Kind kind() const { return kind_; }

    /// Entry for transition p_in -> p_out (column p_in, row p_out).
    std::complex<double> entry(int p_out, int p_in) const {
        return m_[static_cast<std::size_t>(2 * p_in + p_out)];
    }

private:
    explicit CoinSpec(Kind k) : kind_(k) {}
    Kind kind_;
    std::array<std::complex<double>, 4> m_{};  // a, b, c, d
};

enum class ShiftCase { a, b, c, d };
enum class ShiftAction { transmit, reflect };

/// Transmit/reflect rule for a given coin value.
inline ShiftAction shift_action(ShiftCase sc, int coin) {
    switch (sc) {
        case ShiftCase::a: return ShiftAction::transmit;
        case ShiftCase::b: return coin == 0 ? ShiftAction::transmit : ShiftAction::reflect;
        case ShiftCase::c: return coin == 0 ? ShiftAction::reflect : ShiftAction::transmit;
        case ShiftCase::d: return ShiftAction::reflect;
    }
    throw std::invalid_argument("shift_action: bad case");
}

/// Destination of one order-2 ket under transmit (keep direction) or
/// reflect (reverse direction).
inline BasisState shifted_ket(const BasisState& b, ShiftAction act) {
    if (b.kind != StateKind::order2)
        throw std::invalid_argument("shifted_ket: order2 ket required");
    long long dir = b.is_right_mover() ? 1 : -1;
    if (act == ShiftAction::reflect) dir = -dir;
    return BasisState::order2(b.pos, b.pos + dir, b.coin);
}

inline BasisState apply_shift_ket(const BasisState& b, ShiftCase sc) {
    return shifted_ket(b, shift_action(sc, b.coin));
}

/// Hadamard coin on the exact path: the shared scale advances by one step
/// and numerators combine by integer addition.
inline WalkState apply_coin(const WalkState& state, const CoinSpec& coin) {
    if (state.kind() == StateKind::classical)
        throw std::invalid_argument("apply_coin: classical state");
    if (coin.kind() != CoinSpec::Kind::hadamard)
        throw std::invalid_argument("apply_coin: exact path requires the Hadamard coin");
    WalkState out;
    out.set_kind(state.kind());
    out.set_scale(state.scale_steps() + 1);
    out.set_steps(state.steps_taken());
    auto& nums = out.mutable_entries();
    for (const auto& [b, a] : state.entries()) {
        BasisState b0 = b, b1 = b;
        b0.coin = 0;
        b1.coin = 1;
        nums[b0] += a;
        nums[b1] += (b.coin == 0) ? a : -a;
    }
    out.prune();
    return out;
}

inline WalkState apply_shift(const WalkState& state, ShiftCase sc) {
    if (state.kind() != StateKind::order2)
        throw std::invalid_argument("apply_shift: order2 state required");
    WalkState out;
    out.set_kind(state.kind());
    out.set_scale(state.scale_steps());
    out.set_steps(state.steps_taken());
    auto& nums = out.mutable_entries();
    for (const auto& [b, a] : state.entries()) nums[apply_shift_ket(b, sc)] += a;
    out.prune();
    return out;
}

/// One walk step: coin then shift. Norm is preserved exactly.
inline WalkState step(const WalkState& state, const CoinSpec& coin, ShiftCase sc) {
    WalkState out = apply_shift(apply_coin(state, coin), sc);
    out.set_steps(state.steps_taken() + 1);
    return out;
}

// ---------------------------------------------------------------------------
// Float path for general coins.

using FloatMap = std::map<BasisState, std::complex<double>>;

struct FloatWalkState {
    FloatMap entries;
    StateKind kind = StateKind::order2;
};

inline FloatWalkState to_float(const WalkState& state) {
    FloatWalkState out;
    out.kind = state.kind();
    for (const auto& [b, num] : state.entries())
        out.entries[b] = ScaledAmplitude{num, state.scale_steps()}.value();
    return out;
}

inline FloatWalkState apply_coin(const FloatWalkState& state, const CoinSpec& coin) {
    if (state.kind == StateKind::classical)
        throw std::invalid_argument("apply_coin: classical state");
    if (coin.kind() == CoinSpec::Kind::classical_fair)
        throw std::invalid_argument("apply_coin: classical coin on a quantum state");
    CoinSpec c = coin.kind() == CoinSpec::Kind::hadamard
                     ? CoinSpec::general(1 / std::sqrt(2.0), 1 / std::sqrt(2.0),
                                         1 / std::sqrt(2.0), -1 / std::sqrt(2.0))
                     : coin;
    FloatWalkState out;
    out.kind = state.kind;
    for (const auto& [b, a] : state.entries) {
        for (int p = 0; p < 2; ++p) {
            std::complex<double> w = c.entry(p, b.coin) * a;
            if (w == 0.0) continue;
            BasisState t = b;
            t.coin = p;
            out.entries[t] += w;
        }
    }
    return out;
}

inline FloatWalkState apply_shift(const FloatWalkState& state, ShiftCase sc) {
    if (state.kind != StateKind::order2)
        throw std::invalid_argument("apply_shift: order2 state required");
    FloatWalkState out;
    out.kind = state.kind;
    for (const auto& [b, a] : state.entries) out.entries[apply_shift_ket(b, sc)] += a;
    return out;
}

inline FloatWalkState step(const FloatWalkState& state, const CoinSpec& coin, ShiftCase sc) {
    return apply_shift(apply_coin(state, coin), sc);
}

inline std::map<long long, double> measure_positions(const FloatWalkState& state) {
    double norm = 0;
    for (const auto& [b, a] : state.entries) norm += std::norm(a);
    if (std::abs(norm - 1.0) > 1e-12)
        throw std::domain_error("measure_positions: float state is not normalized");
    std::map<long long, double> d;
    for (const auto& [b, a] : state.entries) d[b.pos] += std::norm(a);
    return d;
}

// ---------------------------------------------------------------------------
// Unitarity audit of a candidate shift table over a finite window.

struct AuditResult {
    enum class Verdict { unitary, not_injective, not_surjective };
    Verdict verdict = Verdict::unitary;
    // Collision witness when not injective.
    std::optional<std::pair<BasisState, BasisState>> collision;
    // Unreached interior ket when not surjective.
    std::optional<BasisState> missed;
};

/// Checks that `table` permutes the order-2 basis. The domain is all kets
/// with position in [lo, hi]; surjectivity is required only for interior
/// kets (positions in [lo+1, hi-1]), since a shift may cross the window
/// edge by one.
inline AuditResult unitarity_audit(const std::function<BasisState(const BasisState&)>& table,
                                   long long lo, long long hi) {
    if (lo >= hi) throw std::invalid_argument("unitarity_audit: bad window");
    std::map<BasisState, BasisState> image;
    for (long long n = lo; n <= hi; ++n) {
        for (long long d : {-1LL, 1LL}) {
            for (int p = 0; p < 2; ++p) {
                BasisState src = BasisState::order2(n + d, n, p);
                BasisState dst = table(src);
                auto [it, inserted] = image.emplace(dst, src);
                if (!inserted)
                    return {AuditResult::Verdict::not_injective,
                            std::make_pair(it->second, src), std::nullopt};
            }
        }
    }
    for (long long n = lo + 1; n < hi; ++n) {
        for (long long d : {-1LL, 1LL}) {
            for (int p = 0; p < 2; ++p) {
                BasisState target = BasisState::order2(n + d, n, p);
                if (!image.contains(target))
                    return {AuditResult::Verdict::not_surjective, std::nullopt, target};
            }
        }
    }
    return {};
}

}  // namespace memwalk
