#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace memwalk {

/// Exact dyadic rational: value = num / 2^exp with exp >= 0.
/// Normalized so that exp == 0 or num is odd; zero is (0, 0).
class Dyadic {
public:
    Dyadic() = default;

    Dyadic(long long num, int exp) : num_(num), exp_(exp) {
        if (exp < 0) throw std::invalid_argument("Dyadic: negative exponent");
        normalize();
    }

    static Dyadic zero() { return {}; }
    static Dyadic one() { return {1, 0}; }

    long long numerator() const { return num_; }
    int exponent() const { return exp_; }

    /// Denominator as a long long; throws if 2^exp overflows.
    long long denominator() const {
        if (exp_ >= 63) throw std::overflow_error("Dyadic: denominator too large");
        return 1LL << exp_;
    }

    double to_double() const { return static_cast<double>(num_) * std::exp2(-exp_); }

    std::string to_string() const {
        if (exp_ == 0) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(denominator());
    }

    Dyadic operator+(const Dyadic& o) const {
        int e = std::max(exp_, o.exp_);
        return Dyadic(shifted_num(e) + o.shifted_num(e), e);
    }

    Dyadic operator-(const Dyadic& o) const {
        int e = std::max(exp_, o.exp_);
        return Dyadic(shifted_num(e) - o.shifted_num(e), e);
    }

    Dyadic operator*(const Dyadic& o) const {
        return Dyadic(num_ * o.num_, exp_ + o.exp_);
    }

    bool operator==(const Dyadic& o) const = default;

    bool operator<(const Dyadic& o) const {
        int e = std::max(exp_, o.exp_);
        return shifted_num(e) < o.shifted_num(e);
    }
    bool operator>(const Dyadic& o) const { return o < *this; }
    bool operator<=(const Dyadic& o) const { return !(o < *this); }
    bool operator>=(const Dyadic& o) const { return !(*this < o); }

private:
    void normalize() {
        if (num_ == 0) {
            exp_ = 0;
            return;
        }
        while (exp_ > 0 && num_ % 2 == 0) {
            num_ /= 2;
            --exp_;
        }
    }

    long long shifted_num(int e) const { return num_ << (e - exp_); }

    long long num_ = 0;
    int exp_ = 0;
};

/// Signed amplitude numerator at the fixed scale 2^(-scale_steps/2).
/// Every Hadamard path contributes +-2^(-n/2), so amplitudes after n
/// steps are integers at this scale and addition never leaves it.
struct ScaledAmplitude {
    long long numerator = 0;
    int scale_steps = 0;

    double value() const {
        return static_cast<double>(numerator) * std::exp2(-scale_steps / 2.0);
    }

    /// |amplitude|^2 = numerator^2 / 2^scale_steps, always rational.
    Dyadic squared() const { return Dyadic(numerator * numerator, scale_steps); }

    bool operator==(const ScaledAmplitude&) const = default;
};

/// Value equality across scales differing by an even number of steps.
inline bool same_value(const ScaledAmplitude& a, const ScaledAmplitude& b) {
    if ((a.scale_steps - b.scale_steps) % 2 != 0)
        return a.numerator == 0 && b.numerator == 0;
    if (a.scale_steps <= b.scale_steps)
        return a.numerator << ((b.scale_steps - a.scale_steps) / 2) == b.numerator;
    return b.numerator << ((a.scale_steps - b.scale_steps) / 2) == a.numerator;
}

}  // namespace memwalk
