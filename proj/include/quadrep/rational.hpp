#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "quadrep/checked.hpp"

namespace quadrep {

/// Exact fraction over int64 with checked arithmetic. Always stored reduced
/// with a positive denominator.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw domain_error("Rational: zero denominator");
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    /// The integer value; throws inexact_error when the denominator is not 1.
    std::int64_t to_integer() const {
        if (!is_integer()) throw inexact_error("non-integral value " + to_string());
        return num_;
    }

    std::string to_string() const {
        return is_integer() ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Rational operator+(const Rational& x, const Rational& y) {
        const std::int64_t g = std::gcd(x.den_, y.den_);
        const std::int64_t xs = y.den_ / g;
        const std::int64_t ys = x.den_ / g;
        return {checked::add(checked::mul(x.num_, xs), checked::mul(y.num_, ys)), checked::mul(x.den_, xs)};
    }
    friend Rational operator-(const Rational& x) { return {checked::neg(x.num_), x.den_}; }
    friend Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }
    friend Rational operator*(const Rational& x, const Rational& y) {
        // Cross-reduce first to keep intermediates small.
        const std::int64_t g1 = std::gcd(x.num_, y.den_);
        const std::int64_t g2 = std::gcd(y.num_, x.den_);
        const std::int64_t a = g1 ? x.num_ / g1 : 0;
        const std::int64_t d = g1 ? y.den_ / g1 : y.den_;
        const std::int64_t b = g2 ? y.num_ / g2 : 0;
        const std::int64_t c = g2 ? x.den_ / g2 : x.den_;
        return {checked::mul(a, b), checked::mul(c, d)};
    }

    friend bool operator==(const Rational&, const Rational&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = checked::neg(num_);
            den_ = checked::neg(den_);
        }
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace quadrep
