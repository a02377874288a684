#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace quadrep {

/// Raised when a formula's hypotheses (parameter ranges, unknown forms) are not met.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when a congruence hypothesis of a lemma or relation fails. Sweeps
/// record these as skipped rather than as failures.
class guard_violation : public domain_error {
public:
    using domain_error::domain_error;
};

/// A rational value was required to be an integer but was not.
class inexact_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace checked {

// All library arithmetic runs through these; wraparound is never silent.

[[noreturn]] inline void overflow(const char* what) {
    throw std::overflow_error(std::string("int64 overflow in ") + what);
}

inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) overflow("add");
    return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) overflow("sub");
    return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) overflow("mul");
    return r;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

inline std::int64_t pow(std::int64_t base, std::int64_t exp) {
    if (exp < 0) throw domain_error("checked::pow: negative exponent");
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < exp; ++i) r = mul(r, base);
    return r;
}

}  // namespace checked

/// (-1)^e for any integer e.
constexpr std::int64_t minus_one_pow(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

/// Floor of the square root, by integer Newton iteration. Rejects negatives.
inline std::int64_t isqrt(std::int64_t n) {
    if (n < 0) throw domain_error("isqrt of a negative number");
    if (n < 2) return n;
    // Newton from above converges monotonically to floor(sqrt(n)).
    std::uint64_t x = static_cast<std::uint64_t>(n);
    std::uint64_t y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + static_cast<std::uint64_t>(n) / x) / 2;
    }
    return static_cast<std::int64_t>(x);
}

/// Returns the nonnegative root when n is a perfect square, otherwise -1.
inline std::int64_t exact_sqrt(std::int64_t n) {
    if (n < 0) return -1;
    const std::int64_t r = isqrt(n);
    return r * r == n ? r : -1;
}

}  // namespace quadrep
