#pragma once

// Elementary exact number theory: Kronecker symbols, divisors, divisor sums
// and prime-power splitting. Everything is int64 with checked overflow.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <span>
#include <vector>

#include "quadrep/checked.hpp"

namespace quadrep {

/// n = cofactor * prod(primes[i]^exponents[i]) with cofactor coprime to every listed prime.
struct FactorSplit {
    std::vector<std::int64_t> primes;
    std::vector<std::int64_t> exponents;
    std::int64_t cofactor = 1;

    std::int64_t exponent_of(std::int64_t p) const {
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (primes[i] == p) return exponents[i];
        throw domain_error("FactorSplit: prime not part of the split");
    }

    std::int64_t reconstruct() const {
        std::int64_t n = cofactor;
        for (std::size_t i = 0; i < primes.size(); ++i) n = checked::mul(n, checked::pow(primes[i], exponents[i]));
        return n;
    }
};

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

namespace detail {

// Jacobi symbol (a/m) for odd m >= 1 and 0 <= a < m.
inline int jacobi_reduced(std::int64_t a, std::int64_t m) {
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const std::int64_t r = m % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, m);
        if (a % 4 == 3 && m % 4 == 3) result = -result;
        a %= m;
    }
    return m == 1 ? result : 0;
}

}  // namespace detail

/// Kronecker symbol (a|m), defined for every pair of integers. At m = 0 it is
/// 1 when |a| = 1 and 0 otherwise.
inline int kronecker(std::int64_t a, std::int64_t m) {
    if (m == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (m < 0) {
        m = checked::neg(m);
        if (a < 0) result = -result;
    }
    int twos = 0;
    while (m % 2 == 0) {
        m /= 2;
        ++twos;
    }
    if (twos > 0) {
        if (a % 2 == 0) return 0;
        const std::int64_t r = ((a % 8) + 8) % 8;
        if ((twos % 2 == 1) && (r == 3 || r == 5)) result = -result;
    }
    if (m == 1) return result;
    const std::int64_t reduced = ((a % m) + m) % m;
    return result * detail::jacobi_reduced(reduced, m);
}

/// Positive divisors of n in ascending order, by trial division up to sqrt(n).
inline std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n <= 0) throw domain_error("divisors: n must be positive");
    std::vector<std::int64_t> small;
    std::vector<std::int64_t> large;
    for (std::int64_t d = 1; d <= n / d; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// Sum over divisor pairs d * e = n of weight(d, e).
template <typename Weight>
    requires std::invocable<Weight, std::int64_t, std::int64_t>
std::int64_t weighted_divisor_sum(std::int64_t n, Weight&& weight) {
    std::int64_t total = 0;
    for (const std::int64_t d : divisors(n)) total = checked::add(total, static_cast<std::int64_t>(weight(d, n / d)));
    return total;
}

/// Sum of positive divisors; 0 for every x <= 0.
inline std::int64_t sigma(std::int64_t x) {
    if (x <= 0) return 0;
    return weighted_divisor_sum(x, [](std::int64_t d, std::int64_t) { return d; });
}

/// Pulls every listed prime out of n.
inline FactorSplit split_factors(std::int64_t n, std::span<const std::int64_t> primes) {
    if (n <= 0) throw domain_error("split_factors: n must be positive");
    FactorSplit out;
    out.cofactor = n;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const std::int64_t p = primes[i];
        if (!is_prime(p)) throw domain_error("split_factors: " + std::to_string(p) + " is not prime");
        if (std::find(primes.begin(), primes.begin() + static_cast<std::ptrdiff_t>(i), p) !=
            primes.begin() + static_cast<std::ptrdiff_t>(i))
            throw domain_error("split_factors: repeated prime " + std::to_string(p));
        std::int64_t e = 0;
        while (out.cofactor % p == 0) {
            out.cofactor /= p;
            ++e;
        }
        out.primes.push_back(p);
        out.exponents.push_back(e);
    }
    return out;
}

inline FactorSplit split_factors(std::int64_t n, std::initializer_list<std::int64_t> primes) {
    return split_factors(n, std::span<const std::int64_t>(primes.begin(), primes.size()));
}

}  // namespace quadrep
