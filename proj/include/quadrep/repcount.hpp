#pragma once

// Brute-force representation counts. These are the ground truth every closed
// form is checked against, so they stay deliberately direct.

#include <algorithm>
#include <array>
#include <charconv>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "quadrep/checked.hpp"
#include "quadrep/qseries.hpp"

namespace quadrep {

/// Coefficient quadruple (a, b, c, d), all >= 1.
struct QuadForm {
    std::int64_t a = 1, b = 1, c = 1, d = 1;

    QuadForm() = default;
    QuadForm(std::int64_t a_, std::int64_t b_, std::int64_t c_, std::int64_t d_) : a(a_), b(b_), c(c_), d(d_) {
        if (a < 1 || b < 1 || c < 1 || d < 1) throw domain_error("QuadForm coefficients must be positive");
    }

    std::array<std::int64_t, 4> coeffs() const { return {a, b, c, d}; }
    std::int64_t sum() const { return checked::add(checked::add(a, b), checked::add(c, d)); }

    std::string to_string() const {
        return std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," + std::to_string(d);
    }

    /// Parses "a,b,c,d".
    static QuadForm parse(std::string_view text) {
        std::array<std::int64_t, 4> v{};
        std::size_t pos = 0;
        for (std::size_t i = 0; i < 4; ++i) {
            const std::size_t end = (i < 3) ? text.find(',', pos) : text.size();
            if (end == std::string_view::npos) throw domain_error("form must look like a,b,c,d");
            const std::string_view field = text.substr(pos, end - pos);
            const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v[i]);
            if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty())
                throw domain_error("bad form coefficient '" + std::string(field) + "'");
            pos = end + 1;
        }
        return {v[0], v[1], v[2], v[3]};
    }

    friend auto operator<=>(const QuadForm&, const QuadForm&) = default;
};

namespace detail {

inline std::int64_t triangular(std::int64_t x) { return checked::mul(x, x - 1) / 2; }

// Number of integers w with T(w) = r, where T(w) = w(w-1)/2. Every triangular
// value has exactly two preimages w and 1-w.
inline std::int64_t triangular_preimages(std::int64_t r, bool positive_only) {
    if (r < 0) return 0;
    if (exact_sqrt(checked::add(checked::mul(8, r), 1)) < 0) return 0;
    return positive_only ? 1 : 2;
}

// Smallest X >= 1 with coeff * T(X) > n, found by integer search.
inline std::int64_t triangular_window(std::int64_t coeff, std::int64_t n) {
    std::int64_t x = 1;
    while (checked::mul(coeff, triangular(x)) <= n) ++x;
    return x;
}

// Number of integers w (restricted to odd w if odd_only) with coeff * w^2 = r.
inline std::int64_t square_preimages(std::int64_t coeff, std::int64_t r, bool odd_only) {
    if (r < 0 || r % coeff != 0) return 0;
    const std::int64_t w = exact_sqrt(r / coeff);
    if (w < 0) return 0;
    if (w == 0) return odd_only ? 0 : 1;
    if (odd_only && w % 2 == 0) return 0;
    return 2;
}

inline std::array<std::int64_t, 4> largest_first(const QuadForm& f) {
    auto c = f.coeffs();
    std::sort(c.begin(), c.end(), std::greater<>());
    return c;
}

inline std::int64_t count_squares(const QuadForm& f, std::int64_t n, bool odd_only) {
    if (n < 0) throw domain_error("representation counts need n >= 0");
    const auto c = largest_first(f);
    const std::int64_t start = odd_only ? 1 : 0;
    const std::int64_t step = odd_only ? 2 : 1;
    std::int64_t total = 0;
    // Coordinates are enumerated as |x| with a multiplicity of 1 (x = 0) or 2.
    for (std::int64_t x = start; checked::mul(c[0], x * x) <= n; x += step) {
        const std::int64_t r1 = n - c[0] * x * x;
        const std::int64_t mx = x == 0 ? 1 : 2;
        for (std::int64_t y = start; c[1] * y * y <= r1; y += step) {
            const std::int64_t r2 = r1 - c[1] * y * y;
            const std::int64_t my = y == 0 ? 1 : 2;
            for (std::int64_t z = start; c[2] * z * z <= r2; z += step) {
                const std::int64_t r3 = r2 - c[2] * z * z;
                const std::int64_t mz = z == 0 ? 1 : 2;
                total += mx * my * mz * square_preimages(c[3], r3, odd_only);
            }
        }
    }
    return total;
}

}  // namespace detail

/// N(f; n): integer quadruples with a x^2 + b y^2 + c z^2 + d w^2 = n.
inline std::int64_t count_N(const QuadForm& f, std::int64_t n) { return detail::count_squares(f, n, false); }

/// N_0(f; n): the same count with all four coordinates odd.
inline std::int64_t count_N_odd(const QuadForm& f, std::int64_t n) { return detail::count_squares(f, n, true); }

namespace detail {

inline std::int64_t count_triangular(const QuadForm& f, std::int64_t n, bool positive_only) {
    if (n < 0) throw domain_error("representation counts need n >= 0");
    const auto c = largest_first(f);
    // Integer windows [lo, X] per coordinate: lo = 1 - X over Z, lo = 1 over N.
    std::array<std::int64_t, 3> hi{};
    std::array<std::int64_t, 3> lo{};
    for (std::size_t i = 0; i < 3; ++i) {
        hi[i] = triangular_window(c[i], n);
        lo[i] = positive_only ? 1 : 1 - hi[i];
    }
    std::int64_t total = 0;
    for (std::int64_t x = lo[0]; x <= hi[0]; ++x) {
        const std::int64_t r1 = n - c[0] * triangular(x);
        if (r1 < 0) continue;
        for (std::int64_t y = lo[1]; y <= hi[1]; ++y) {
            const std::int64_t r2 = r1 - c[1] * triangular(y);
            if (r2 < 0) continue;
            for (std::int64_t z = lo[2]; z <= hi[2]; ++z) {
                const std::int64_t r3 = r2 - c[2] * triangular(z);
                if (r3 < 0 || r3 % c[3] != 0) continue;
                total += triangular_preimages(r3 / c[3], positive_only);
            }
        }
    }
    return total;
}

}  // namespace detail

/// t(f; n): x, y, z, w over Z with a T(x) + b T(y) + c T(z) + d T(w) = n, T(x) = x(x-1)/2.
inline std::int64_t count_t(const QuadForm& f, std::int64_t n) { return detail::count_triangular(f, n, false); }

/// t'(f; n): the same count over positive integers only.
inline std::int64_t count_t_pos(const QuadForm& f, std::int64_t n) { return detail::count_triangular(f, n, true); }

enum class CountKind { kN, kTPos };

/// Coefficients 0..order of phi(q^a)phi(q^b)phi(q^c)phi(q^d) (kN) or the psi analogue (kTPos).
inline std::vector<std::int64_t> batch_counts_via_series(const QuadForm& f, CountKind kind, std::size_t order) {
    const TruncSeries base = kind == CountKind::kN ? phi_series(order) : psi_series(order);
    TruncSeries product = TruncSeries::one(order);
    for (const std::int64_t k : f.coeffs()) product = product * substitute_power(base, static_cast<std::size_t>(k));
    const auto c = product.coeffs();
    return {c.begin(), c.end()};
}

}  // namespace quadrep
