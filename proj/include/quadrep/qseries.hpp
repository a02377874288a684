#pragma once

// Truncated power series in q with exact int64 coefficients, plus the theta
// and eta-type generating functions built from them.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quadrep/checked.hpp"

namespace quadrep {

/// Dense series c_0 + c_1 q + ... + c_order q^order. Values combined by the
/// arithmetic below must share the same order.
class TruncSeries {
public:
    explicit TruncSeries(std::size_t order) : coeffs_(order + 1, 0) {}
    explicit TruncSeries(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw domain_error("TruncSeries needs at least one coefficient");
    }

    static TruncSeries one(std::size_t order) {
        TruncSeries s(order);
        s.coeffs_[0] = 1;
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    std::int64_t operator[](std::size_t i) const { return coeffs_[i]; }
    std::int64_t& operator[](std::size_t i) { return coeffs_[i]; }
    /// Coefficient of q^i, zero past the truncation order.
    std::int64_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    std::span<const std::int64_t> coeffs() const { return coeffs_; }

    /// Keeps the first new_order + 1 coefficients (padding with zeros when growing).
    TruncSeries truncated(std::size_t new_order) const {
        std::vector<std::int64_t> c(new_order + 1, 0);
        for (std::size_t i = 0; i <= new_order && i < coeffs_.size(); ++i) c[i] = coeffs_[i];
        return TruncSeries(std::move(c));
    }

    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

private:
    std::vector<std::int64_t> coeffs_;
};

namespace detail {

inline void require_same_order(const TruncSeries& s, const TruncSeries& t, const char* op) {
    if (s.order() != t.order())
        throw domain_error(std::string(op) + ": order mismatch (" + std::to_string(s.order()) + " vs " +
                           std::to_string(t.order()) + ")");
}

}  // namespace detail

inline TruncSeries series_add(const TruncSeries& s, const TruncSeries& t) {
    detail::require_same_order(s, t, "series_add");
    TruncSeries r(s.order());
    for (std::size_t i = 0; i <= s.order(); ++i) r[i] = checked::add(s[i], t[i]);
    return r;
}

inline TruncSeries series_sub(const TruncSeries& s, const TruncSeries& t) {
    detail::require_same_order(s, t, "series_sub");
    TruncSeries r(s.order());
    for (std::size_t i = 0; i <= s.order(); ++i) r[i] = checked::sub(s[i], t[i]);
    return r;
}

/// Cauchy product truncated at the common order. Schoolbook O(order^2); zero
/// coefficients of the left factor are skipped, which matters for theta series.
inline TruncSeries series_mul(const TruncSeries& s, const TruncSeries& t) {
    detail::require_same_order(s, t, "series_mul");
    const std::size_t order = s.order();
    TruncSeries r(order);
    for (std::size_t i = 0; i <= order; ++i) {
        const std::int64_t si = s[i];
        if (si == 0) continue;
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (t[j] == 0) continue;
            r[i + j] = checked::add(r[i + j], checked::mul(si, t[j]));
        }
    }
    return r;
}

inline TruncSeries operator+(const TruncSeries& s, const TruncSeries& t) { return series_add(s, t); }
inline TruncSeries operator-(const TruncSeries& s, const TruncSeries& t) { return series_sub(s, t); }
inline TruncSeries operator*(const TruncSeries& s, const TruncSeries& t) { return series_mul(s, t); }

/// s(q^k), truncated at the order of s.
inline TruncSeries substitute_power(const TruncSeries& s, std::size_t k) {
    if (k == 0) throw domain_error("substitute_power: k must be positive");
    TruncSeries r(s.order());
    for (std::size_t i = 0; i * k <= s.order(); ++i) r[i * k] = s[i];
    return r;
}

/// c * q^m * s, truncated.
inline TruncSeries monomial_shift(const TruncSeries& s, std::size_t m, std::int64_t c) {
    TruncSeries r(s.order());
    for (std::size_t i = 0; i + m <= s.order(); ++i) r[i + m] = checked::mul(c, s[i]);
    return r;
}

/// phi(q) = sum over all integers n of q^(n^2).
inline TruncSeries phi_series(std::size_t order) {
    TruncSeries r(order);
    r[0] = 1;
    for (std::size_t n = 1; n * n <= order; ++n) r[n * n] = 2;
    return r;
}

/// psi(q) = sum over n >= 0 of q^(n(n+1)/2).
inline TruncSeries psi_series(std::size_t order) {
    TruncSeries r(order);
    for (std::size_t n = 0; n * (n + 1) / 2 <= order; ++n) r[n * (n + 1) / 2] = 1;
    return r;
}

/// One factor family prod_{n >= 1} (1 - q^(step*n))^exponent of an eta-type product.
struct EtaFactor {
    std::size_t step;
    std::size_t exponent;
};

/// q^leading_power * prod over factors of prod_{n>=1} (1 - q^(step*n))^exponent.
/// Factors with step*n > order are dropped; each binomial is applied in place.
inline TruncSeries eta_like_product(std::size_t leading_power, std::span<const EtaFactor> factors, std::size_t order) {
    TruncSeries body = TruncSeries::one(order);
    for (const EtaFactor& f : factors) {
        if (f.step == 0 || f.exponent == 0) throw domain_error("eta_like_product: steps and exponents must be >= 1");
        for (std::size_t rep = 0; rep < f.exponent; ++rep) {
            for (std::size_t shift = f.step; shift <= order; shift += f.step) {
                // multiply by (1 - q^shift)
                for (std::size_t i = order; i >= shift; --i) body[i] = checked::sub(body[i], body[i - shift]);
            }
        }
    }
    return monomial_shift(body, leading_power, 1);
}

inline TruncSeries eta_like_product(std::size_t leading_power, std::initializer_list<EtaFactor> factors,
                                    std::size_t order) {
    return eta_like_product(leading_power, std::span<const EtaFactor>(factors.begin(), factors.size()), order);
}

namespace detail {

// Memoized coefficient table for one eta-type product; grows by doubling.
// Readers get an immutable snapshot.
class EtaTable {
public:
    EtaTable(std::size_t leading, std::vector<EtaFactor> factors) : leading_(leading), factors_(std::move(factors)) {}

    std::int64_t at(std::size_t n) {
        std::shared_ptr<const TruncSeries> snap;
        {
            std::lock_guard lock(mu_);
            if (!table_ || table_->order() < n) {
                std::size_t order = table_ ? table_->order() : 1023;
                while (order < n) order = order * 2 + 1;
                table_ = std::make_shared<const TruncSeries>(eta_like_product(leading_, factors_, order));
            }
            snap = table_;
        }
        return (*snap)[n];
    }

private:
    std::size_t leading_;
    std::vector<EtaFactor> factors_;
    std::mutex mu_;
    std::shared_ptr<const TruncSeries> table_;
};

}  // namespace detail

/// a(n): coefficients of q * prod (1-q^(2n))(1-q^(4n))(1-q^(6n))(1-q^(12n)).
inline std::int64_t a_coefficient(std::int64_t n) {
    if (n < 1) throw domain_error("a_coefficient: n must be positive");
    static detail::EtaTable table(1, {{2, 1}, {4, 1}, {6, 1}, {12, 1}});
    return table.at(static_cast<std::size_t>(n));
}

/// c(n): coefficients of q * prod (1-q^(2n))^2 (1-q^(10n))^2.
inline std::int64_t c_coefficient(std::int64_t n) {
    if (n < 1) throw domain_error("c_coefficient: n must be positive");
    static detail::EtaTable table(1, {{2, 2}, {10, 2}});
    return table.at(static_cast<std::size_t>(n));
}

struct IdentityCheck {
    bool pass = true;
    std::optional<std::size_t> first_mismatch;
};

inline IdentityCheck check_identity(const TruncSeries& lhs, const TruncSeries& rhs) {
    detail::require_same_order(lhs, rhs, "check_identity");
    for (std::size_t i = 0; i <= lhs.order(); ++i)
        if (lhs[i] != rhs[i]) return {false, i};
    return {};
}

/// The four classical theta-function identities checked by the harness.
enum class ThetaIdentity {
    kPhiSplit,         // phi(q) = phi(q^4) + 2q psi(q^8)
    kPsiPsi3,          // psi(q)psi(q^3) = phi(q^6)psi(q^4) + q psi(q^12)phi(q^2)
    kPsiSquared,       // psi(q)^2 = phi(q) psi(q^2)
    kPhiSplitTwice,    // phi(q^k) = phi(q^16k) + 2q^4k psi(q^32k) + 2q^k psi(q^8k)
};

/// Both sides of an identity at the given order. k is only used by kPhiSplitTwice.
inline std::pair<TruncSeries, TruncSeries> theta_identity_sides(ThetaIdentity id, std::size_t order,
                                                                std::size_t k = 1) {
    const TruncSeries phi = phi_series(order);
    const TruncSeries psi = psi_series(order);
    auto phi_at = [&](std::size_t j) { return substitute_power(phi, j); };
    auto psi_at = [&](std::size_t j) { return substitute_power(psi, j); };
    switch (id) {
        case ThetaIdentity::kPhiSplit:
            return {phi, phi_at(4) + monomial_shift(psi_at(8), 1, 2)};
        case ThetaIdentity::kPsiPsi3:
            return {psi * psi_at(3), phi_at(6) * psi_at(4) + monomial_shift(psi_at(12) * phi_at(2), 1, 1)};
        case ThetaIdentity::kPsiSquared:
            return {psi * psi, phi * psi_at(2)};
        case ThetaIdentity::kPhiSplitTwice:
            if (k == 0) throw domain_error("theta identity: k must be positive");
            return {phi_at(k), phi_at(16 * k) + monomial_shift(psi_at(32 * k), 4 * k, 2) +
                                   monomial_shift(psi_at(8 * k), k, 2)};
    }
    throw domain_error("unknown theta identity");
}

}  // namespace quadrep
