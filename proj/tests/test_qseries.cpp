#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "quadrep/qseries.hpp"

namespace {

using quadrep::TruncSeries;

TruncSeries random_series(std::mt19937_64& rng, std::size_t order) {
    std::uniform_int_distribution<std::int64_t> dist(-50, 50);
    TruncSeries s(order);
    for (std::size_t i = 0; i <= order; ++i) s[i] = dist(rng);
    return s;
}

TEST(TruncSeries, AddExamples) {
    EXPECT_EQ(TruncSeries({1, 0, 0}) + TruncSeries({0, 2, 0}), TruncSeries({1, 2, 0}));
    EXPECT_EQ(TruncSeries({1, 1}) + TruncSeries({-1, -1}), TruncSeries({0, 0}));
    const TruncSeries s({3, -1, 4, 1});
    EXPECT_EQ(s + TruncSeries(3), s);
}

TEST(TruncSeries, MismatchedOrdersRejected) {
    EXPECT_THROW(TruncSeries({1, 2}) + TruncSeries({1, 2, 3}), quadrep::domain_error);
    EXPECT_THROW(TruncSeries({1, 2}) * TruncSeries({1, 2, 3}), quadrep::domain_error);
    EXPECT_THROW(quadrep::check_identity(TruncSeries(2), TruncSeries(3)), quadrep::domain_error);
    EXPECT_THROW(TruncSeries(std::vector<std::int64_t>{}), quadrep::domain_error);
}

TEST(TruncSeries, MulExamples) {
    EXPECT_EQ(TruncSeries({1, 1, 0}) * TruncSeries({1, 1, 0}), TruncSeries({1, 2, 1}));
    const TruncSeries s({2, 7, -1, 8});
    EXPECT_EQ(s * TruncSeries::one(3), s);
}

TEST(TruncSeries, MulOverflowDetected) {
    TruncSeries big(1);
    big[0] = INT64_MAX / 2;
    big[1] = 1;
    EXPECT_THROW(big * big, std::overflow_error);
}

TEST(TruncSeries, MulMatchesUnskippedConvolution) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        TruncSeries s = random_series(rng, 60);
        const TruncSeries t = random_series(rng, 60);
        for (std::size_t i = 0; i <= 60; i += 3) s[i] = 0;
        TruncSeries expected(60);
        for (std::size_t n = 0; n <= 60; ++n)
            for (std::size_t i = 0; i <= n; ++i) expected[n] += s[i] * t[n - i];
        ASSERT_EQ(s * t, expected);
    }
}

TEST(TruncSeries, MulCommutativeAndAssociative) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> order_dist(0, 256);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t order = order_dist(rng);
        const TruncSeries a = random_series(rng, order);
        const TruncSeries b = random_series(rng, order);
        const TruncSeries c = random_series(rng, order);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a * b) * c, a * (b * c));
    }
}

TEST(SubstitutePower, Examples) {
    EXPECT_EQ(quadrep::substitute_power(TruncSeries({1, 2, 0, 0, 2}), 2), TruncSeries({1, 0, 2, 0, 0}));
    const TruncSeries s({5, 4, 3, 2});
    EXPECT_EQ(quadrep::substitute_power(s, 1), s);
    EXPECT_THROW(quadrep::substitute_power(s, 0), quadrep::domain_error);
}

TEST(SubstitutePower, ScaledPsiSupport) {
    const TruncSeries s = quadrep::substitute_power(quadrep::psi_series(400), 8);
    for (std::size_t i = 0; i <= 400; ++i) {
        bool eight_times_triangular = false;
        for (std::size_t x = 0; 8 * x * (x + 1) / 2 <= i; ++x) eight_times_triangular |= (8 * x * (x + 1) / 2 == i);
        ASSERT_EQ(s[i], eight_times_triangular ? 1 : 0) << i;
    }
    EXPECT_EQ(s[8], 1);
    EXPECT_EQ(s[24], 1);
    EXPECT_EQ(s[48], 1);
}

TEST(SubstitutePower, Composes) {
    std::mt19937_64 rng(11);
    const TruncSeries s = random_series(rng, 300);
    for (std::size_t j = 1; j <= 6; ++j)
        for (std::size_t k = 1; k <= 6; ++k)
            ASSERT_EQ(quadrep::substitute_power(quadrep::substitute_power(s, j), k), quadrep::substitute_power(s, j * k));
}

TEST(MonomialShift, Examples) {
    EXPECT_EQ(quadrep::monomial_shift(TruncSeries({1, 1}), 1, 2), TruncSeries({0, 2}));
    const TruncSeries s({4, 0, 9});
    EXPECT_EQ(quadrep::monomial_shift(s, 0, 1), s);
    EXPECT_EQ(quadrep::monomial_shift(s, 5, 3), TruncSeries(2));
}

TEST(ThetaSeries, PhiExamples) {
    EXPECT_EQ(quadrep::phi_series(8), TruncSeries({1, 2, 0, 0, 2, 0, 0, 0, 0}));
    const TruncSeries phi = quadrep::phi_series(20);
    EXPECT_EQ(phi[0], 1);
    EXPECT_EQ(phi[9], 2);
    EXPECT_EQ(phi[10], 0);
}

TEST(ThetaSeries, PsiExamples) {
    const TruncSeries psi = quadrep::psi_series(10);
    for (std::size_t i = 0; i <= 10; ++i) {
        const bool triangular = i == 0 || i == 1 || i == 3 || i == 6 || i == 10;
        EXPECT_EQ(psi[i], triangular ? 1 : 0) << i;
    }
    EXPECT_EQ(psi[2], 0);
}

TEST(ThetaSeries, PsiSquaredEqualsPhiTimesPsiSquareArgument) {
    const TruncSeries psi = quadrep::psi_series(64);
    EXPECT_EQ(psi * psi, quadrep::phi_series(64) * quadrep::substitute_power(psi, 2));
}

TEST(ThetaSeries, PhiSplitToOrder512) {
    const TruncSeries rhs = quadrep::substitute_power(quadrep::phi_series(512), 4) +
                            quadrep::monomial_shift(quadrep::substitute_power(quadrep::psi_series(512), 8), 1, 2);
    EXPECT_EQ(rhs, quadrep::phi_series(512));
}

TEST(ThetaIdentities, HoldAtOrder2048) {
    using quadrep::ThetaIdentity;
    for (const ThetaIdentity id : {ThetaIdentity::kPhiSplit, ThetaIdentity::kPsiPsi3, ThetaIdentity::kPsiSquared}) {
        const auto [lhs, rhs] = quadrep::theta_identity_sides(id, 2048);
        const auto check = quadrep::check_identity(lhs, rhs);
        EXPECT_TRUE(check.pass) << static_cast<int>(id) << " at " << check.first_mismatch.value_or(0);
    }
    for (const std::size_t k : {1, 2, 3, 5}) {
        const auto [lhs, rhs] = quadrep::theta_identity_sides(ThetaIdentity::kPhiSplitTwice, 2048, k);
        EXPECT_TRUE(quadrep::check_identity(lhs, rhs).pass) << k;
    }
}

TEST(ThetaIdentities, OrderZeroCompareConstantTerms) {
    const auto [lhs, rhs] = quadrep::theta_identity_sides(quadrep::ThetaIdentity::kPhiSplit, 0);
    EXPECT_TRUE(quadrep::check_identity(lhs, rhs).pass);
    EXPECT_EQ(lhs[0], 1);
}

TEST(CheckIdentity, LocalizesFirstMismatch) {
    const TruncSeries phi = quadrep::phi_series(30);
    TruncSeries bumped = phi;
    bumped[5] += 1;
    const auto check = quadrep::check_identity(phi, bumped);
    EXPECT_FALSE(check.pass);
    ASSERT_TRUE(check.first_mismatch.has_value());
    EXPECT_EQ(*check.first_mismatch, 5u);
}

TEST(EtaProduct, Examples) {
    const auto a_gen = quadrep::eta_like_product(1, {{2, 1}, {4, 1}, {6, 1}, {12, 1}}, 16);
    EXPECT_EQ(a_gen[0], 0);
    EXPECT_EQ(a_gen[1], 1);
    EXPECT_EQ(a_gen[2], 0);
    EXPECT_EQ(a_gen[3], -1);
    EXPECT_EQ(a_gen[5], -2);
    const auto c_gen = quadrep::eta_like_product(1, {{2, 2}, {10, 2}}, 16);
    EXPECT_EQ(c_gen[3], -2);
    EXPECT_THROW(quadrep::eta_like_product(0, {{0, 1}}, 4), quadrep::domain_error);
    EXPECT_THROW(quadrep::eta_like_product(0, {{2, 0}}, 4), quadrep::domain_error);
}

// Independent route: multiply explicit polynomial factors with series_mul.
TruncSeries explicit_product(std::size_t leading, const std::vector<std::pair<std::size_t, std::size_t>>& factors,
                             std::size_t order) {
    TruncSeries acc = TruncSeries::one(order);
    for (const auto& [step, exponent] : factors)
        for (std::size_t n = 1; step * n <= order; ++n) {
            TruncSeries binomial = TruncSeries::one(order);
            binomial[step * n] = -1;
            for (std::size_t e = 0; e < exponent; ++e) acc = acc * binomial;
        }
    return quadrep::monomial_shift(acc, leading, 1);
}

TEST(EtaProduct, MatchesExplicitFactorMultiplication) {
    EXPECT_EQ(quadrep::eta_like_product(1, {{2, 1}, {4, 1}, {6, 1}, {12, 1}}, 300),
              explicit_product(1, {{2, 1}, {4, 1}, {6, 1}, {12, 1}}, 300));
    EXPECT_EQ(quadrep::eta_like_product(1, {{2, 2}, {10, 2}}, 300), explicit_product(1, {{2, 2}, {10, 2}}, 300));
    EXPECT_EQ(quadrep::eta_like_product(0, {{1, 1}}, 40), explicit_product(0, {{1, 1}}, 40));
}

TEST(EtaProduct, EulerPentagonalNumbers) {
    // prod (1 - q^n) = sum (-1)^k q^(k(3k-1)/2) over all integers k.
    const TruncSeries euler = quadrep::eta_like_product(0, {{1, 1}}, 500);
    TruncSeries pentagonal(500);
    for (std::int64_t k = -30; k <= 30; ++k) {
        const std::int64_t e = k * (3 * k - 1) / 2;
        if (e <= 500) pentagonal[static_cast<std::size_t>(e)] += (k % 2 == 0) ? 1 : -1;
    }
    EXPECT_EQ(euler, pentagonal);
}

TEST(EtaCoefficients, Examples) {
    EXPECT_EQ(quadrep::a_coefficient(1), 1);
    EXPECT_EQ(quadrep::a_coefficient(2), 0);
    EXPECT_EQ(quadrep::a_coefficient(3), -1);
    EXPECT_EQ(quadrep::a_coefficient(5), -2);
    EXPECT_EQ(quadrep::c_coefficient(3), -2);
    EXPECT_THROW(quadrep::a_coefficient(0), quadrep::domain_error);
}

TEST(EtaCoefficients, CacheGrowthIsConsistent) {
    const auto direct = quadrep::eta_like_product(1, {{2, 1}, {4, 1}, {6, 1}, {12, 1}}, 5000);
    EXPECT_EQ(quadrep::a_coefficient(4999), direct[4999]);
    for (std::size_t n = 1; n <= 5000; n += 37) ASSERT_EQ(quadrep::a_coefficient(static_cast<std::int64_t>(n)), direct[n]);
}

}  // namespace
