#pragma once

// Closed-form evaluators for N and t on the forms with known formulas, the
// relations tying t to N, and the character sums A..F they are built from.
//
// Fractional coefficients are carried as Rational; anything that must be an
// integer is checked at the end instead of silently truncated.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "quadrep/arith.hpp"
#include "quadrep/checked.hpp"
#include "quadrep/qseries.hpp"
#include "quadrep/rational.hpp"
#include "quadrep/repcount.hpp"

namespace quadrep {

/// The six sums A..F at a common argument n.
struct CharSums {
    std::int64_t A = 0, B = 0, C = 0, D = 0, E = 0, F = 0;
    friend bool operator==(const CharSums&, const CharSums&) = default;
};

/// A..D are Kronecker-twisted divisor sums; E and F run over odd positive
/// (i, j) with i^2 + 3 j^2 = 4n.
inline CharSums char_sums(std::int64_t n) {
    if (n < 1) throw domain_error("char_sums: n must be positive");
    CharSums s;
    for (const std::int64_t d : divisors(n)) {
        const std::int64_t e = n / d;
        s.A = checked::add(s.A, d * kronecker(12, e));
        s.B = checked::add(s.B, d * kronecker(-3, d) * kronecker(-4, e));
        s.C = checked::add(s.C, d * kronecker(-3, e) * kronecker(-4, d));
        s.D = checked::add(s.D, d * kronecker(12, d));
    }
    const std::int64_t four_n = checked::mul(4, n);
    for (std::int64_t i = 1; i * i < four_n; i += 2) {
        const std::int64_t rest = four_n - i * i;
        if (rest % 3 != 0) continue;
        const std::int64_t j = exact_sqrt(rest / 3);
        if (j <= 0 || j % 2 == 0) continue;
        s.E = checked::add(s.E, minus_one_pow((i - 1) / 2) * i);
        s.F = checked::add(s.F, minus_one_pow((j - 1) / 2) * j);
    }
    return s;
}

/// C(a,b,c,d) = 16 + 4 i1 (i1 - 1) i2 + 8 i1 i3, i_j = how many coefficients equal j.
/// Defined for coefficient sums 5..8.
inline std::int64_t cap_C(const QuadForm& f) {
    const std::int64_t s = f.sum();
    if (s < 5 || s > 8) throw domain_error("cap_C: coefficient sum " + std::to_string(s) + " outside [5, 8]");
    const auto c = f.coeffs();
    const auto count = [&](std::int64_t v) { return static_cast<std::int64_t>(std::count(c.begin(), c.end(), v)); };
    const std::int64_t i1 = count(1), i2 = count(2), i3 = count(3);
    return 16 + 4 * i1 * (i1 - 1) * i2 + 8 * i1 * i3;
}

namespace sums {

/// Sum of r over all (r, s) in Z^2 with r = 1 (mod 4) and r^2 + k s^2 = m.
inline std::int64_t signed_r_sum(std::int64_t m, std::int64_t k) {
    std::int64_t total = 0;
    const std::int64_t bound = isqrt(m);
    for (std::int64_t r = -bound; r <= bound; ++r) {
        if (((r - 1) % 4 + 4) % 4 != 0) continue;
        const std::int64_t rest = m - r * r;
        if (rest % k != 0) continue;
        const std::int64_t s = exact_sqrt(rest / k);
        if (s < 0) continue;
        total = checked::add(total, s == 0 ? r : 2 * r);  // s and -s
    }
    return total;
}

/// Sum over d | m of d (p/d).
inline std::int64_t twisted_divisor_sum(std::int64_t m, std::int64_t p) {
    return weighted_divisor_sum(m, [p](std::int64_t d, std::int64_t) { return d * kronecker(p, d); });
}

/// Sum over d | m of (m/d) (p/d).
inline std::int64_t cotwisted_divisor_sum(std::int64_t m, std::int64_t p) {
    return weighted_divisor_sum(m, [p](std::int64_t d, std::int64_t e) { return e * kronecker(p, d); });
}

enum class Parity { kAny, kOdd };

/// Sum of term(a, b) over positive a (odd), b (any or odd) with a^2 + 3 b^2 = 4m.
template <typename Term>
std::int64_t lattice_sum(std::int64_t m, Parity b_parity, Term&& term) {
    const std::int64_t target = checked::mul(4, m);
    std::int64_t total = 0;
    for (std::int64_t a = 1; a * a < target; a += 2) {
        const std::int64_t rest = target - a * a;
        if (rest % 3 != 0) continue;
        const std::int64_t b = exact_sqrt(rest / 3);
        if (b <= 0) continue;
        if (b_parity == Parity::kOdd && b % 2 == 0) continue;
        total = checked::add(total, term(a, b));
    }
    return total;
}

/// Sum over d | m of (-1)^(e + d) ((5/d) + (5/(m/d))) d.
inline std::int64_t signed_quintic_sum(std::int64_t m, std::int64_t e) {
    return weighted_divisor_sum(m, [e](std::int64_t d, std::int64_t q) {
        return minus_one_pow(e + d) * (kronecker(5, d) + kronecker(5, q)) * d;
    });
}

}  // namespace sums

namespace detail {

inline std::int64_t odd_part(std::int64_t n) { return split_factors(n, {2}).cofactor; }

inline std::pair<std::int64_t, std::int64_t> three_split(std::int64_t n) {
    const FactorSplit s = split_factors(n, {3});
    return {s.exponents[0], s.cofactor};
}

inline std::pair<std::int64_t, std::int64_t> five_split(std::int64_t n) {
    const FactorSplit s = split_factors(n, {5});
    return {s.exponents[0], s.cofactor};
}

// Common piece of the (1,1,3,4), (1,3,3,12) and (1,1,1,12) t-formulas:
// (3^e (3/n1) + sign) * sum_{d | n1} d (3/d), with 3^e n1 = m.
inline std::int64_t cubic_twist_term(std::int64_t m, std::int64_t extra_power, std::int64_t sign) {
    const auto [beta, n1] = three_split(m);
    const std::int64_t lead = checked::add(checked::mul(checked::pow(3, beta + extra_power), kronecker(3, n1)), sign);
    return checked::mul(lead, sums::twisted_divisor_sum(n1, 3));
}

}  // namespace detail

namespace closed {

// ---- N(f; n) ----

inline Rational N_1111(std::int64_t n) {
    if (n == 0) return 1;
    return 8 * weighted_divisor_sum(n, [](std::int64_t d, std::int64_t) { return d % 4 != 0 ? d : 0; });
}

inline Rational N_1128(std::int64_t n) {
    const std::int64_t n1 = detail::odd_part(n);
    if (n % 4 == 1) return checked::add(2 * sigma(n1), 2 * kronecker(2, n1) * sums::signed_r_sum(n1, 4));
    if (n % 4 == 3) return 2 * sigma(n1);
    return 12 * sigma(n1);  // n = 4 (mod 8)
}

inline Rational N_11216(std::int64_t n) {
    const std::int64_t n1 = detail::odd_part(n);
    const std::int64_t base = sums::cotwisted_divisor_sum(n1, 2);
    if (n % 2 == 1) return checked::add(2 * base, 2 * sums::signed_r_sum(n1, 2));
    return 12 * base;  // n = 4 (mod 8)
}

inline Rational N_1236(std::int64_t n) {
    const FactorSplit s = split_factors(n, {2, 3});
    const std::int64_t core = checked::mul(checked::pow(3, s.exponent_of(3) + 1) - 2, sigma(s.cofactor));
    if (n % 2 == 1) return checked::add(core, a_coefficient(n));
    return 6 * core;  // n = 0 (mod 4)
}

inline Rational N_13412(std::int64_t n) {
    const std::int64_t n1 = split_factors(n, {2, 3}).cofactor;
    if (n % 8 == 4) return 8 * sigma(n1);
    if (n % 4 == 1) return sigma(n1) + a_coefficient(n);
    return sigma(n1) - a_coefficient(n);  // n = 3 (mod 4)
}

inline Rational N_1134(std::int64_t n) {
    const CharSums s = char_sums(n);
    return Rational(3 * s.A - s.B) + Rational(3, 2) * s.C - Rational(1, 2) * s.D + s.E;
}

inline Rational N_11412(std::int64_t n) {
    const CharSums s = char_sums(n);
    return Rational(3, 2) * s.A - Rational(1, 2) * s.B + Rational(3, 2) * s.C - Rational(1, 2) * s.D +
           Rational(1, 2) * s.E + Rational(3, 2) * s.F;
}

inline Rational N_1155(std::int64_t n) {
    const FactorSplit s = split_factors(n, {2, 5});
    const std::int64_t core = checked::mul(checked::pow(5, s.exponent_of(5) + 1) - 3, sigma(s.cofactor));
    if (n % 2 == 0) return 2 * core;
    return Rational(2, 3) * core + Rational(8, 3) * c_coefficient(n);
}

inline Rational N_1555(std::int64_t n) { return sums::signed_quintic_sum(n, n); }

inline Rational N_13312(std::int64_t n) {
    const CharSums s = char_sums(n);
    return Rational(s.A + s.B) - Rational(1, 2) * s.C - Rational(1, 2) * s.D + s.F;
}

inline Rational N_33412(std::int64_t n) {
    const CharSums s = char_sums(n);
    return Rational(s.A + s.B - s.C - s.D - s.E + s.F, 2);
}

inline Rational N_11112(std::int64_t n) {
    const CharSums s = char_sums(n);
    return Rational(3 * s.A - s.B) + Rational(3, 2) * s.C - Rational(1, 2) * s.D + 3 * s.F;
}

inline Rational N_11312(std::int64_t n) { return 3 * sigma(detail::three_split(n).second) + a_coefficient(n); }
inline Rational N_111212(std::int64_t n) {
    return 2 * sigma(detail::three_split(n).second) + 2 * a_coefficient(n);
}
inline Rational N_1334(std::int64_t n) { return 3 * sigma(detail::three_split(n).second) - a_coefficient(n); }
inline Rational N_3344(std::int64_t n) { return 2 * sigma(detail::three_split(n).second) - 2 * a_coefficient(n); }

// ---- t(f; n), n >= 1 ----

inline Rational t_1111(std::int64_t n) { return 16 * sigma(2 * n + 1); }

inline Rational t_1122(std::int64_t n) {
    const std::int64_t sum = weighted_divisor_sum(
        4 * n + 3, [](std::int64_t d, std::int64_t) { return d - minus_one_pow((d - 1) / 2); });
    return Rational(16) * Rational(sum, 4);
}

inline Rational t_1128(std::int64_t n) {
    const std::int64_t m = 2 * n + 3;
    if (n % 2 == 0) return 4 * sigma(m);
    return checked::add(4 * sigma(m), 4 * minus_one_pow((n - 1) / 2) * sums::signed_r_sum(m, 4));
}

inline Rational t_11216(std::int64_t n) {
    const std::int64_t m = 2 * n + 5;
    return checked::sub(4 * sums::cotwisted_divisor_sum(m, 2), 4 * sums::signed_r_sum(m, 2));
}

inline Rational t_1236(std::int64_t n) {
    const auto [beta, n1] = detail::three_split(2 * n + 3);
    return checked::sub(2 * checked::mul(checked::pow(3, beta + 1) - 2, sigma(n1)), 2 * a_coefficient(2 * n + 3));
}

inline Rational t_13412(std::int64_t n) {
    const auto [beta, n1] = detail::three_split(2 * n + 5);
    return 2 * checked::sub(sigma(n1), minus_one_pow(n) * a_coefficient(2 * n + 5));
}

inline Rational t_1134(std::int64_t n) {
    const std::int64_t m = 8 * n + 9;
    const std::int64_t lattice =
        sums::lattice_sum(m, sums::Parity::kAny, [](std::int64_t a, std::int64_t) { return minus_one_pow((a - 1) / 2) * a; });
    return Rational(detail::cubic_twist_term(m, 1, -1), 2) - lattice;
}

inline Rational t_1155(std::int64_t n) {
    const auto [beta, n1] = detail::five_split(2 * n + 3);
    const std::int64_t core = checked::mul(checked::pow(5, beta + 1) - 3, sigma(n1));
    return Rational(4, 3) * core - Rational(8, 3) * c_coefficient(2 * n + 3);
}

inline Rational t_1555(std::int64_t n) {
    // (-1)^d weighting; both arguments are even so this matches N_1555's (-1)^(n+d).
    return checked::sub(sums::signed_quintic_sum(8 * n + 16, 0), sums::signed_quintic_sum(2 * n + 4, 0));
}

inline Rational t_13312(std::int64_t n) {
    const std::int64_t m = 8 * n + 19;
    // The leading power is 3^beta here, one less than in the neighbouring (1,1,3,4) and (1,1,1,12) formulas.
    const std::int64_t lattice = sums::lattice_sum(m, sums::Parity::kOdd, [](std::int64_t a, std::int64_t b) {
        return minus_one_pow((a - 1) / 2) * a + minus_one_pow((b - 1) / 2) * b;
    });
    return Rational(detail::cubic_twist_term(m, 0, -1), 2) + Rational(lattice, 2);
}

inline Rational t_11112(std::int64_t n) {
    const std::int64_t m = 8 * n + 15;
    // a odd forces b odd here (a^2 + 3b^2 = 4m with m odd).
    const std::int64_t lattice =
        sums::lattice_sum(m, sums::Parity::kAny, [](std::int64_t, std::int64_t b) { return minus_one_pow((b - 1) / 2) * b; });
    return Rational(detail::cubic_twist_term(m, 1, 1), 2) + 3 * lattice;
}

inline Rational t_11312(std::int64_t n) {
    return sigma(detail::three_split(8 * n + 17).second) - a_coefficient(8 * n + 17);
}

inline Rational t_1334(std::int64_t n) {
    return sigma(detail::three_split(8 * n + 11).second) + a_coefficient(8 * n + 11);
}

}  // namespace closed

enum class CountTarget { kN, kT };

/// One closed formula: the form it counts, where it applies, and how to evaluate it.
struct FormulaEntry {
    std::string_view id;
    CountTarget target;
    QuadForm form;
    std::int64_t min_n;
    std::string_view hypothesis;  // congruence conditions, "" when none
    bool (*in_domain)(std::int64_t n);
    Rational (*evaluate)(std::int64_t n);
};

namespace detail {

inline bool any_n(std::int64_t) { return true; }
inline bool odd_n(std::int64_t n) { return n % 2 == 1; }

inline std::span<const FormulaEntry> formula_table() {
    static const FormulaEntry table[] = {
        {"jacobi", CountTarget::kN, {1, 1, 1, 1}, 0, "", any_n, closed::N_1111},
        {"lemma-3.1", CountTarget::kN, {1, 1, 2, 8}, 1, "n = 1,3 (mod 4) or n = 4 (mod 8)",
         [](std::int64_t n) { return n % 2 == 1 || n % 8 == 4; }, closed::N_1128},
        {"lemma-3.2", CountTarget::kN, {1, 1, 2, 16}, 1, "n odd or n = 4 (mod 8)",
         [](std::int64_t n) { return n % 2 == 1 || n % 8 == 4; }, closed::N_11216},
        {"lemma-3.3", CountTarget::kN, {1, 2, 3, 6}, 1, "n odd or n = 0 (mod 4)",
         [](std::int64_t n) { return n % 2 == 1 || n % 4 == 0; }, closed::N_1236},
        {"lemma-3.4", CountTarget::kN, {1, 3, 4, 12}, 1, "n odd or n = 4 (mod 8)",
         [](std::int64_t n) { return n % 2 == 1 || n % 8 == 4; }, closed::N_13412},
        {"lemma-4.1", CountTarget::kN, {1, 1, 3, 4}, 1, "n odd", odd_n, closed::N_1134},
        {"lemma-4.2", CountTarget::kN, {1, 1, 4, 12}, 1, "n odd", odd_n, closed::N_11412},
        {"lemma-4.3", CountTarget::kN, {1, 1, 5, 5}, 1, "", any_n, closed::N_1155},
        {"lemma-4.4", CountTarget::kN, {1, 5, 5, 5}, 1, "", any_n, closed::N_1555},
        {"lemma-4.5a", CountTarget::kN, {1, 3, 3, 12}, 1, "n odd", odd_n, closed::N_13312},
        {"lemma-4.5b", CountTarget::kN, {3, 3, 4, 12}, 1, "n odd", odd_n, closed::N_33412},
        {"lemma-4.6", CountTarget::kN, {1, 1, 1, 12}, 1, "n odd", odd_n, closed::N_11112},
        {"lemma-4.7a", CountTarget::kN, {1, 1, 3, 12}, 1, "n = 1 (mod 4)", [](std::int64_t n) { return n % 4 == 1; },
         closed::N_11312},
        {"lemma-4.7b", CountTarget::kN, {1, 1, 12, 12}, 1, "n = 1 (mod 4)", [](std::int64_t n) { return n % 4 == 1; },
         closed::N_111212},
        {"lemma-4.8a", CountTarget::kN, {1, 3, 3, 4}, 1, "n = 3 (mod 4)", [](std::int64_t n) { return n % 4 == 3; },
         closed::N_1334},
        {"lemma-4.8b", CountTarget::kN, {3, 3, 4, 4}, 1, "n = 3 (mod 4)", [](std::int64_t n) { return n % 4 == 3; },
         closed::N_3344},
        {"legendre", CountTarget::kT, {1, 1, 1, 1}, 1, "", any_n, closed::t_1111},
        {"williams", CountTarget::kT, {1, 1, 2, 2}, 1, "", any_n, closed::t_1122},
        {"thm-3.1", CountTarget::kT, {1, 1, 2, 8}, 1, "", any_n, closed::t_1128},
        {"thm-3.2", CountTarget::kT, {1, 1, 2, 16}, 1, "", any_n, closed::t_11216},
        {"thm-3.3", CountTarget::kT, {1, 2, 3, 6}, 1, "", any_n, closed::t_1236},
        {"thm-3.4", CountTarget::kT, {1, 3, 4, 12}, 1, "", any_n, closed::t_13412},
        {"thm-4.1", CountTarget::kT, {1, 1, 3, 4}, 1, "", any_n, closed::t_1134},
        {"thm-4.2", CountTarget::kT, {1, 1, 5, 5}, 1, "", any_n, closed::t_1155},
        {"thm-4.3", CountTarget::kT, {1, 5, 5, 5}, 1, "", any_n, closed::t_1555},
        {"thm-4.4", CountTarget::kT, {1, 3, 3, 12}, 1, "", any_n, closed::t_13312},
        {"thm-4.5", CountTarget::kT, {1, 1, 1, 12}, 1, "", any_n, closed::t_11112},
        {"thm-4.6", CountTarget::kT, {1, 1, 3, 12}, 1, "", any_n, closed::t_11312},
        {"thm-4.7", CountTarget::kT, {1, 3, 3, 4}, 1, "", any_n, closed::t_1334},
    };
    return table;
}

}  // namespace detail

/// Every registered closed formula, N formulas first.
inline std::span<const FormulaEntry> formula_entries() { return detail::formula_table(); }

inline const FormulaEntry* find_formula(std::string_view id) {
    for (const FormulaEntry& e : formula_entries())
        if (e.id == id) return &e;
    return nullptr;
}

inline const FormulaEntry* find_formula(CountTarget target, const QuadForm& f) {
    for (const FormulaEntry& e : formula_entries())
        if (e.target == target && e.form == f) return &e;
    return nullptr;
}

/// Evaluates an entry after checking its range and congruence hypotheses.
/// Returns the exact (possibly fractional) value; callers decide what a
/// non-integer means.
inline Rational evaluate_formula(const FormulaEntry& e, std::int64_t n) {
    if (n < e.min_n)
        throw domain_error(std::string(e.id) + ": n must be >= " + std::to_string(e.min_n));
    if (!e.in_domain(n))
        throw guard_violation(std::string(e.id) + ": requires " + std::string(e.hypothesis));
    return e.evaluate(n);
}

/// Closed-form N(f; n). Throws domain_error for forms without a formula and
/// guard_violation outside the formula's congruence classes.
inline std::int64_t closed_form_N(const QuadForm& f, std::int64_t n) {
    const FormulaEntry* e = find_formula(CountTarget::kN, f);
    if (e == nullptr) throw domain_error("no closed form for N(" + f.to_string() + ")");
    return evaluate_formula(*e, n).to_integer();
}

/// Closed-form t(f; n) for n >= 1 (the count over Z^4).
inline std::int64_t closed_form_t(const QuadForm& f, std::int64_t n) {
    const FormulaEntry* e = find_formula(CountTarget::kT, f);
    if (e == nullptr) throw domain_error("no closed form for t(" + f.to_string() + ")");
    return evaluate_formula(*e, n).to_integer();
}

// ---- relations between t and N ----

/// The four parametrized families for which
///   t(f; n) = 2/3 N(f; 8n + S) - 2 N(f; 2n + S/4),  S = a + b + c + d.
enum class RelationFamily {
    kAA2A8m,       // (a, a, 2a, 8m),             m >= 1
    kA3A8k2_8m6,   // (a, 3a, 8k+2, 8m+6),        k, m >= 0
    kA3A8m4_8m4,   // (a, 3a, 8m+4, 8m+4),        m >= 0, n = m + (a-1)/2 (mod 2)
    kA3A16k4_16m4, // (a, 3a, 16k+4, 16m+4),      k, m >= 0, n = (a-1)/2 (mod 2)
};

struct FamilyParams {
    std::int64_t a = 1;
    std::int64_t k = 0;
    std::int64_t m = 0;
};

/// The quadruple of a family member; throws domain_error outside the family's parameter range.
inline QuadForm family_form(RelationFamily family, const FamilyParams& p) {
    if (p.a < 1 || p.a % 2 == 0) throw domain_error("relation family: a must be odd and positive");
    if (p.k < 0 || p.m < 0) throw domain_error("relation family: k and m must be nonnegative");
    switch (family) {
        case RelationFamily::kAA2A8m:
            if (p.m < 1) throw domain_error("relation family (a,a,2a,8m): m must be >= 1");
            return {p.a, p.a, 2 * p.a, 8 * p.m};
        case RelationFamily::kA3A8k2_8m6:
            return {p.a, 3 * p.a, 8 * p.k + 2, 8 * p.m + 6};
        case RelationFamily::kA3A8m4_8m4:
            return {p.a, 3 * p.a, 8 * p.m + 4, 8 * p.m + 4};
        case RelationFamily::kA3A16k4_16m4:
            return {p.a, 3 * p.a, 16 * p.k + 4, 16 * p.m + 4};
    }
    throw domain_error("unknown relation family");
}

/// Parity condition on n, if the family has one.
inline bool family_guard_holds(RelationFamily family, const FamilyParams& p, std::int64_t n) {
    const std::int64_t half = (p.a - 1) / 2;
    switch (family) {
        case RelationFamily::kA3A8m4_8m4:
            return ((n - p.m - half) % 2) == 0;
        case RelationFamily::kA3A16k4_16m4:
            return ((n - half) % 2) == 0;
        default:
            return true;
    }
}

/// 2/3 N(f; 8n + S) - 2 N(f; 2n + S/4), for any form with 4 | S.
inline Rational theta_relation_value(const QuadForm& f, std::int64_t n) {
    const std::int64_t s = f.sum();
    if (s % 4 != 0) throw domain_error("theta relation needs a coefficient sum divisible by 4");
    return Rational(2, 3) * count_N(f, 8 * n + s) - Rational(2 * count_N(f, 2 * n + s / 4));
}

/// Predicted t(f; n) from the family relation. Throws guard_violation when the
/// family's parity condition fails.
inline Rational relation_theorem2(RelationFamily family, const FamilyParams& p, std::int64_t n) {
    const QuadForm f = family_form(family, p);
    if (n < 1) throw domain_error("relation family: n must be >= 1");
    if (!family_guard_holds(family, p, n)) throw guard_violation("relation family: parity condition on n fails");
    return theta_relation_value(f, n);
}

/// Predicted t'(f; n) = N(f; 8n + S) / C(f) for coefficient sums 5..7.
inline Rational relation_ach(const QuadForm& f, std::int64_t n) {
    const std::int64_t s = f.sum();
    if (s < 5 || s > 7) throw domain_error("relation_ach: coefficient sum must be in [5, 7]");
    if (n < 0) throw domain_error("relation_ach: n must be >= 0");
    return Rational(count_N(f, 8 * n + s), cap_C(f));
}

/// Predicted t'(f; n) = (N(f; 8n + 8) - N(f; 2n + 2)) / C(f) for coefficient sum 8.
inline Rational relation_bch(const QuadForm& f, std::int64_t n) {
    if (f.sum() != 8) throw domain_error("relation_bch: coefficient sum must be 8");
    if (n < 0) throw domain_error("relation_bch: n must be >= 0");
    return Rational(count_N(f, 8 * n + 8) - count_N(f, 2 * n + 2), cap_C(f));
}

/// Predicted t(1,3,4,12; n) = 1/2 N(8n + 20) - 2 N(2n + 5).
inline Rational relation_eq33(std::int64_t n) {
    if (n < 0) throw domain_error("relation_eq33: n must be >= 0");
    const QuadForm f{1, 3, 4, 12};
    return Rational(count_N(f, 8 * n + 20), 2) - Rational(2 * count_N(f, 2 * n + 5));
}

}  // namespace quadrep
