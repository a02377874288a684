#pragma once

// Claim registry: every formula, relation and identity the harness can verify,
// each paired with the brute-force count it is compared against.

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "quadrep/formulas.hpp"
#include "quadrep/rational.hpp"
#include "quadrep/repcount.hpp"

namespace quadrep {

class unknown_claim : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Params = std::map<std::string, std::int64_t>;

enum class ClaimKind {
    kClosedN,        // closed form for N, oracle count_N
    kClosedT,        // closed form for t, oracle count_t
    kFamily,         // t from two N values along a parametrized family
    kAch,            // C(f) t'(f; n) = N(f; 8n + S), 5 <= S <= 7
    kBch,            // C(f) t'(f; n) = N(f; 8n + 8) - N(f; 2n + 2), S = 8
    kEq33,           // t(1,3,4,12; n) from N(1,3,4,12)
    kOddIdentity,    // t(f; n) = N_0(f; 8n + S)
};

struct ClaimSpec {
    std::string_view id;
    ClaimKind kind;
    std::vector<std::string_view> params;
    const FormulaEntry* formula = nullptr;  // closed forms only
    RelationFamily family = RelationFamily::kAA2A8m;
};

namespace detail {

inline std::vector<ClaimSpec> build_claims() {
    std::vector<ClaimSpec> out;
    for (const FormulaEntry& e : formula_entries())
        out.push_back({e.id, e.target == CountTarget::kN ? ClaimKind::kClosedN : ClaimKind::kClosedT, {}, &e});
    out.push_back({"rel-2.1", ClaimKind::kFamily, {"a", "m"}, nullptr, RelationFamily::kAA2A8m});
    out.push_back({"rel-2.2", ClaimKind::kFamily, {"a", "k", "m"}, nullptr, RelationFamily::kA3A8k2_8m6});
    out.push_back({"rel-2.3", ClaimKind::kFamily, {"a", "m"}, nullptr, RelationFamily::kA3A8m4_8m4});
    out.push_back({"rel-2.4", ClaimKind::kFamily, {"a", "k", "m"}, nullptr, RelationFamily::kA3A16k4_16m4});
    out.push_back({"rel-1.3", ClaimKind::kAch, {"a", "b", "c", "d"}});
    out.push_back({"rel-1.4", ClaimKind::kBch, {"a", "b", "c", "d"}});
    out.push_back({"rel-3.3", ClaimKind::kEq33, {}});
    out.push_back({"id-4.1", ClaimKind::kOddIdentity, {"a", "b", "c", "d"}});
    return out;
}

inline std::int64_t param(const Params& p, const std::string& name) {
    const auto it = p.find(name);
    if (it == p.end()) throw domain_error("missing parameter '" + name + "'");
    return it->second;
}

inline QuadForm form_param(const Params& p) {
    return {param(p, "a"), param(p, "b"), param(p, "c"), param(p, "d")};
}

inline FamilyParams family_params(const ClaimSpec& c, const Params& p) {
    FamilyParams fp;
    fp.a = param(p, "a");
    fp.m = param(p, "m");
    if (c.family == RelationFamily::kA3A8k2_8m6 || c.family == RelationFamily::kA3A16k4_16m4) fp.k = param(p, "k");
    return fp;
}

}  // namespace detail

inline std::span<const ClaimSpec> claims() {
    static const std::vector<ClaimSpec> table = detail::build_claims();
    return table;
}

inline const ClaimSpec& find_claim(std::string_view id) {
    for (const ClaimSpec& c : claims())
        if (c.id == id) return c;
    throw unknown_claim("unknown claim '" + std::string(id) + "'");
}

/// Every form with a closed formula, sorted and without repeats.
inline std::vector<QuadForm> registered_forms() {
    std::vector<QuadForm> forms;
    for (const FormulaEntry& e : formula_entries()) forms.push_back(e.form);
    std::sort(forms.begin(), forms.end());
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    return forms;
}

/// All ordered quadruples of positive integers with lo <= a+b+c+d <= hi.
inline std::vector<QuadForm> forms_with_sum(std::int64_t lo, std::int64_t hi) {
    std::vector<QuadForm> out;
    for (std::int64_t a = 1; a <= hi; ++a)
        for (std::int64_t b = 1; a + b <= hi; ++b)
            for (std::int64_t c = 1; a + b + c <= hi; ++c)
                for (std::int64_t d = std::max<std::int64_t>(1, lo - a - b - c); a + b + c + d <= hi; ++d)
                    out.emplace_back(a, b, c, d);
    return out;
}

/// Forms swept by a form-parametrized claim when the caller does not name any.
inline std::vector<QuadForm> default_forms(const ClaimSpec& c) {
    switch (c.kind) {
        case ClaimKind::kAch: return forms_with_sum(5, 7);
        case ClaimKind::kBch: return forms_with_sum(8, 8);
        case ClaimKind::kOddIdentity: return registered_forms();
        default: return {};
    }
}

inline bool takes_form(const ClaimSpec& c) {
    return c.kind == ClaimKind::kAch || c.kind == ClaimKind::kBch || c.kind == ClaimKind::kOddIdentity;
}

/// Throws domain_error if the parameters are incomplete or outside the claim's range.
inline void validate_params(const ClaimSpec& c, const Params& p) {
    for (const std::string_view name : c.params) detail::param(p, std::string(name));
    switch (c.kind) {
        case ClaimKind::kFamily:
            family_form(c.family, detail::family_params(c, p));
            break;
        case ClaimKind::kAch: {
            const QuadForm f = detail::form_param(p);
            if (f.sum() < 5 || f.sum() > 7) throw domain_error("rel-1.3 needs 5 <= a+b+c+d <= 7");
            break;
        }
        case ClaimKind::kBch:
            if (detail::form_param(p).sum() != 8) throw domain_error("rel-1.4 needs a+b+c+d = 8");
            break;
        case ClaimKind::kOddIdentity:
            detail::form_param(p);
            break;
        default:
            break;
    }
}

/// The value the claim predicts (right-hand side). May be fractional when the
/// claim is false; throws guard_violation outside its congruence hypotheses.
inline Rational claim_prediction(const ClaimSpec& c, const Params& p, std::int64_t n) {
    switch (c.kind) {
        case ClaimKind::kClosedN:
        case ClaimKind::kClosedT:
            return evaluate_formula(*c.formula, n);
        case ClaimKind::kFamily:
            return relation_theorem2(c.family, detail::family_params(c, p), n);
        case ClaimKind::kAch:
            return relation_ach(detail::form_param(p), n);
        case ClaimKind::kBch:
            return relation_bch(detail::form_param(p), n);
        case ClaimKind::kEq33:
            return relation_eq33(n);
        case ClaimKind::kOddIdentity: {
            if (n < 0) throw domain_error("id-4.1: n must be >= 0");
            const QuadForm f = detail::form_param(p);
            return count_N_odd(f, 8 * n + f.sum());
        }
    }
    throw unknown_claim("unhandled claim kind");
}

/// The brute-force count the prediction is compared against (left-hand side).
inline std::int64_t claim_oracle(const ClaimSpec& c, const Params& p, std::int64_t n) {
    switch (c.kind) {
        case ClaimKind::kClosedN:
            return count_N(c.formula->form, n);
        case ClaimKind::kClosedT:
            return count_t(c.formula->form, n);
        case ClaimKind::kFamily:
            return count_t(family_form(c.family, detail::family_params(c, p)), n);
        case ClaimKind::kAch:
        case ClaimKind::kBch:
            return count_t_pos(detail::form_param(p), n);
        case ClaimKind::kEq33:
            return count_t({1, 3, 4, 12}, n);
        case ClaimKind::kOddIdentity:
            return count_t(detail::form_param(p), n);
    }
    throw unknown_claim("unhandled claim kind");
}

}  // namespace quadrep
