#pragma once

// Command-line front end. Kept in a header so the tests can drive it in-process.
//
// Exit codes: 0 all good (skips allowed), 1 a verification failed, 2 usage or
// configuration error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quadrep.hpp"

namespace quadrep::cli {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

namespace detail {

inline std::vector<std::string> split_list(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find(sep, pos), text.size());
        if (end > pos) out.push_back(text.substr(pos, end - pos));
        pos = end + 1;
    }
    return out;
}

inline std::optional<ThetaIdentity> identity_from_name(const std::string& name) {
    if (name == "1.6") return ThetaIdentity::kPhiSplit;
    if (name == "1.7") return ThetaIdentity::kPsiPsi3;
    if (name == "1.8") return ThetaIdentity::kPsiSquared;
    if (name == "1.9") return ThetaIdentity::kPhiSplitTwice;
    return std::nullopt;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Representation counts by quaternary forms and sums of four triangular numbers", "quadrep"};
    app.require_subcommand(1);

    // count
    auto* count = app.add_subcommand("count", "Brute-force representation count");
    std::string form_text;
    std::int64_t n = 0;
    std::string kind = "N";
    count->add_option("--form", form_text, "Coefficients a,b,c,d")->required();
    count->add_option("--n", n, "Integer to represent")->required();
    count->add_option("--kind", kind, "N, N0, t or tprime")->check(CLI::IsMember({"N", "N0", "t", "tprime"}));

    // formula
    auto* formula = app.add_subcommand("formula", "Evaluate a registered formula or relation");
    std::string claim_id;
    std::int64_t fa = 1, fk = 0, fm = 0;
    std::string formula_form;
    formula->add_option("--id", claim_id, "Claim identifier (see `list`)")->required();
    formula->add_option("--n", n, "Argument n")->required();
    formula->add_option("--a", fa, "Family parameter a");
    formula->add_option("--k", fk, "Family parameter k");
    formula->add_option("--m", fm, "Family parameter m");
    formula->add_option("--form", formula_form, "Form a,b,c,d for form-parametrized claims");

    // verify
    auto* verify = app.add_subcommand("verify", "Sweep claims against brute force, JSON lines out");
    std::string ids_text, n_range, a_range, k_range, m_range, out_path;
    std::vector<std::string> verify_forms;
    unsigned jobs = 1;
    verify->add_option("--id", ids_text, "Comma-separated claim ids, or 'all'")->required();
    verify->add_option("--n", n_range, "n range, e.g. 1..300 or 1..100:odd")->required();
    verify->add_option("--a", a_range, "Range for a");
    verify->add_option("--k", k_range, "Range for k");
    verify->add_option("--m", m_range, "Range for m");
    verify->add_option("--form", verify_forms, "Form a,b,c,d (repeatable) for form-parametrized claims");
    verify->add_option("--out", out_path, "Report file (default: standard output)");
    verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));

    // series
    auto* series = app.add_subcommand("series", "Check a theta-function identity coefficientwise");
    std::string identity_name;
    std::size_t order = 1024;
    std::size_t k = 1;
    series->add_option("--check", identity_name, "1.6, 1.7, 1.8 or 1.9")
        ->required()
        ->check(CLI::IsMember({"1.6", "1.7", "1.8", "1.9"}));
    series->add_option("--order", order, "Truncation order");
    series->add_option("--k", k, "Scale k for 1.9")->check(CLI::PositiveNumber);

    auto* list = app.add_subcommand("list", "List registered claims");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*count) {
            const QuadForm f = QuadForm::parse(form_text);
            if (n < 0) throw domain_error("--n must be >= 0");
            std::int64_t value = 0;
            if (kind == "N") value = count_N(f, n);
            else if (kind == "N0") value = count_N_odd(f, n);
            else if (kind == "t") value = count_t(f, n);
            else value = count_t_pos(f, n);
            out << value << '\n';
            return kOk;
        }

        if (*formula) {
            const ClaimSpec& c = find_claim(claim_id);
            Params p{{"a", fa}, {"k", fk}, {"m", fm}};
            if (takes_form(c)) {
                if (formula_form.empty()) throw domain_error(claim_id + " needs --form");
                const QuadForm f = QuadForm::parse(formula_form);
                p = {{"a", f.a}, {"b", f.b}, {"c", f.c}, {"d", f.d}};
            }
            validate_params(c, p);
            try {
                out << claim_prediction(c, p, n) << '\n';
            } catch (const guard_violation& g) {
                out << "skipped: " << g.what() << '\n';
            }
            return kOk;
        }

        if (*verify) {
            SweepRequest req;
            if (ids_text == "all") {
                for (const ClaimSpec& c : claims()) req.claim_ids.emplace_back(c.id);
            } else {
                req.claim_ids = detail::split_list(ids_text, ',');
            }
            req.ns = parse_range(n_range);
            if (!a_range.empty()) req.param_ranges["a"] = parse_range(a_range);
            if (!k_range.empty()) req.param_ranges["k"] = parse_range(k_range);
            if (!m_range.empty()) req.param_ranges["m"] = parse_range(m_range);
            for (const std::string& f : verify_forms) req.forms.push_back(QuadForm::parse(f));
            req.jobs = jobs;

            const std::vector<VerificationRecord> records = run_sweep(req);
            std::ofstream file;
            if (!out_path.empty()) {
                file.open(out_path);
                if (!file) {
                    err << "error: cannot write " << out_path << '\n';
                    return kUsage;
                }
            }
            std::ostream& sink = out_path.empty() ? out : file;
            for (const VerificationRecord& r : records) sink << to_json_line(r) << '\n';
            sink.flush();
            if (!sink) {
                err << "error: failed writing report\n";
                return kUsage;
            }
            const SweepSummary summary = summarize(records);
            write_summary(err, summary);
            return summary.exit_code();
        }

        if (*series) {
            const auto id = detail::identity_from_name(identity_name);
            const auto [lhs, rhs] = theta_identity_sides(*id, order, k);
            const IdentityCheck check = check_identity(lhs, rhs);
            if (check.pass) {
                out << "pass\n";
                return kOk;
            }
            out << "fail at exponent " << *check.first_mismatch << '\n';
            return kFailed;
        }

        if (*list) {
            for (const ClaimSpec& c : claims()) {
                out << c.id;
                if (c.formula != nullptr) {
                    out << "  " << (c.formula->target == CountTarget::kN ? "N(" : "t(") << c.formula->form.to_string()
                        << ")";
                    if (!c.formula->hypothesis.empty()) out << "  [" << c.formula->hypothesis << "]";
                }
                for (const std::string_view name : c.params) out << "  --" << name;
                out << '\n';
            }
            return kOk;
        }
    } catch (const domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const unknown_claim& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace quadrep::cli
