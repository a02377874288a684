#pragma once

// Verification sweeps: expand (claim, params, n) grids, evaluate both sides
// of each claim, and emit deterministic JSON-lines records.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "quadrep/claims.hpp"
#include "quadrep/rational.hpp"

namespace quadrep {

/// Parses the sweep range syntax: comma-separated items, each either an
/// integer or an inclusive "lo..hi", with an optional ":odd" / ":even" suffix
/// filtering the whole set. Result is sorted and deduplicated.
inline std::vector<std::int64_t> parse_range(std::string_view text) {
    enum class Filter { kNone, kOdd, kEven } filter = Filter::kNone;
    if (const auto colon = text.rfind(':'); colon != std::string_view::npos) {
        const std::string_view suffix = text.substr(colon + 1);
        if (suffix == "odd") filter = Filter::kOdd;
        else if (suffix == "even") filter = Filter::kEven;
        else throw domain_error("unknown range filter ':" + std::string(suffix) + "'");
        text = text.substr(0, colon);
    }
    auto parse_int = [](std::string_view s) {
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
            throw domain_error("bad integer '" + std::string(s) + "' in range");
        return v;
    };
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string_view item = text.substr(pos, comma - pos);
        if (const auto dots = item.find(".."); dots != std::string_view::npos) {
            const std::int64_t lo = parse_int(item.substr(0, dots));
            const std::int64_t hi = parse_int(item.substr(dots + 2));
            if (hi < lo) throw domain_error("empty range '" + std::string(item) + "'");
            if (hi - lo > 100'000'000) throw domain_error("range '" + std::string(item) + "' is too large");
            for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
        } else {
            out.push_back(parse_int(item));
        }
        pos = comma + 1;
    }
    std::erase_if(out, [filter](std::int64_t v) {
        if (filter == Filter::kOdd) return v % 2 == 0;
        if (filter == Filter::kEven) return v % 2 != 0;
        return false;
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty()) throw domain_error("range '" + std::string(text) + "' selects nothing");
    return out;
}

/// One verified (claim, params, n) cell. lhs is the brute-force count, rhs the
/// claimed value. Skipped cells (hypotheses not met) carry neither.
struct VerificationRecord {
    std::string claim;
    Params params;
    std::int64_t n = 0;
    std::optional<std::int64_t> lhs;
    std::optional<Rational> rhs;
    bool pass = false;
    bool skipped = false;

    auto sort_key() const { return std::tie(claim, params, n); }
};

inline nlohmann::ordered_json to_json(const VerificationRecord& r) {
    nlohmann::ordered_json j;
    j["claim"] = r.claim;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [name, value] : r.params) j["params"][name] = value;
    j["n"] = r.n;
    j["lhs"] = r.lhs ? nlohmann::ordered_json(*r.lhs) : nlohmann::ordered_json(nullptr);
    if (!r.rhs) j["rhs"] = nullptr;
    else if (r.rhs->is_integer()) j["rhs"] = r.rhs->num();
    else j["rhs"] = r.rhs->to_string();
    j["pass"] = r.pass;
    j["skipped"] = r.skipped;
    return j;
}

inline std::string to_json_line(const VerificationRecord& r) { return to_json(r).dump(); }

/// Evaluates a single cell. Guard violations become skipped records; any
/// other domain_error propagates.
inline VerificationRecord verify_cell(const ClaimSpec& c, const Params& p, std::int64_t n) {
    VerificationRecord r;
    r.claim = std::string(c.id);
    r.params = p;
    r.n = n;
    try {
        r.rhs = claim_prediction(c, p, n);
    } catch (const guard_violation&) {
        r.skipped = true;
        return r;
    }
    r.lhs = claim_oracle(c, p, n);
    r.pass = r.rhs->is_integer() && r.rhs->num() == *r.lhs;
    return r;
}

struct SweepRequest {
    std::vector<std::string> claim_ids;
    std::map<std::string, std::vector<std::int64_t>> param_ranges;  // a, k, m
    std::vector<QuadForm> forms;                                    // for form claims; empty = default set
    std::vector<std::int64_t> ns;
    unsigned jobs = 1;
};

struct Cell {
    const ClaimSpec* claim;
    Params params;
    std::int64_t n;
};

namespace detail {

inline std::vector<Params> expand_params(const ClaimSpec& c, const SweepRequest& req) {
    std::vector<Params> grid{Params{}};
    if (takes_form(c)) {
        const std::vector<QuadForm> forms = req.forms.empty() ? default_forms(c) : req.forms;
        grid.clear();
        for (const QuadForm& f : forms) grid.push_back({{"a", f.a}, {"b", f.b}, {"c", f.c}, {"d", f.d}});
        return grid;
    }
    for (const std::string_view name : c.params) {
        const auto it = req.param_ranges.find(std::string(name));
        if (it == req.param_ranges.end())
            throw domain_error(std::string(c.id) + " needs --" + std::string(name));
        std::vector<Params> next;
        for (const Params& base : grid)
            for (const std::int64_t v : it->second) {
                Params p = base;
                p[std::string(name)] = v;
                next.push_back(std::move(p));
            }
        grid = std::move(next);
    }
    return grid;
}

}  // namespace detail

/// Expands the request into cells, validating every parameter set up front.
inline std::vector<Cell> expand_cells(const SweepRequest& req) {
    if (req.ns.empty()) throw domain_error("empty n range");
    std::vector<Cell> cells;
    for (const std::string& id : req.claim_ids) {
        const ClaimSpec& c = find_claim(id);
        for (const Params& p : detail::expand_params(c, req)) {
            validate_params(c, p);
            for (const std::int64_t n : req.ns) cells.push_back({&c, p, n});
        }
    }
    return cells;
}

/// Runs every cell, fanning out over req.jobs threads. Records come back
/// ordered by (claim, params, n) regardless of completion order.
inline std::vector<VerificationRecord> run_sweep(const SweepRequest& req) {
    const std::vector<Cell> cells = expand_cells(req);
    std::vector<VerificationRecord> records(cells.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            try {
                records[i] = verify_cell(*cells[i].claim, cells[i].params, cells[i].n);
            } catch (...) {
                std::lock_guard lock(error_mu);
                if (!error) error = std::current_exception();
                next = cells.size();
            }
        }
    };
    const unsigned jobs = std::max(1u, req.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);
    std::sort(records.begin(), records.end(),
              [](const VerificationRecord& x, const VerificationRecord& y) { return x.sort_key() < y.sort_key(); });
    return records;
}

struct SweepSummary {
    std::size_t total = 0, passed = 0, failed = 0, skipped = 0;
    std::optional<VerificationRecord> first_failure;

    int exit_code() const { return failed == 0 ? 0 : 1; }
};

inline SweepSummary summarize(const std::vector<VerificationRecord>& records) {
    SweepSummary s;
    for (const VerificationRecord& r : records) {
        ++s.total;
        if (r.skipped) ++s.skipped;
        else if (r.pass) ++s.passed;
        else {
            ++s.failed;
            if (!s.first_failure) s.first_failure = r;
        }
    }
    return s;
}

inline void write_summary(std::ostream& os, const SweepSummary& s) {
    os << "summary: total=" << s.total << " pass=" << s.passed << " fail=" << s.failed << " skipped=" << s.skipped
       << '\n';
    if (s.first_failure) os << "first failure: " << to_json_line(*s.first_failure) << '\n';
}

}  // namespace quadrep
