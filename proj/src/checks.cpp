#include "qons/checks.hpp"

#include <chrono>
#include <sstream>

namespace qons {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::PROVED: return "PROVED";
        case CheckStatus::INCONCLUSIVE: return "INCONCLUSIVE";
        case CheckStatus::PASS: return "PASS";
        case CheckStatus::FAIL: return "FAIL";
        case CheckStatus::EVIDENCE: return "EVIDENCE";
        case CheckStatus::ERROR: return "ERROR";
    }
    return "?";
}

bool VerificationReport::all_expected() const {
    for (const auto& r : results)
        if (!r.as_expected()) return false;
    return true;
}

size_t VerificationReport::count(CheckStatus s) const {
    size_t n = 0;
    for (const auto& r : results) n += (r.status == s);
    return n;
}

nlohmann::json VerificationReport::to_json(const RunConfigInfo& cfg, const ConventionInfo& conv,
                                           bool zero_timings) const {
    nlohmann::json j;
    j["config"] = {{"target", cfg.target},
                   {"degree_bound", cfg.degree_bound},
                   {"certificate_degree", cfg.certificate_degree},
                   {"index_bound", cfg.index_bound},
                   {"engine", cfg.engine},
                   {"check_filter", cfg.check_filter},
                   {"output", cfg.output},
                   {"jobs", cfg.jobs},
                   {"seed", cfg.seed}};
    nlohmann::json display = nlohmann::json::object();
    for (const auto& [name, disp] : conv.display) display[name] = disp;
    j["convention"] = {{"monomial_order", conv.monomial_order},
                       {"composition", conv.composition},
                       {"precedence", conv.precedence},
                       {"generator_display", display}};
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& r : results) {
        checks.push_back({{"id", r.id},
                          {"status", to_string(r.status)},
                          {"expected", to_string(r.expected)},
                          {"witness_kind", r.witness_kind},
                          {"witness_bytes", r.witness_bytes},
                          {"millis", zero_timings ? 0.0 : r.millis}});
    }
    j["checks"] = std::move(checks);
    return j;
}

std::string VerificationReport::to_text(const RunConfigInfo& cfg, const ConventionInfo& conv) const {
    std::ostringstream out;
    out << "target=" << cfg.target << " degree_bound=" << cfg.degree_bound
        << " cert_degree=" << cfg.certificate_degree;
    if (cfg.index_bound) out << " index_bound=" << cfg.index_bound;
    out << " engine=" << cfg.engine << " jobs=" << cfg.jobs << " seed=" << cfg.seed << "\n";
    out << "order: " << conv.monomial_order << "; composition: " << conv.composition << "\n";
    if (!conv.precedence.empty()) {
        out << "precedence:";
        for (const auto& n : conv.precedence) out << " " << n;
        out << "\n";
    }
    if (!conv.display.empty()) {
        out << "generators:";
        for (const auto& [name, disp] : conv.display) out << " " << name << "=" << disp;
        out << "\n";
    }
    for (const auto& r : results) {
        out << (r.as_expected() ? "ok   " : "FAIL ") << r.id << ": " << to_string(r.status);
        if (r.expected != CheckStatus::PROVED || r.status != r.expected)
            out << " (expected " << to_string(r.expected) << ")";
        if (r.cert_degree_used >= 0) out << " deg=" << r.cert_degree_used;
        out << " [" << r.witness_kind << ", " << r.witness_bytes << " B, " << int(r.millis)
            << " ms]";
        if (!r.note.empty()) out << " — " << r.note;
        out << "\n";
    }
    out << results.size() << " checks; " << count(CheckStatus::PROVED) << " proved, "
        << count(CheckStatus::PASS) << " pass, " << count(CheckStatus::EVIDENCE) << " evidence, "
        << count(CheckStatus::INCONCLUSIVE) << " inconclusive, " << count(CheckStatus::FAIL)
        << " fail, " << count(CheckStatus::ERROR) << " error; "
        << (all_expected() ? "all expected" : "UNEXPECTED STATUSES PRESENT") << "\n";
    return out.str();
}

bool glob_match(const std::string& pattern, const std::string& text) {
    size_t p = 0, t = 0, star = std::string::npos, mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
            ++p, ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

VerificationReport run_checks(const std::vector<Check>& checks, int jobs,
                              const std::string& filter) {
    std::vector<const Check*> selected;
    for (const auto& c : checks)
        if (filter.empty() || glob_match(filter, c.id)) selected.push_back(&c);
    VerificationReport report;
    report.results.resize(selected.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs) if (jobs > 1)
#endif
    for (long i = 0; i < long(selected.size()); ++i) {
        const Check& c = *selected[size_t(i)];
        CheckResult r;
        r.id = c.id;
        r.expected = c.expected;
        auto t0 = std::chrono::steady_clock::now();
        try {
            CheckOutcome o = c.run();
            r.status = o.status;
            r.witness = std::move(o.witness);
            r.witness_kind = std::move(o.witness_kind);
            r.cert_degree_used = o.cert_degree_used;
            r.note = std::move(o.note);
        } catch (const std::exception& e) {
            r.status = CheckStatus::ERROR;
            r.note = e.what();
        }
        auto t1 = std::chrono::steady_clock::now();
        r.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
        r.witness_bytes = r.witness.is_null() ? 0 : r.witness.dump().size();
        report.results[size_t(i)] = std::move(r);
    }
    return report;
}

CheckOutcome outcome_from_verdict(const Verdict& v, const NcPoly& target, const RewriteSystem& rs) {
    CheckOutcome o;
    o.status = v.status == Status::PROVED ? CheckStatus::PROVED : CheckStatus::INCONCLUSIVE;
    o.witness = witness_to_json(v, target, rs);
    o.witness_kind = v.witness_kind;
    o.cert_degree_used = v.cert_degree_used;
    o.note = v.note;
    return o;
}

Check make_prove_check(std::string id, const RewriteSystem& rs, NcPoly lhs, NcPoly rhs,
                       ProveOptions opts, CheckStatus expected) {
    return Check{std::move(id), expected,
                 [&rs, lhs = std::move(lhs), rhs = std::move(rhs), opts]() {
                     Verdict v = prove_equal(rs, lhs, rhs, opts);
                     return outcome_from_verdict(v, lhs - rhs, rs);
                 }};
}

Check make_exact_check(std::string id, std::function<bool()> fn) {
    return Check{std::move(id), CheckStatus::PASS, [fn = std::move(fn)]() {
                     CheckOutcome o;
                     o.status = fn() ? CheckStatus::PASS : CheckStatus::FAIL;
                     o.witness_kind = "exact";
                     return o;
                 }};
}

}  // namespace qons
