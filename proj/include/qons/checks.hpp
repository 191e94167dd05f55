#pragma once

#include <functional>

#include "qons/engine.hpp"

namespace qons {

enum class CheckStatus { PROVED, INCONCLUSIVE, PASS, FAIL, EVIDENCE, ERROR };

std::string to_string(CheckStatus s);

struct CheckOutcome {
    CheckStatus status = CheckStatus::ERROR;
    nlohmann::json witness;  // replayable evidence; empty object when none
    std::string witness_kind = "none";
    int cert_degree_used = -1;
    std::string note;
};

/// Catalogued verification item: stable identifier, the status the claim
/// mandates, and the computation.
struct Check {
    std::string id;
    CheckStatus expected = CheckStatus::PROVED;
    std::function<CheckOutcome()> run;
};

struct CheckResult {
    std::string id;
    CheckStatus status = CheckStatus::ERROR;
    CheckStatus expected = CheckStatus::PROVED;
    std::string witness_kind = "none";
    size_t witness_bytes = 0;
    double millis = 0;
    int cert_degree_used = -1;
    std::string note;
    nlohmann::json witness;

    bool as_expected() const { return status == expected; }
};

struct RunConfigInfo {
    std::string target;
    int degree_bound = 0;
    int certificate_degree = 0;
    int index_bound = 0;
    std::string engine;
    std::string check_filter;
    std::string output;
    int jobs = 1;
    uint64_t seed = 0;
};

struct ConventionInfo {
    std::string monomial_order = "degree-first, then precedence-lexicographic";
    std::string composition = "right-to-left (inner morphism applied first)";
    std::vector<std::string> precedence;                       // symbol names, largest first
    std::vector<std::pair<std::string, std::string>> display;  // name -> display form
};

struct VerificationReport {
    std::vector<CheckResult> results;

    bool all_expected() const;
    size_t count(CheckStatus s) const;
    nlohmann::json to_json(const RunConfigInfo& cfg, const ConventionInfo& conv,
                           bool zero_timings = false) const;
    std::string to_text(const RunConfigInfo& cfg, const ConventionInfo& conv) const;
};

/// Simple glob: '*' matches any run, '?' one character.
bool glob_match(const std::string& pattern, const std::string& text);

/// Runs the selected checks (filter may be empty = all). Execution order is
/// free, report order is catalog order regardless of worker count.
VerificationReport run_checks(const std::vector<Check>& checks, int jobs,
                              const std::string& filter = "");

// Helpers for building catalogs.
Check make_prove_check(std::string id, const RewriteSystem& rs, NcPoly lhs, NcPoly rhs,
                       ProveOptions opts, CheckStatus expected = CheckStatus::PROVED);
Check make_exact_check(std::string id, std::function<bool()> fn);
CheckOutcome outcome_from_verdict(const Verdict& v, const NcPoly& target, const RewriteSystem& rs);

}  // namespace qons
