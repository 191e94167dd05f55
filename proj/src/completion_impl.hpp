#pragma once

#include "qons/engine.hpp"

namespace qons::detail {

// Unresolved critical pair. Overlap: a proper suffix of lead(i) equals a
// proper prefix of lead(j) (shared length s, word = lead_i + lead_j[s:]).
// Inclusion: lead(j) occurs inside lead(i) at pos (word = lead_i).
struct Ambiguity {
    int i = 0;
    int j = 0;
    bool inclusion = false;
    size_t s_or_pos = 0;
    size_t word_degree = 0;
};

struct Candidate {
    NcPoly nf;         // nonzero remainder of the ambiguity difference
    Certificate cert;  // witness for nf over the source relations
};

// Ambiguities involving rule n against rules 0..n (both orders), bounded.
void enumerate_ambiguities(const std::vector<Rule>& rules, int n, int degree_bound,
                           std::vector<Ambiguity>& out);

// Resolve against a frozen system: build the two one-step rewrites of the
// ambiguity word, subtract, reduce fully. Empty result when it resolves to 0.
std::optional<Candidate> resolve_ambiguity(const RewriteSystem& frozen, const Ambiguity& amb);

// Shared front half of completion: turn relations into initial rules,
// dropping those that reduce to zero against earlier ones.
RewriteSystem initial_rules(PresentationPtr p, int degree_bound);

// Monicizes and installs a new rule after verifying its witness.
void admit_rule(RewriteSystem& rs, NcPoly nf, Certificate cert);

// Admit a candidate (re-reducing against the live system first); returns
// true if it became a rule.
bool admit_candidate(RewriteSystem& rs, Candidate cand);

// Admit, then retire rules with newly reducible leads and re-derive their
// content. Returns the number of rules appended.
size_t admit_and_simplify(RewriteSystem& rs, Candidate cand);

}  // namespace qons::detail
