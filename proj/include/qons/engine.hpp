#pragma once

#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "qons/freealg.hpp"

#include <json.hpp>

namespace qons {

/// Finitely presented algebra: alphabet, relation polynomials (each read as
/// relation = 0, stored monic), and the deg-lex monomial order implied by
/// the alphabet precedence.
class Presentation {
  public:
    Presentation(AlphabetPtr alphabet, std::vector<NcPoly> relations,
                 std::vector<std::string> labels = {});

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::vector<NcPoly>& relations() const { return relations_; }
    const NcPoly& relation(size_t i) const { return relations_.at(i); }
    const std::string& label(size_t i) const { return labels_.at(i); }
    size_t size() const { return relations_.size(); }
    size_t max_relation_degree() const;

  private:
    AlphabetPtr alphabet_;
    std::vector<NcPoly> relations_;
    std::vector<std::string> labels_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

struct Rule;

/// One summand of an ideal-membership witness:
/// coeff * left * (relation or rule polynomial) * right.
struct CertTerm {
    Scalar coeff;
    Word left;
    int index = 0;
    Word right;
    bool is_rule = false;  // false: source relation, true: derived rule
};

/// Ideal-membership witness. Terms may reference source relations directly
/// or derived rules; each rule carries its own witness over strictly earlier
/// rules and relations, so the whole structure replays by induction without
/// ever materializing the (potentially huge) flat expansion.
struct Certificate {
    std::vector<CertTerm> terms;

    NcPoly evaluate(const Presentation& p, const std::vector<Rule>& rules) const;
    size_t max_term_degree(const Presentation& p, const std::vector<Rule>& rules) const;
    void compress();
    bool empty() const { return terms.empty(); }
    bool relation_only() const;
};

/// Rewrite rule lead -> tail; the rule polynomial lead - tail carries a
/// witness over the source relations and earlier rules (its construction log).
/// Rules whose lead later becomes reducible are deactivated for matching but
/// stay in the list so certificates referencing them remain grounded; their
/// content is re-derived as a fresh rule at that point.
struct Rule {
    Word lead;
    NcPoly tail;
    Certificate cert;
    bool active = true;
    NcPoly poly(const AlphabetPtr& a) const;  // lead - tail
};

/// Verifies the top layer of a certificate against a target. Rule layers are
/// verified once at admission; the serialized witness re-verifies all layers.
bool replay(const Presentation& p, const std::vector<Rule>& rules, const Certificate& cert,
            const NcPoly& target);

/// Multi-pattern factor matcher over rule leads (Aho-Corasick).
class Matcher {
  public:
    Matcher() = default;
    explicit Matcher(const std::vector<Rule>& rules, int alphabet_size);
    /// best (rule, position) in w, minimal by (rule index, position); {-1,0} if none
    std::pair<int, size_t> first_match(const Word& w) const;
    void all_matches(const Word& w, std::vector<std::pair<int, size_t>>& out) const;
    bool matches_anywhere(const Word& w) const;

  private:
    struct Node {
        std::vector<int> next;
        int fail = 0;
        int out_rule = -1;       // smallest rule index ending here
        int out_len = 0;
        int any_out_rule = -1;   // min over the fail chain
        int any_out_len = 0;
    };
    std::vector<Node> nodes_;
    int alpha_ = 0;
};

struct CompletionLog {
    std::vector<std::string> dropped_relations;
    size_t ambiguities_processed = 0;
    size_t rules_from_ambiguities = 0;
};

struct RewriteSystem {
    PresentationPtr source;
    std::vector<Rule> rules;
    int completed_through = 0;
    Matcher matcher;
    CompletionLog log;

    void rebuild_matcher();
};

/// Degree-bounded critical-pair completion. Ambiguities are resolved in
/// waves of increasing overlap-word degree; within a wave the resolutions
/// are independent and new rules are admitted by ascending leading word,
/// so the result does not depend on the number of workers.
RewriteSystem complete(PresentationPtr p, int degree_bound, int jobs = 1);

/// Plain sequential implementation of the same completion contract, kept as
/// the reference the parallel kernel is tested against.
RewriteSystem complete_reference(PresentationPtr p, int degree_bound);

/// Replays every rule's construction witness against the relations and
/// earlier rules (the well-founded layer check used by tests).
bool verify_construction_log(const RewriteSystem& rs);

struct TraceStep {
    Scalar coeff;
    Word left;
    int rule = 0;
    Word right;
};

/// Normal form under the rule set. Deterministic strategy: largest reducible
/// monomial, smallest rule index, leftmost occurrence.
NcPoly reduce(const RewriteSystem& rs, NcPoly x, std::vector<TraceStep>* trace = nullptr);
/// Same result set reached through randomized term/rule/position choices.
NcPoly reduce_randomized(const RewriteSystem& rs, NcPoly x, std::mt19937_64& rng);

/// Reduction trace as a certificate (one rule-reference term per step).
Certificate trace_certificate(const std::vector<TraceStep>& trace);

enum class Status { PROVED, INCONCLUSIVE };

struct Verdict {
    Status status = Status::INCONCLUSIVE;
    std::string witness_kind = "none";  // syntactic | reduction | certificate | none
    Certificate certificate;            // PROVED only; replayable against the target
    NcPoly normal_form;                 // residue shown for INCONCLUSIVE
    int cert_degree_used = -1;
    std::string note;
};

enum class EngineKind { rewrite, certificate, both };

struct ProveOptions {
    int certificate_degree = 8;
    EngineKind engine = EngineKind::both;
    uint64_t seed = 0x51ab5eedULL;
    int max_symbol_sets = 6;          // symbol-restriction growth levels to try
    size_t max_columns = 4000000;     // linear-solve size guard
    bool minimal_degree_scan = true;  // probe ascending degrees to report the least that works
};

/// Three-valued equality in the quotient: PROVED verdicts carry witnesses
/// that replay exactly; INCONCLUSIVE carries the residual normal form and
/// proves nothing.
Verdict prove_equal(const RewriteSystem& rs, const NcPoly& x, const NcPoly& y,
                    const ProveOptions& opts);

std::vector<Verdict> check_morphism_well_defined(const RewriteSystem& rs, const Morphism& m,
                                                 const ProveOptions& opts);

/// Words of the given degree containing no rule lead as a factor, largest first.
std::vector<Word> normal_form_basis(const RewriteSystem& rs, int degree);

/// Certificate search: solve for cofactors of u * relation * v products of
/// total degree <= degree over a restricted symbol set, modular filter first,
/// then an exact solve on the candidate support. Nullopt when no certificate
/// was found at this bound (which proves nothing).
std::optional<Certificate> search_certificate(const Presentation& p, const NcPoly& target,
                                              int degree, const ProveOptions& opts,
                                              std::string* note = nullptr);

// Witness serialization: a JSON tree holding the top-level terms plus the
// transitive closure of referenced rules with their construction witnesses,
// sufficient for independent layer-by-layer replay.
nlohmann::json witness_to_json(const Verdict& v, const NcPoly& target, const RewriteSystem& rs);
/// Re-parses the serialized witness, re-verifies every rule layer against
/// relations and earlier rules, then replays the top layer against the
/// recorded target. Everything is recomputed in the free algebra.
bool replay_witness_json(const nlohmann::json& j, const Presentation& p);

}  // namespace qons
