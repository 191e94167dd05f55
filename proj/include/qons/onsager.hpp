#pragma once

#include <array>

#include "qons/checks.hpp"
#include "qons/groups.hpp"

namespace qons {

struct OnsagerOptions {
    int degree_bound = 8;
    int certificate_degree = 8;
    EngineKind engine = EngineKind::both;
    int jobs = 1;
    uint64_t seed = 0x51ab5eedULL;
};

/// The two-generator algebra with the cubic q-commutation relations, its
/// completed rewrite system, the named (anti)automorphisms, and the element
/// C built from the generators.
struct OnsagerContext {
    OnsagerOptions opts;
    AlphabetPtr alphabet;
    PresentationPtr presentation;
    RewriteSystem rs;
    Morphism S, T0, T0inv, T1, T1inv;
    NcPoly A, B, C;
    std::vector<std::pair<std::string, Verdict>> well_definedness;  // "<morphism>.<relation>"

    GroupActionBinding binding() const { return {"O_q", S, T0, T0inv, T1, T1inv}; }
    ProveOptions prove_opts() const;
    ConventionInfo convention() const;
};

/// Builds the context and proves every named morphism well defined; any
/// unproven relation image aborts the build.
OnsagerContext build_onsager(OnsagerOptions opts = {});

/// X^3 Y - [3] X^2 Y X + [3] X Y X^2 - Y X^3 - (q^2-q^-2)^2 (YX - XY)
NcPoly qdg_poly(const NcPoly& X, const NcPoly& Y);

std::vector<Check> section2_checks(const OnsagerContext& ctx);
std::vector<Check> note_checks(const OnsagerContext& ctx);
/// Verdict for the relation instance at (B, C) that genuinely fails; must
/// come back INCONCLUSIVE with a nonzero normal form, never PROVED.
Verdict check_note_counterexample(const OnsagerContext& ctx);

enum class GenerationStatus { checked_trivially, assumed };

struct FlipCondition {
    bool determined = false;
    std::string note;
    std::vector<Verdict> well_defined;
    std::vector<Verdict> prescribed;
    std::vector<Verdict> involution;
    bool proved() const;
};

struct FlippingTripleReport {
    std::array<FlipCondition, 3> conditions;
    GenerationStatus generation = GenerationStatus::assumed;
    /// Declared only when every condition's map is determined, well defined,
    /// and sends the triple exactly as prescribed.
    bool flipping_at_bound() const;
};

/// Checks the three cyclic antiautomorphism conditions for a candidate
/// triple whose maps are determined on generators (each moved or fixed
/// element that is a scalar multiple of a generator pins that generator's
/// image; remaining prescriptions become quotient checks).
FlippingTripleReport check_flipping_triple(const RewriteSystem& rs,
                                           const std::array<NcPoly, 3>& triple,
                                           const ProveOptions& opts);

std::vector<Check> flipping_checks(const OnsagerContext& ctx);

/// Word-level checks for the free product and its second presentation.
std::vector<Check> word_group_checks(uint64_t seed);
/// Action-level checks: realize respects products up to quotient equality,
/// and distinct short words act distinctly on the generator A (evidence).
std::vector<Check> action_group_checks(const OnsagerContext& ctx);

}  // namespace qons
