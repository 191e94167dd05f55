#pragma once

#include "qons/checks.hpp"
#include "qons/groups.hpp"

namespace qons {

/// Alphabet slots for the four generator families, truncated at index bound
/// K: Wm[k] (displayed W_{-k}), Wp[k] (W_{k+1}), G[k] (G_{k+1}), Gt[k]
/// (Gt_{k+1}) for 0 <= k <= K. Precedence: Gt family, then G, Wp, Wm, each
/// by increasing index.
struct CurrentGenerators {
    int K = 0;
    AlphabetPtr alphabet;

    int gt(int k) const { return check(k), k; }
    int g(int k) const { return check(k), K + 1 + k; }
    int wp(int k) const { return check(k), 2 * (K + 1) + k; }
    int wm(int k) const { return check(k), 3 * (K + 1) + k; }

    NcPoly Gt(int k) const { return NcPoly::generator(alphabet, gt(k)); }
    NcPoly G(int k) const { return NcPoly::generator(alphabet, g(k)); }
    NcPoly Wp(int k) const { return NcPoly::generator(alphabet, wp(k)); }
    NcPoly Wm(int k) const { return NcPoly::generator(alphabet, wm(k)); }

  private:
    void check(int k) const {
        if (k < 0 || k > K) throw ConfigError("generator index out of range for this bound");
    }
};

CurrentGenerators make_current_generators(int K);

/// Every defining relation whose generators fit within the bound. Instances
/// identical up to sign are emitted once; identically-zero instances are not
/// emitted. Labels follow "<family>.k<k>[.l<l>][.a|b]".
std::vector<NcPoly> current_relations(const CurrentGenerators& gens,
                                      std::vector<std::string>* labels);
/// Closed-form count of the instances emitted above.
size_t expected_relation_count(int K);

struct CurrentOptions {
    int index_bound = 3;
    int degree_bound = 4;
    int certificate_degree = 6;
    EngineKind engine = EngineKind::both;
    int jobs = 1;
    uint64_t seed = 0x51ab5eedULL;
    bool check_well_definedness = true;
};

struct CurrentContext {
    CurrentOptions opts;
    CurrentGenerators gens;
    PresentationPtr presentation;
    RewriteSystem rs;
    Morphism Omega, T0, T0inv, T1, T1inv, S;
    Scalar rho;  // -(q^2-q^-2)^2
    /// per morphism name, per relation: label and verdict (kept even when
    /// inconclusive; the suites report them)
    std::vector<std::tuple<std::string, std::string, Verdict>> well_definedness;

    GroupActionBinding binding() const { return {"A_q", S, T0, T0inv, T1, T1inv}; }
    ProveOptions prove_opts() const;
    ConventionInfo convention() const;
    /// W'_{-k} and W''_{-k}
    NcPoly primed_w(int k) const { return gens.Wp(k); }
    NcPoly doubleprimed_w(int k) const;
};

CurrentContext build_current(CurrentOptions opts = {});

enum class ElimFamily { Wminus, Wplus, G };

/// Closed-form expression for the eliminated generator (exact display form).
NcPoly eliminate_closed_form(const CurrentGenerators& gens, int k, ElimFamily which);
/// The same element produced by literally unrolling the elimination
/// recursion, one index at a time.
NcPoly eliminate_recursive(const CurrentGenerators& gens, int k, ElimFamily which);
/// Re-parseable structured rendering of the closed form.
std::string eliminate_closed_form_text(int k, ElimFamily which);

std::vector<Check> section3_checks(const CurrentContext& ctx);
std::vector<Check> elimination_checks(const CurrentContext& ctx);
std::vector<Check> section4_checks(const CurrentContext& ctx);
/// Stored well-definedness verdicts as checks ("A_q.wd.<morphism>.<relation>").
std::vector<Check> well_definedness_checks(const CurrentContext& ctx);

}  // namespace qons
