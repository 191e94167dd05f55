#include "qons/engine.hpp"
#include "completion_impl.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qons {
namespace detail {

bool completion_trace() {
    static const bool on = std::getenv("QONS_COMPLETION_TRACE") != nullptr;
    return on;
}

void enumerate_ambiguities(const std::vector<Rule>& rules, int n, int degree_bound,
                           std::vector<Ambiguity>& out) {
    const Word& wn = rules[size_t(n)].lead;
    const size_t ln = wn.degree();
    for (int m = 0; m <= n; ++m) {
        if (!rules[size_t(m)].active) continue;
        const Word& wm = rules[size_t(m)].lead;
        const size_t lm = wm.degree();
        // overlaps (n, m): suffix of wn = prefix of wm
        for (size_t s = 1; s < ln && s < lm; ++s) {
            size_t deg = ln + lm - s;
            if (deg > size_t(degree_bound)) continue;
            if (wn.subword(ln - s, s) == wm.prefix(s)) out.push_back({n, m, false, s, deg});
        }
        if (m == n) continue;
        // overlaps (m, n)
        for (size_t s = 1; s < lm && s < ln; ++s) {
            size_t deg = lm + ln - s;
            if (deg > size_t(degree_bound)) continue;
            if (wm.subword(lm - s, s) == wn.prefix(s)) out.push_back({m, n, false, s, deg});
        }
        // inclusions
        if (lm < ln && ln <= size_t(degree_bound)) {
            for (size_t pos = wn.find(wm); pos != Word::npos; pos = wn.find(wm, pos + 1))
                out.push_back({n, m, true, pos, ln});
        }
        if (ln < lm && lm <= size_t(degree_bound)) {
            for (size_t pos = wm.find(wn); pos != Word::npos; pos = wm.find(wn, pos + 1))
                out.push_back({m, n, true, pos, lm});
        }
    }
}

namespace {
NcPoly rule_poly(const AlphabetPtr& a, const Rule& r) {
    NcPoly p = NcPoly::monomial(a, r.lead, Scalar::one());
    p -= r.tail;
    return p;
}
}  // namespace

std::optional<Candidate> resolve_ambiguity(const RewriteSystem& frozen, const Ambiguity& amb) {
    const AlphabetPtr& a = frozen.source->alphabet();
    const Rule& ri = frozen.rules[size_t(amb.i)];
    const Rule& rj = frozen.rules[size_t(amb.j)];
    if (!ri.active || !rj.active) return std::nullopt;  // superseded meanwhile
    NcPoly g(a);
    Certificate cert_in_rules;  // witness for g, over rule polynomials
    if (!amb.inclusion) {
        const size_t s = amb.s_or_pos;
        const Word pre = ri.lead.prefix(ri.lead.degree() - s);
        const Word post = rj.lead.suffix_from(s);
        g.add_sandwich(Scalar::one(), Word(), ri.tail, post);
        g.add_sandwich(-Scalar::one(), pre, rj.tail, Word());
        cert_in_rules.terms.push_back({Scalar::one(), pre, amb.j, Word(), true});
        cert_in_rules.terms.push_back({-Scalar::one(), Word(), amb.i, post, true});
    } else {
        const size_t pos = amb.s_or_pos;
        const Word pre = ri.lead.prefix(pos);
        const Word post = ri.lead.suffix_from(pos + rj.lead.degree());
        g = ri.tail;
        g.add_sandwich(-Scalar::one(), pre, rj.tail, post);
        cert_in_rules.terms.push_back({Scalar::one(), pre, amb.j, post, true});
        cert_in_rules.terms.push_back({-Scalar::one(), Word(), amb.i, Word(), true});
    }
    std::vector<TraceStep> trace;
    NcPoly nf = reduce(frozen, std::move(g), &trace);
    if (nf.is_zero()) return std::nullopt;
    Certificate cert = std::move(cert_in_rules);
    for (const auto& step : trace)
        cert.terms.push_back({-step.coeff, step.left, step.rule, step.right, true});
    cert.compress();
    return Candidate{std::move(nf), std::move(cert)};
}

RewriteSystem initial_rules(PresentationPtr p, int degree_bound) {
    if (size_t(degree_bound) < p->max_relation_degree())
        throw ConfigError("degree bound is below the maximal relation degree");
    RewriteSystem rs;
    rs.source = std::move(p);
    rs.completed_through = degree_bound;
    rs.rebuild_matcher();
    for (size_t i = 0; i < rs.source->size(); ++i) {
        std::vector<TraceStep> trace;
        NcPoly nf = reduce(rs, rs.source->relation(i), &trace);
        if (nf.is_zero()) {
            rs.log.dropped_relations.push_back(rs.source->label(i));
            continue;
        }
        Certificate cert;
        cert.terms.push_back({Scalar::one(), Word(), int(i), Word(), false});
        for (const auto& step : trace)
            cert.terms.push_back({-step.coeff, step.left, step.rule, step.right, true});
        admit_rule(rs, std::move(nf), std::move(cert));
    }
    return rs;
}

void admit_rule(RewriteSystem& rs, NcPoly nf, Certificate cert) {
    const Scalar inv_lc = nf.leading_coeff().inverse();
    nf = nf * inv_lc;
    for (auto& t : cert.terms) t.coeff = t.coeff * inv_lc;
    cert.compress();
    Word lead = nf.leading_word();
    NcPoly tail = NcPoly::monomial(rs.source->alphabet(), lead, Scalar::one()) - nf;
    rs.rules.push_back({std::move(lead), std::move(tail), std::move(cert)});
    rs.rebuild_matcher();
}

bool verify_construction_log(const RewriteSystem& rs) {
    for (size_t i = 0; i < rs.rules.size(); ++i) {
        const Rule& r = rs.rules[i];
        for (const auto& t : r.cert.terms)
            if (t.is_rule && size_t(t.index) >= i) return false;  // must be grounded
        if (!(r.cert.evaluate(*rs.source, rs.rules) == r.poly(rs.source->alphabet())))
            return false;
    }
    return true;
}

bool admit_candidate(RewriteSystem& rs, Candidate cand) {
    std::vector<TraceStep> trace;
    NcPoly nf = reduce(rs, std::move(cand.nf), &trace);
    if (nf.is_zero()) return false;
    Certificate cert = std::move(cand.cert);
    for (const auto& step : trace)
        cert.terms.push_back({-step.coeff, step.left, step.rule, step.right, true});
    admit_rule(rs, std::move(nf), std::move(cert));
    rs.log.rules_from_ambiguities++;
    return true;
}

size_t admit_and_simplify(RewriteSystem& rs, Candidate cand) {
    size_t before = rs.rules.size();
    if (!admit_candidate(rs, std::move(cand))) return 0;
    // retire rules whose lead just became reducible and re-derive their
    // content against the current system
    for (size_t probe = before; probe < rs.rules.size(); ++probe) {
        const Word lead = rs.rules[probe].lead;
        for (size_t i = 0; i < probe; ++i) {
            Rule& old = rs.rules[i];
            if (!old.active || old.lead.find(lead) == Word::npos) continue;
            old.active = false;
            Candidate requeue;
            requeue.nf = old.poly(rs.source->alphabet());
            requeue.cert.terms.push_back({Scalar::one(), Word(), int(i), Word(), true});
            rs.rebuild_matcher();
            admit_candidate(rs, std::move(requeue));
        }
    }
    rs.rebuild_matcher();
    return rs.rules.size() - before;
}

}  // namespace detail

RewriteSystem complete(PresentationPtr p, int degree_bound, int jobs) {
    using namespace detail;
    RewriteSystem rs = initial_rules(std::move(p), degree_bound);

    std::map<size_t, std::vector<Ambiguity>> pending;  // keyed by overlap-word degree
    std::vector<Ambiguity> buf;
    for (int n = 0; n < int(rs.rules.size()); ++n) {
        buf.clear();
        enumerate_ambiguities(rs.rules, n, degree_bound, buf);
        for (const auto& amb : buf) pending[amb.word_degree].push_back(amb);
    }

    while (!pending.empty()) {
        auto it = pending.begin();
        std::vector<Ambiguity> batch = std::move(it->second);
        size_t batch_degree = it->first;
        pending.erase(it);
        rs.log.ambiguities_processed += batch.size();
        auto wave_start = std::chrono::steady_clock::now();

        std::vector<std::optional<Candidate>> results(batch.size());
        const RewriteSystem& frozen = rs;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs) if (jobs > 1)
#endif
        for (long k = 0; k < long(batch.size()); ++k)
            results[size_t(k)] = resolve_ambiguity(frozen, batch[size_t(k)]);

        // deterministic merge: admit by ascending leading word
        std::vector<size_t> order;
        for (size_t k = 0; k < results.size(); ++k)
            if (results[k]) order.push_back(k);
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return mono_less(results[a]->nf.leading_word(), results[b]->nf.leading_word());
        });
        for (size_t k : order) {
            size_t first_new = rs.rules.size();
            if (admit_and_simplify(rs, std::move(*results[k])) == 0) continue;
            for (size_t n = first_new; n < rs.rules.size(); ++n) {
                buf.clear();
                enumerate_ambiguities(rs.rules, int(n), degree_bound, buf);
                for (const auto& amb : buf) pending[amb.word_degree].push_back(amb);
            }
        }
        if (completion_trace()) {
            size_t active = 0;
            for (const auto& r : rs.rules) active += r.active;
            std::cerr << "[complete] deg=" << batch_degree << " batch=" << batch.size()
                      << " rules=" << rs.rules.size() << " active=" << active << " wave="
                      << std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                       wave_start)
                             .count()
                      << "s\n";
        }
    }
    return rs;
}

}  // namespace qons
