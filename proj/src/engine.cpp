#include "qons/engine.hpp"

#include <algorithm>
#include <set>

namespace qons {

Presentation::Presentation(AlphabetPtr alphabet, std::vector<NcPoly> relations,
                           std::vector<std::string> labels)
    : alphabet_(std::move(alphabet)), relations_(std::move(relations)), labels_(std::move(labels)) {
    for (size_t i = 0; i < relations_.size(); ++i) {
        NcPoly& r = relations_[i];
        if (r.is_zero()) throw ConfigError("zero relation in presentation");
        if (r.alphabet() && !(*r.alphabet() == *alphabet_)) throw AlphabetMismatch();
        const Scalar lc = r.leading_coeff();
        if (!lc.is_one()) r = r * lc.inverse();
    }
    if (labels_.empty()) {
        labels_.reserve(relations_.size());
        for (size_t i = 0; i < relations_.size(); ++i) labels_.push_back("r" + std::to_string(i));
    }
    if (labels_.size() != relations_.size())
        throw ConfigError("relation labels do not match relation count");
}

size_t Presentation::max_relation_degree() const {
    size_t d = 0;
    for (const auto& r : relations_) d = std::max(d, r.degree());
    return d;
}

NcPoly Rule::poly(const AlphabetPtr& a) const {
    NcPoly p = NcPoly::monomial(a, lead, Scalar::one());
    p -= tail;
    return p;
}

NcPoly Certificate::evaluate(const Presentation& p, const std::vector<Rule>& rules) const {
    NcPoly acc(p.alphabet());
    for (const auto& t : terms) {
        if (t.is_rule) {
            const Rule& r = rules.at(size_t(t.index));
            acc.add_term(t.left * r.lead * t.right, t.coeff);
            acc.add_sandwich(-t.coeff, t.left, r.tail, t.right);
        } else {
            acc.add_sandwich(t.coeff, t.left, p.relation(size_t(t.index)), t.right);
        }
    }
    return acc;
}

size_t Certificate::max_term_degree(const Presentation& p, const std::vector<Rule>& rules) const {
    size_t d = 0;
    for (const auto& t : terms) {
        size_t mid = t.is_rule ? rules.at(size_t(t.index)).lead.degree()
                               : p.relation(size_t(t.index)).degree();
        d = std::max(d, t.left.degree() + mid + t.right.degree());
    }
    return d;
}

void Certificate::compress() {
    std::map<std::tuple<bool, int, Word, Word>, Scalar> acc;
    for (auto& t : terms) {
        auto key = std::make_tuple(t.is_rule, t.index, t.left, t.right);
        auto [it, fresh] = acc.emplace(key, t.coeff);
        if (!fresh) it->second += t.coeff;
    }
    terms.clear();
    for (auto& [key, c] : acc) {
        if (c.is_zero()) continue;
        terms.push_back({c, std::get<2>(key), std::get<1>(key), std::get<3>(key), std::get<0>(key)});
    }
}

bool Certificate::relation_only() const {
    for (const auto& t : terms)
        if (t.is_rule) return false;
    return true;
}

bool replay(const Presentation& p, const std::vector<Rule>& rules, const Certificate& cert,
            const NcPoly& target) {
    return cert.evaluate(p, rules) == target;
}

Matcher::Matcher(const std::vector<Rule>& rules, int alphabet_size) : alpha_(alphabet_size) {
    nodes_.push_back(Node{std::vector<int>(size_t(alpha_), 0), 0, -1, 0, -1, 0});
    for (size_t r = 0; r < rules.size(); ++r) {
        if (!rules[r].active) continue;
        const Word& w = rules[r].lead;
        int cur = 0;
        for (size_t i = 0; i < w.degree(); ++i) {
            int c = w.letter(i);
            if (nodes_[size_t(cur)].next[size_t(c)] == 0) {
                nodes_.push_back(Node{std::vector<int>(size_t(alpha_), 0), 0, -1, 0, -1, 0});
                nodes_[size_t(cur)].next[size_t(c)] = int(nodes_.size()) - 1;
            }
            cur = nodes_[size_t(cur)].next[size_t(c)];
        }
        if (nodes_[size_t(cur)].out_rule < 0) {
            nodes_[size_t(cur)].out_rule = int(r);
            nodes_[size_t(cur)].out_len = int(w.degree());
        }
    }
    // BFS fail links; goto-automaton form
    std::vector<int> order;
    for (int c = 0; c < alpha_; ++c) {
        int v = nodes_[0].next[size_t(c)];
        if (v) {
            nodes_[size_t(v)].fail = 0;
            order.push_back(v);
        }
    }
    for (size_t qi = 0; qi < order.size(); ++qi) {
        int u = order[qi];
        {
            Node& mu = nodes_[size_t(u)];
            const Node& nf = nodes_[size_t(mu.fail)];
            mu.any_out_rule = mu.out_rule;
            mu.any_out_len = mu.out_len;
            if (nf.any_out_rule >= 0 &&
                (mu.any_out_rule < 0 || nf.any_out_rule < mu.any_out_rule)) {
                mu.any_out_rule = nf.any_out_rule;
                mu.any_out_len = nf.any_out_len;
            }
        }
        for (int c = 0; c < alpha_; ++c) {
            int v = nodes_[size_t(u)].next[size_t(c)];
            int fnext = nodes_[size_t(nodes_[size_t(u)].fail)].next[size_t(c)];
            if (v) {
                nodes_[size_t(v)].fail = fnext;
                order.push_back(v);
            } else {
                nodes_[size_t(u)].next[size_t(c)] = fnext;
            }
        }
    }
}

std::pair<int, size_t> Matcher::first_match(const Word& w) const {
    if (nodes_.empty()) return {-1, 0};
    int best_rule = -1;
    size_t best_pos = 0;
    int cur = 0;
    for (size_t i = 0; i < w.degree(); ++i) {
        cur = nodes_[size_t(cur)].next[size_t(w.letter(i))];
        const Node& n = nodes_[size_t(cur)];
        if (n.any_out_rule >= 0) {
            size_t pos = i + 1 - size_t(n.any_out_len);
            if (best_rule < 0 || n.any_out_rule < best_rule ||
                (n.any_out_rule == best_rule && pos < best_pos)) {
                best_rule = n.any_out_rule;
                best_pos = pos;
            }
        }
    }
    return {best_rule, best_pos};
}

void Matcher::all_matches(const Word& w, std::vector<std::pair<int, size_t>>& out) const {
    if (nodes_.empty()) return;
    int cur = 0;
    for (size_t i = 0; i < w.degree(); ++i) {
        cur = nodes_[size_t(cur)].next[size_t(w.letter(i))];
        for (int v = cur; v != 0; v = nodes_[size_t(v)].fail) {
            const Node& n = nodes_[size_t(v)];
            if (n.any_out_rule < 0) break;  // nothing further down the chain
            if (n.out_rule >= 0) out.emplace_back(n.out_rule, i + 1 - size_t(n.out_len));
        }
    }
}

bool Matcher::matches_anywhere(const Word& w) const {
    if (nodes_.empty()) return false;
    int cur = 0;
    for (size_t i = 0; i < w.degree(); ++i) {
        cur = nodes_[size_t(cur)].next[size_t(w.letter(i))];
        if (nodes_[size_t(cur)].any_out_rule >= 0) return true;
    }
    return false;
}

void RewriteSystem::rebuild_matcher() {
    matcher = Matcher(rules, source->alphabet()->size());
}

namespace {

void apply_rule_at(NcPoly& x, const RewriteSystem& rs, const Word& w, int rule, size_t pos,
                   std::vector<TraceStep>* trace) {
    const Rule& r = rs.rules[size_t(rule)];
    const Scalar c = x.coeff(w);
    const Word left = w.prefix(pos);
    const Word right = w.suffix_from(pos + r.lead.degree());
    x.add_term(w, -c);
    x.add_sandwich(c, left, r.tail, right);
    if (trace) trace->push_back({c, left, rule, right});
}

}  // namespace

NcPoly reduce(const RewriteSystem& rs, NcPoly x, std::vector<TraceStep>* trace) {
    if (rs.rules.empty()) return x;
    std::set<Word> normal;  // words already known irreducible
    for (;;) {
        const Word* target = nullptr;
        int rule = -1;
        size_t pos = 0;
        for (const auto& [w, c] : x.terms()) {
            if (normal.count(w)) continue;
            auto [r, p] = rs.matcher.first_match(w);
            if (r < 0) {
                normal.insert(w);
                continue;
            }
            target = &w;
            rule = r;
            pos = p;
            break;
        }
        if (!target) return x;
        Word w = *target;  // copy before mutation
        apply_rule_at(x, rs, w, rule, pos, trace);
    }
}

NcPoly reduce_randomized(const RewriteSystem& rs, NcPoly x, std::mt19937_64& rng) {
    if (rs.rules.empty()) return x;
    std::vector<std::pair<int, size_t>> matches;
    for (;;) {
        std::vector<Word> reducible;
        for (const auto& [w, c] : x.terms()) {
            if (rs.matcher.matches_anywhere(w)) reducible.push_back(w);
        }
        if (reducible.empty()) return x;
        const Word w = reducible[rng() % reducible.size()];
        matches.clear();
        rs.matcher.all_matches(w, matches);
        auto [rule, pos] = matches[rng() % matches.size()];
        apply_rule_at(x, rs, w, rule, pos, nullptr);
    }
}

Certificate trace_certificate(const std::vector<TraceStep>& trace) {
    Certificate cert;
    cert.terms.reserve(trace.size());
    for (const auto& step : trace)
        cert.terms.push_back({step.coeff, step.left, step.rule, step.right, true});
    cert.compress();
    return cert;
}

std::vector<Word> normal_form_basis(const RewriteSystem& rs, int degree) {
    if (degree > rs.completed_through)
        throw ConfigError("basis degree exceeds the completed bound");
    const int n = rs.source->alphabet()->size();
    double count = 1;
    for (int i = 0; i < degree; ++i) count *= n;
    if (count > 2e7) throw ConfigError("basis enumeration too large");
    std::vector<Word> out;
    std::basic_string<unsigned char> cur(size_t(degree), 0);
    for (;;) {
        Word w{std::basic_string<unsigned char>(cur)};
        if (!rs.matcher.matches_anywhere(w)) out.push_back(w);
        int i = degree - 1;
        while (i >= 0 && cur[size_t(i)] == n - 1) cur[size_t(i--)] = 0;
        if (i < 0) break;
        ++cur[size_t(i)];
    }
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) { return mono_less(b, a); });
    return out;
}

Verdict prove_equal(const RewriteSystem& rs, const NcPoly& x, const NcPoly& y,
                    const ProveOptions& opts) {
    NcPoly diff = x - y;
    Verdict v;
    if (diff.is_zero()) {
        v.status = Status::PROVED;
        v.witness_kind = "syntactic";
        v.normal_form = NcPoly(x.alphabet());
        return v;
    }
    std::vector<TraceStep> trace;
    NcPoly nf = diff;
    Certificate base;
    if (opts.engine != EngineKind::certificate) {
        nf = reduce(rs, std::move(nf), &trace);
        base = trace_certificate(trace);
        if (nf.is_zero()) {
            v.status = Status::PROVED;
            v.witness_kind = "reduction";
            v.certificate = std::move(base);
            v.cert_degree_used = int(v.certificate.max_term_degree(*rs.source, rs.rules));
            v.normal_form = NcPoly(x.alphabet());
            if (!replay(*rs.source, rs.rules, v.certificate, diff))
                throw Error("internal: reduction witness failed to replay");
            return v;
        }
    }
    if (opts.engine != EngineKind::rewrite) {
        auto found = search_certificate(*rs.source, nf, opts.certificate_degree, opts);
        if (found) {
            v.status = Status::PROVED;
            v.witness_kind = "certificate";
            v.cert_degree_used = int(found->max_term_degree(*rs.source, rs.rules));
            v.certificate = std::move(base);
            for (auto& t : found->terms) v.certificate.terms.push_back(std::move(t));
            v.certificate.compress();
            v.normal_form = NcPoly(x.alphabet());
            if (!replay(*rs.source, rs.rules, v.certificate, diff))
                throw Error("internal: certificate failed to replay");
            return v;
        }
    }
    v.status = Status::INCONCLUSIVE;
    v.witness_kind = "none";
    v.normal_form = std::move(nf);
    v.note = "no proof found at bound";
    return v;
}

std::vector<Verdict> check_morphism_well_defined(const RewriteSystem& rs, const Morphism& m,
                                                 const ProveOptions& opts) {
    std::vector<Verdict> out;
    out.reserve(rs.source->size());
    const NcPoly zero(rs.source->alphabet());
    for (size_t i = 0; i < rs.source->size(); ++i) {
        out.push_back(prove_equal(rs, apply(m, rs.source->relation(i)), zero, opts));
    }
    return out;
}

}  // namespace qons
