#include "qons/engine.hpp"
#include "qons/parser.hpp"

#include <map>
#include <set>

namespace qons {

namespace {

nlohmann::json word_to_json(const AlphabetPtr& a, const Word& w) {
    nlohmann::json arr = nlohmann::json::array();
    for (size_t i = 0; i < w.degree(); ++i) arr.push_back(a->symbol(w.letter(i)).name);
    return arr;
}

nlohmann::json terms_to_json(const AlphabetPtr& a, const Certificate& cert) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : cert.terms) {
        nlohmann::json jt = {{"coeff", t.coeff.str()},
                             {"left", word_to_json(a, t.left)},
                             {"right", word_to_json(a, t.right)}};
        jt[t.is_rule ? "rule" : "relation"] = t.index;
        terms.push_back(std::move(jt));
    }
    return terms;
}

Word word_from_json(const nlohmann::json& arr, const Presentation& p) {
    std::basic_string<unsigned char> letters;
    for (const auto& name : arr) {
        auto idx = p.alphabet()->find(name.get<std::string>());
        if (!idx) throw Error("witness references unknown generator " + name.get<std::string>());
        letters.push_back(static_cast<unsigned char>(*idx));
    }
    return Word(std::move(letters));
}

struct ParsedTerm {
    Scalar coeff;
    Word left, right;
    int index = 0;
    bool is_rule = false;
};

std::vector<ParsedTerm> terms_from_json(const nlohmann::json& arr, const Presentation& p) {
    std::vector<ParsedTerm> out;
    for (const auto& t : arr) {
        ParsedTerm pt;
        pt.coeff = parse_scalar_text(t.at("coeff").get<std::string>());
        pt.left = word_from_json(t.at("left"), p);
        pt.right = word_from_json(t.at("right"), p);
        if (t.contains("rule")) {
            pt.is_rule = true;
            pt.index = t.at("rule").get<int>();
        } else {
            pt.index = t.at("relation").get<int>();
            if (pt.index < 0 || size_t(pt.index) >= p.size())
                throw Error("witness references unknown relation");
        }
        out.push_back(std::move(pt));
    }
    return out;
}

}  // namespace

nlohmann::json witness_to_json(const Verdict& v, const NcPoly& target, const RewriteSystem& rs) {
    const AlphabetPtr& a = rs.source->alphabet();
    nlohmann::json j;
    j["kind"] = v.witness_kind;
    j["target"] = target.str();
    if (v.status != Status::PROVED) {
        j["normal_form"] = v.normal_form.str();
        j["note"] = v.note;
        return j;
    }
    j["terms"] = terms_to_json(a, v.certificate);
    // transitive closure of referenced rules, in admission order
    std::set<int> needed;
    auto scan = [&](const Certificate& c) {
        for (const auto& t : c.terms)
            if (t.is_rule) needed.insert(t.index);
    };
    scan(v.certificate);
    for (;;) {
        std::set<int> before = needed;
        for (int i : before) scan(rs.rules.at(size_t(i)).cert);
        if (before == needed) break;
    }
    nlohmann::json rules = nlohmann::json::array();
    for (int i : needed) {
        const Rule& r = rs.rules.at(size_t(i));
        rules.push_back({{"id", i},
                         {"lead", word_to_json(a, r.lead)},
                         {"tail", r.tail.str()},
                         {"terms", terms_to_json(a, r.cert)}});
    }
    j["rules"] = std::move(rules);
    return j;
}

bool replay_witness_json(const nlohmann::json& j, const Presentation& p) try {
    if (!j.contains("terms")) return false;
    const AlphabetPtr& a = p.alphabet();

    std::map<int, NcPoly> rule_poly;  // id -> verified rule polynomial
    auto eval_terms = [&](const std::vector<ParsedTerm>& terms, int below) {
        NcPoly acc(a);
        for (const auto& t : terms) {
            if (t.is_rule) {
                auto it = rule_poly.find(t.index);
                if (it == rule_poly.end() || t.index >= below)
                    throw Error("witness rule reference is not grounded");
                acc.add_sandwich(t.coeff, t.left, it->second, t.right);
            } else {
                acc.add_sandwich(t.coeff, t.left, p.relation(size_t(t.index)), t.right);
            }
        }
        return acc;
    };

    if (j.contains("rules")) {
        for (const auto& jr : j.at("rules")) {
            int id = jr.at("id").get<int>();
            Word lead = word_from_json(jr.at("lead"), p);
            NcPoly tail = parse_expr(jr.at("tail").get<std::string>(), a);
            NcPoly poly = NcPoly::monomial(a, lead, Scalar::one()) - tail;
            auto terms = terms_from_json(jr.at("terms"), p);
            if (!(eval_terms(terms, id) == poly)) return false;  // layer fails to replay
            rule_poly.emplace(id, std::move(poly));
        }
    }
    NcPoly target = parse_expr(j.at("target").get<std::string>(), a);
    auto top = terms_from_json(j.at("terms"), p);
    return eval_terms(top, int(rule_poly.empty() ? 0 : rule_poly.rbegin()->first + 1)) == target;
} catch (const std::exception&) {
    return false;
}

}  // namespace qons
