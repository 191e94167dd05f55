#include "qons/engine.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace qons {

namespace {

struct WordHash {
    size_t operator()(const Word& w) const {
        size_t h = 1469598103934665603ull;
        for (unsigned char c : w.letters()) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return h;
    }
};

std::set<int> poly_symbols(const NcPoly& x) {
    std::set<int> s;
    for (const auto& [w, c] : x.terms())
        for (size_t i = 0; i < w.degree(); ++i) s.insert(w.letter(i));
    return s;
}

bool subset(const std::set<int>& a, const std::set<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool intersects(const std::set<int>& a, const std::set<int>& b) {
    for (int x : a)
        if (b.count(x)) return true;
    return false;
}

// Symbol sets to try, smallest first: the target's own symbols, then grown
// through relations that share symbols, a few generators per step, relations
// taken in precedence order.
std::vector<std::set<int>> symbol_levels(const std::vector<std::set<int>>& rel_syms,
                                         std::set<int> start, int max_levels, int budget) {
    std::vector<std::set<int>> levels{start};
    std::set<int> cur = std::move(start);
    for (int lvl = 1; lvl < max_levels; ++lvl) {
        std::vector<const std::set<int>*> touching;
        for (const auto& rs : rel_syms)
            if (!subset(rs, cur) && intersects(rs, cur)) touching.push_back(&rs);
        if (touching.empty()) break;
        std::sort(touching.begin(), touching.end(),
                  [](const std::set<int>* a, const std::set<int>* b) { return *a < *b; });
        int added = 0;
        for (const auto* rs : touching) {
            std::set<int> next = cur;
            next.insert(rs->begin(), rs->end());
            int growth = int(next.size() - cur.size());
            if (growth == 0) continue;
            if (added && added + growth > budget) continue;
            cur = std::move(next);
            added += growth;
            if (added >= budget) break;
        }
        if (cur == levels.back()) break;
        levels.push_back(cur);
    }
    return levels;
}

void words_up_to(const std::vector<int>& symbols, int max_len, std::vector<Word>& out) {
    out.emplace_back();
    size_t lo = 0;
    for (int len = 1; len <= max_len; ++len) {
        size_t hi = out.size();
        for (size_t i = lo; i < hi; ++i)
            for (int s : symbols) out.push_back(out[i] * Word::single(s));
        lo = hi;
    }
}

struct Triple {
    int rel;
    Word u, v;
    Word lead;
};

struct SparseRowMod {
    std::vector<std::pair<uint32_t, uint64_t>> a;  // sorted by column
    uint64_t b = 0;
};

// row -= val * pivot (entries merged by column index)
void axpy_mod(SparseRowMod& row, uint64_t val, const SparseRowMod& piv, uint64_t p) {
    std::vector<std::pair<uint32_t, uint64_t>> merged;
    merged.reserve(row.a.size() + piv.a.size());
    auto i = row.a.begin();
    auto j = piv.a.begin();
    while (i != row.a.end() || j != piv.a.end()) {
        if (j == piv.a.end() || (i != row.a.end() && i->first < j->first)) {
            merged.push_back(*i++);
        } else if (i == row.a.end() || j->first < i->first) {
            uint64_t x = p - mul_mod(val, j->second, p);
            if (x != p && x != 0) merged.emplace_back(j->first, x % p);
            ++j;
        } else {
            uint64_t x = (i->second + p - mul_mod(val, j->second, p)) % p;
            if (x) merged.emplace_back(i->first, x);
            ++i, ++j;
        }
    }
    row.a = std::move(merged);
    row.b = (row.b + p - mul_mod(val, piv.b, p)) % p;
}

struct ModSolveResult {
    bool feasible = false;
    std::vector<uint32_t> support;  // columns with a nonzero value in the basic solution
};

ModSolveResult solve_mod(const std::vector<std::vector<std::pair<uint32_t, uint64_t>>>& cols,
                         const std::vector<uint64_t>& rhs, size_t n_rows, uint64_t p) {
    std::vector<SparseRowMod> rows(n_rows);
    for (uint32_t c = 0; c < cols.size(); ++c)
        for (const auto& [r, v] : cols[c]) rows[r].a.emplace_back(c, v);
    for (size_t r = 0; r < n_rows; ++r) {
        std::sort(rows[r].a.begin(), rows[r].a.end());
        rows[r].b = rhs[r];
    }
    std::unordered_map<uint32_t, SparseRowMod> pivots;
    for (size_t r = 0; r < n_rows; ++r) {
        SparseRowMod row = std::move(rows[r]);
        for (;;) {
            if (row.a.empty()) {
                if (row.b != 0) return {};
                break;
            }
            uint32_t j = row.a.front().first;
            auto it = pivots.find(j);
            if (it == pivots.end()) {
                uint64_t inv = inv_mod(row.a.front().second, p);
                for (auto& e : row.a) e.second = mul_mod(e.second, inv, p);
                row.b = mul_mod(row.b, inv, p);
                pivots.emplace(j, std::move(row));
                break;
            }
            axpy_mod(row, row.a.front().second, it->second, p);
        }
    }
    // back-substitution, free columns at zero
    std::vector<uint32_t> pivot_cols;
    pivot_cols.reserve(pivots.size());
    for (const auto& [j, row] : pivots) pivot_cols.push_back(j);
    std::sort(pivot_cols.rbegin(), pivot_cols.rend());
    std::unordered_map<uint32_t, uint64_t> value;
    ModSolveResult res;
    res.feasible = true;
    for (uint32_t j : pivot_cols) {
        const SparseRowMod& row = pivots.at(j);
        uint64_t acc = row.b;
        for (const auto& [jj, v] : row.a) {
            if (jj == j) continue;
            auto it = value.find(jj);
            if (it != value.end()) acc = (acc + p - mul_mod(v, it->second, p)) % p;
        }
        if (acc) {
            value[j] = acc;
            res.support.push_back(j);
        }
    }
    std::sort(res.support.begin(), res.support.end());
    return res;
}

struct SparseRowExact {
    std::vector<std::pair<uint32_t, Scalar>> a;
    Scalar b;
};

void axpy_exact(SparseRowExact& row, const Scalar& val, const SparseRowExact& piv) {
    std::vector<std::pair<uint32_t, Scalar>> merged;
    merged.reserve(row.a.size() + piv.a.size());
    auto i = row.a.begin();
    auto j = piv.a.begin();
    while (i != row.a.end() || j != piv.a.end()) {
        if (j == piv.a.end() || (i != row.a.end() && i->first < j->first)) {
            merged.push_back(std::move(*i++));
        } else if (i == row.a.end() || j->first < i->first) {
            Scalar x = -(val * j->second);
            if (!x.is_zero()) merged.emplace_back(j->first, std::move(x));
            ++j;
        } else {
            Scalar x = i->second - val * j->second;
            if (!x.is_zero()) merged.emplace_back(i->first, std::move(x));
            ++i, ++j;
        }
    }
    row.a = std::move(merged);
    row.b = row.b - val * piv.b;
}

// Exact solve restricted to the candidate columns; returns coefficients per
// local column or nullopt when the restricted system is inconsistent.
std::optional<std::vector<Scalar>> solve_exact(const Presentation& p,
                                               const std::vector<Triple>& triples,
                                               const std::vector<uint32_t>& support,
                                               const NcPoly& target) {
    std::map<Word, SparseRowExact, MonoGreater> rows;
    for (uint32_t local = 0; local < support.size(); ++local) {
        const Triple& t = triples[support[local]];
        const NcPoly& rel = p.relation(size_t(t.rel));
        for (const auto& [w, c] : rel.terms())
            rows[t.u * w * t.v].a.emplace_back(local, c);
    }
    for (const auto& [w, c] : target.terms()) {
        auto it = rows.find(w);
        if (it == rows.end()) return std::nullopt;  // word unreachable from the candidates
        it->second.b = c;
    }
    for (auto& [w, row] : rows) std::sort(row.a.begin(), row.a.end(), [](const auto& x, const auto& y) {
        return x.first < y.first;
    });
    std::map<uint32_t, SparseRowExact> pivots;
    for (auto& [w, row0] : rows) {
        SparseRowExact row = std::move(row0);
        for (;;) {
            if (row.a.empty()) {
                if (!row.b.is_zero()) return std::nullopt;
                break;
            }
            uint32_t j = row.a.front().first;
            auto it = pivots.find(j);
            if (it == pivots.end()) {
                Scalar inv = row.a.front().second.inverse();
                for (auto& e : row.a) e.second = e.second * inv;
                row.b = row.b * inv;
                pivots.emplace(j, std::move(row));
                break;
            }
            axpy_exact(row, row.a.front().second, it->second);
        }
    }
    std::vector<Scalar> sol(support.size());
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        uint32_t j = it->first;
        Scalar acc = it->second.b;
        for (const auto& [jj, v] : it->second.a) {
            if (jj == j) continue;
            acc = acc - v * sol[jj];
        }
        sol[j] = std::move(acc);
    }
    return sol;
}

}  // namespace

std::optional<Certificate> search_certificate(const Presentation& p, const NcPoly& target,
                                              int degree, const ProveOptions& opts,
                                              std::string* note) {
    if (target.is_zero()) return Certificate{};
    std::vector<std::set<int>> rel_syms;
    rel_syms.reserve(p.size());
    for (const auto& r : p.relations()) rel_syms.push_back(poly_symbols(r));
    auto levels = symbol_levels(rel_syms, poly_symbols(target), opts.max_symbol_sets, 4);

    std::mt19937_64 rng(opts.seed);
    std::vector<ModularPoint> points;
    for (int i = 0; i < 2; ++i) points.push_back(ModularPoint::random(rng));

    int min_rel_degree = int(p.max_relation_degree());
    for (const auto& r : p.relations()) min_rel_degree = std::min(min_rel_degree, int(r.degree()));

    for (const auto& symbols : levels) {
        std::vector<int> syms(symbols.begin(), symbols.end());
        std::vector<int> rels;
        for (size_t i = 0; i < p.size(); ++i)
            if (subset(rel_syms[i], symbols)) rels.push_back(int(i));
        if (rels.empty()) continue;

        int d_lo = opts.minimal_degree_scan ? min_rel_degree : degree;
        for (int d = d_lo; d <= degree; ++d) {
            // candidate products u * rel * v of total degree <= d
            double est = 0;
            for (int ri : rels) {
                int slack = d - int(p.relation(size_t(ri)).degree());
                if (slack < 0) continue;
                double words = 1, sum = 0;
                for (int s = 0; s <= slack; ++s) {
                    sum += (s + 1) * words;
                    words *= double(syms.size() ? syms.size() : 1);
                }
                est += sum;
            }
            if (est > double(opts.max_columns)) {
                if (note) *note = "bound exhausted: candidate basis too large";
                break;
            }

            std::vector<Triple> triples;
            std::vector<Word> words;
            for (int ri : rels) {
                const NcPoly& rel = p.relation(size_t(ri));
                int slack = d - int(rel.degree());
                if (slack < 0) continue;
                words.clear();
                words_up_to(syms, slack, words);
                for (const Word& u : words) {
                    for (const Word& v : words) {
                        if (int(u.degree() + v.degree()) > slack) continue;
                        triples.push_back({ri, u, v, u * rel.leading_word() * v});
                    }
                }
            }
            if (triples.empty()) continue;
            std::sort(triples.begin(), triples.end(), [](const Triple& a, const Triple& b) {
                if (a.lead != b.lead) return mono_less(b.lead, a.lead);
                if (a.rel != b.rel) return a.rel < b.rel;
                if (a.u != b.u) return a.u < b.u;
                return a.v < b.v;
            });

            // word -> row index, largest word first
            std::unordered_map<Word, uint32_t, WordHash> word_idx;
            std::vector<Word> row_words;
            auto intern = [&](const Word& w) {
                auto [it, fresh] = word_idx.emplace(w, uint32_t(row_words.size()));
                if (fresh) row_words.push_back(w);
                return it->second;
            };
            std::vector<std::vector<std::pair<uint32_t, Word>>> col_products(triples.size());
            for (size_t c = 0; c < triples.size(); ++c) {
                const Triple& t = triples[c];
                for (const auto& [w, coeff] : p.relation(size_t(t.rel)).terms())
                    col_products[c].emplace_back(intern(t.u * w * t.v), w);
            }
            for (const auto& [w, c] : target.terms()) intern(w);

            std::vector<uint32_t> support;
            bool any_feasible = false;
            for (const ModularPoint& pt : points) {
                // evaluate relation coefficients and target at the point
                bool undefined = false;
                std::vector<std::unordered_map<Word, uint64_t, WordHash>> rel_vals(p.size());
                for (int ri : rels) {
                    for (const auto& [w, c] : p.relation(size_t(ri)).terms()) {
                        auto v = eval_mod(c, pt);
                        if (!v) {
                            undefined = true;
                            break;
                        }
                        rel_vals[size_t(ri)][w] = *v;
                    }
                    if (undefined) break;
                }
                std::vector<uint64_t> rhs(row_words.size(), 0);
                if (!undefined) {
                    for (const auto& [w, c] : target.terms()) {
                        auto v = eval_mod(c, pt);
                        if (!v) {
                            undefined = true;
                            break;
                        }
                        rhs[word_idx.at(w)] = *v;
                    }
                }
                if (undefined) continue;

                std::vector<std::vector<std::pair<uint32_t, uint64_t>>> cols(triples.size());
                for (size_t c = 0; c < triples.size(); ++c) {
                    for (const auto& [ridx, w] : col_products[c]) {
                        uint64_t v = rel_vals[size_t(triples[c].rel)].at(w);
                        if (v) cols[c].emplace_back(ridx, v);
                    }
                }
                auto res = solve_mod(cols, rhs, row_words.size(), pt.prime);
                if (!res.feasible) continue;
                any_feasible = true;
                for (uint32_t j : res.support) support.push_back(j);
                std::sort(support.begin(), support.end());
                support.erase(std::unique(support.begin(), support.end()), support.end());

                auto sol = solve_exact(p, triples, support, target);
                if (!sol) continue;
                Certificate cert;
                for (uint32_t local = 0; local < support.size(); ++local) {
                    if ((*sol)[local].is_zero()) continue;
                    const Triple& t = triples[support[local]];
                    cert.terms.push_back({(*sol)[local], t.u, t.rel, t.v});
                }
                cert.compress();
                if (replay(p, {}, cert, target)) return cert;
            }
            (void)any_feasible;
        }
    }
    return std::nullopt;
}

}  // namespace qons
