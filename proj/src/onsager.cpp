#include "qons/onsager.hpp"

#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qons {

namespace {

Scalar delta() {
    // (q - q^-1)(q^2 - q^-2)
    Scalar a = Scalar::q_power(1) - Scalar::q_power(-1);
    Scalar b = Scalar::q_power(2) - Scalar::q_power(-2);
    return a * b;
}

Scalar q2m2_sq() {
    Scalar b = Scalar::q_power(2) - Scalar::q_power(-2);
    return b * b;
}

// X + (c1 * G^2 X - (q+q^-1) G X G + c2 * X G^2) / ((q-q^-1)(q^2-q^-2))
NcPoly lusztig_image(const NcPoly& X, const NcPoly& G, const Scalar& c1, const Scalar& c2) {
    Scalar mid = Scalar::q_power(1) + Scalar::q_power(-1);
    NcPoly corr = G * G * X * c1 - G * X * G * mid + X * G * G * c2;
    return X + corr * delta().inverse();
}

}  // namespace

NcPoly qdg_poly(const NcPoly& X, const NcPoly& Y) {
    Scalar three = q_bracket(3);
    return X * X * X * Y - X * X * Y * X * three + X * Y * X * X * three - Y * X * X * X -
           (Y * X - X * Y) * q2m2_sq();
}

ProveOptions OnsagerContext::prove_opts() const {
    ProveOptions o;
    o.certificate_degree = opts.certificate_degree;
    o.engine = opts.engine;
    o.seed = opts.seed;
    return o;
}

ConventionInfo OnsagerContext::convention() const {
    ConventionInfo c;
    c.precedence = alphabet->names();
    for (int i = 0; i < alphabet->size(); ++i)
        c.display.emplace_back(alphabet->symbol(i).name, alphabet->symbol(i).display);
    return c;
}

OnsagerContext build_onsager(OnsagerOptions opts) {
    if (opts.degree_bound < 4)
        throw ConfigError("degree bound must be at least the relation degree (4)");
    AlphabetPtr alphabet = make_alphabet({{"A", "A"}, {"B", "B"}});
    NcPoly A = NcPoly::generator(alphabet, 0);
    NcPoly B = NcPoly::generator(alphabet, 1);
    auto presentation = std::make_shared<const Presentation>(
        alphabet, std::vector<NcPoly>{qdg_poly(A, B), qdg_poly(B, A)},
        std::vector<std::string>{"dg1", "dg2"});
    RewriteSystem rs = complete(presentation, opts.degree_bound, opts.jobs);

    const Scalar qp = Scalar::q_power(1);
    const Scalar qm = Scalar::q_power(-1);
    Morphism S = Morphism::identity(alphabet, Variance::antihom);
    Morphism T0(alphabet, {A, lusztig_image(B, A, qp, qm)}, Variance::hom);
    Morphism T0inv(alphabet, {A, lusztig_image(B, A, qm, qp)}, Variance::hom);
    Morphism T1(alphabet, {lusztig_image(A, B, qp, qm), B}, Variance::hom);
    Morphism T1inv(alphabet, {lusztig_image(A, B, qm, qp), B}, Variance::hom);

    NcPoly C = (B * A * qm - A * B * qp) * (Scalar::q_power(2) - Scalar::q_power(-2)).inverse();

    OnsagerContext ctx{std::move(opts), alphabet,          presentation, std::move(rs),
                       std::move(S),    std::move(T0),     std::move(T0inv),
                       std::move(T1),   std::move(T1inv),  A,
                       B,               std::move(C),      {}};

    const std::vector<std::pair<std::string, const Morphism*>> named = {
        {"S", &ctx.S}, {"T0", &ctx.T0}, {"T0inv", &ctx.T0inv}, {"T1", &ctx.T1}, {"T1inv", &ctx.T1inv}};
    std::vector<std::pair<std::string, Verdict>> wd(named.size() * presentation->size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(ctx.opts.jobs) if (ctx.opts.jobs > 1) collapse(2)
#endif
    for (long m = 0; m < long(named.size()); ++m) {
        for (long r = 0; r < long(presentation->size()); ++r) {
            NcPoly image = apply(*named[size_t(m)].second, presentation->relation(size_t(r)));
            Verdict v = prove_equal(ctx.rs, image, NcPoly(alphabet), ctx.prove_opts());
            wd[size_t(m) * presentation->size() + size_t(r)] = {
                named[size_t(m)].first + "." + presentation->label(size_t(r)), std::move(v)};
        }
    }
    for (auto& [label, v] : wd) {
        if (v.status != Status::PROVED)
            throw Error("morphism not proven well defined at the configured bounds: " + label +
                        " (normal form " + v.normal_form.str() + ")");
    }
    ctx.well_definedness = std::move(wd);
    return ctx;
}

namespace {

NcPoly over_qm1(const NcPoly& x) {  // x / (q - q^-1)
    return x * (Scalar::q_power(1) - Scalar::q_power(-1)).inverse();
}

Check stored_wd_check(const OnsagerContext& ctx, size_t idx) {
    return Check{"O_q.wd." + ctx.well_definedness[idx].first, CheckStatus::PROVED, [&ctx, idx]() {
                     const Verdict& v = ctx.well_definedness[idx].second;
                     return outcome_from_verdict(
                         v,
                         v.status == Status::PROVED
                             ? v.certificate.evaluate(*ctx.presentation, ctx.rs.rules)
                             : v.normal_form,
                         ctx.rs);
                 }};
}

}  // namespace

std::vector<Check> section2_checks(const OnsagerContext& ctx) {
    std::vector<Check> checks;
    const ProveOptions opts = ctx.prove_opts();
    const NcPoly &A = ctx.A, &B = ctx.B, &C = ctx.C;
    const Scalar qp = Scalar::q_power(1);
    const Scalar qm = Scalar::q_power(-1);

    checks.push_back(make_prove_check("O_q.lemma-qcom.T0", ctx.rs,
                                      apply(ctx.T0, B * A * qp - A * B * qm), A * B * qp - B * A * qm,
                                      opts));
    checks.push_back(make_prove_check("O_q.lemma-qcom.T1", ctx.rs,
                                      apply(ctx.T1, A * B * qp - B * A * qm), B * A * qp - A * B * qm,
                                      opts));

    const Morphism sts0 = compose(ctx.S, compose(ctx.T0, ctx.S));
    const Morphism sts1 = compose(ctx.S, compose(ctx.T1, ctx.S));
    for (int g = 0; g < 2; ++g) {
        std::string gn = ctx.alphabet->symbol(g).name;
        checks.push_back(make_prove_check("O_q.lemma-st0s.T0." + gn, ctx.rs, sts0.image(g),
                                          ctx.T0inv.image(g), opts));
        checks.push_back(make_prove_check("O_q.lemma-st0s.T1." + gn, ctx.rs, sts1.image(g),
                                          ctx.T1inv.image(g), opts));
    }

    const GroupActionBinding bind = ctx.binding();
    const Morphism a = bind.letter('a');
    const Morphism b = bind.letter('b');
    const Morphism c = bind.letter('c');

    auto act = [&](const char* id, const Morphism& m, const NcPoly& x, const NcPoly& expect) {
        checks.push_back(make_prove_check(id, ctx.rs, apply(m, x), expect, opts));
    };
    act("O_q.thm-z3.actA-on-A", a, A, A + over_qm1(B * C - C * B));
    act("O_q.thm-z3.actA-on-B", a, B, B);
    act("O_q.thm-z3.actA-on-C", a, C, C);
    act("O_q.thm-z3.actB-on-B", b, B, B + over_qm1(C * A - A * C));
    act("O_q.thm-z3.actB-on-C", b, C, C);
    act("O_q.thm-z3.actB-on-A", b, A, A);
    act("O_q.thm-z3.actC-on-C", c, C, C + over_qm1(A * B - B * A));
    act("O_q.thm-z3.actC-on-A", c, A, A);
    act("O_q.thm-z3.actC-on-B", c, B, B);

    const Morphism a_alt = compose(ctx.T1inv, ctx.S);
    const Morphism b_alt = compose(ctx.S, ctx.T0inv);
    for (int g = 0; g < 2; ++g) {
        std::string gn = ctx.alphabet->symbol(g).name;
        checks.push_back(
            make_prove_check("O_q.thm-z3.part1.a." + gn, ctx.rs, a.image(g), a_alt.image(g), opts));
        checks.push_back(
            make_prove_check("O_q.thm-z3.part1.b." + gn, ctx.rs, b.image(g), b_alt.image(g), opts));
    }

    const std::vector<std::pair<std::string, const Morphism*>> part2 = {
        {"T0", &ctx.T0}, {"T0inv", &ctx.T0inv}, {"T1", &ctx.T1}, {"T1inv", &ctx.T1inv}};
    const std::vector<std::string> part2_words = {"bc", "cb", "ca", "ac"};
    for (size_t i = 0; i < part2.size(); ++i) {
        Morphism w = realize(bind, FreeProductWord::parse(part2_words[i]));
        for (int g = 0; g < 2; ++g) {
            std::string gn = ctx.alphabet->symbol(g).name;
            checks.push_back(make_prove_check("O_q.thm-z3.part2." + part2[i].first + "." + gn,
                                              ctx.rs, w.image(g), part2[i].second->image(g), opts));
        }
    }

    const std::vector<std::pair<char, const Morphism*>> gens = {{'a', &a}, {'b', &b}, {'c', &c}};
    for (auto [name, m] : gens) {
        for (int g = 0; g < 2; ++g) {
            std::string gn = ctx.alphabet->symbol(g).name;
            checks.push_back(make_prove_check(std::string("O_q.thm-z3.invol.") + name + "." + gn,
                                              ctx.rs, apply(*m, m->image(g)),
                                              NcPoly::generator(ctx.alphabet, g), opts));
        }
    }
    for (int g = 0; g < 2; ++g) {
        std::string gn = ctx.alphabet->symbol(g).name;
        checks.push_back(make_prove_check("O_q.inverse.T0." + gn, ctx.rs,
                                          apply(ctx.T0, ctx.T0inv.image(g)),
                                          NcPoly::generator(ctx.alphabet, g), opts));
        checks.push_back(make_prove_check("O_q.inverse.T1." + gn, ctx.rs,
                                          apply(ctx.T1, ctx.T1inv.image(g)),
                                          NcPoly::generator(ctx.alphabet, g), opts));
    }
    for (size_t i = 0; i < ctx.well_definedness.size(); ++i)
        checks.push_back(stored_wd_check(ctx, i));
    return checks;
}

Verdict check_note_counterexample(const OnsagerContext& ctx) {
    // The pair (B, C) fails the defining relations: the second relation
    // instance stays unprovable (the first one is actually a theorem, with a
    // small certificate over the second defining relation).
    return prove_equal(ctx.rs, qdg_poly(ctx.C, ctx.B), NcPoly(ctx.alphabet), ctx.prove_opts());
}

std::vector<Check> note_checks(const OnsagerContext& ctx) {
    std::vector<Check> checks;
    const ProveOptions opts = ctx.prove_opts();
    checks.push_back(make_prove_check("O_q.note.qdg-AB", ctx.rs, qdg_poly(ctx.A, ctx.B),
                                      NcPoly(ctx.alphabet), opts));
    checks.push_back(make_prove_check("O_q.note.qdg-BA", ctx.rs, qdg_poly(ctx.B, ctx.A),
                                      NcPoly(ctx.alphabet), opts));
    checks.push_back(make_prove_check("O_q.note.qdg-BC-first", ctx.rs, qdg_poly(ctx.B, ctx.C),
                                      NcPoly(ctx.alphabet), opts));
    checks.push_back(Check{"O_q.note.qdg-BC-second", CheckStatus::INCONCLUSIVE, [&ctx]() {
                               Verdict v = check_note_counterexample(ctx);
                               CheckOutcome o = outcome_from_verdict(v, v.normal_form, ctx.rs);
                               if (v.status == Status::INCONCLUSIVE && v.normal_form.is_zero())
                                   o.status = CheckStatus::ERROR;  // must carry a nonzero residue
                               if (v.status == Status::INCONCLUSIVE)
                                   o.note = "no proof found at bound (evidence the relation fails)";
                               return o;
                           }});
    return checks;
}

bool FlipCondition::proved() const {
    if (!determined) return false;
    for (const auto& v : well_defined)
        if (v.status != Status::PROVED) return false;
    for (const auto& v : prescribed)
        if (v.status != Status::PROVED) return false;
    return true;
}

bool FlippingTripleReport::flipping_at_bound() const {
    for (const auto& c : conditions)
        if (!c.proved()) return false;
    return true;
}

FlippingTripleReport check_flipping_triple(const RewriteSystem& rs,
                                           const std::array<NcPoly, 3>& triple,
                                           const ProveOptions& opts) {
    const AlphabetPtr& alphabet = rs.source->alphabet();
    FlippingTripleReport report;

    std::set<int> covered;
    for (const auto& e : triple) {
        if (e.term_count() == 1 && e.leading_word().degree() == 1)
            covered.insert(e.leading_word().letter(0));
    }
    report.generation = int(covered.size()) == alphabet->size() ? GenerationStatus::checked_trivially
                                                                : GenerationStatus::assumed;

    for (int k = 0; k < 3; ++k) {
        FlipCondition& cond = report.conditions[size_t(k)];
        const NcPoly& X = triple[size_t(k)];
        const NcPoly& Y = triple[size_t((k + 1) % 3)];
        const NcPoly& Z = triple[size_t((k + 2) % 3)];
        std::vector<std::pair<NcPoly, NcPoly>> prescriptions = {
            {X, X + Y * Z - Z * Y}, {Y, Y}, {Z, Z}};

        std::vector<std::optional<NcPoly>> images(size_t(alphabet->size()));
        std::vector<std::pair<NcPoly, NcPoly>> deferred;
        bool consistent = true;
        for (auto& [elem, target] : prescriptions) {
            if (elem.term_count() == 1 && elem.leading_word().degree() == 1) {
                int g = elem.leading_word().letter(0);
                NcPoly img = target * elem.leading_coeff().inverse();
                if (images[size_t(g)] && !(*images[size_t(g)] == img)) {
                    consistent = false;
                    cond.note = "conflicting images for generator " + alphabet->symbol(g).name;
                    break;
                }
                images[size_t(g)] = std::move(img);
            } else {
                deferred.emplace_back(elem, target);
            }
        }
        if (!consistent) continue;
        std::vector<NcPoly> image_vec;
        bool all_set = true;
        for (int g = 0; g < alphabet->size(); ++g) {
            if (!images[size_t(g)]) {
                all_set = false;
                cond.note = "not checkable: no image determined for generator " +
                            alphabet->symbol(g).name;
                break;
            }
            image_vec.push_back(*images[size_t(g)]);
        }
        if (!all_set) continue;
        cond.determined = true;
        Morphism sigma(alphabet, std::move(image_vec), Variance::antihom);
        cond.well_defined = check_morphism_well_defined(rs, sigma, opts);
        for (const auto& [elem, target] : deferred)
            cond.prescribed.push_back(prove_equal(rs, apply(sigma, elem), target, opts));
        for (int g = 0; g < alphabet->size(); ++g) {
            cond.involution.push_back(prove_equal(rs, apply(sigma, sigma.image(g)),
                                                  NcPoly::generator(alphabet, g), opts));
        }
    }
    return report;
}

std::vector<Check> flipping_checks(const OnsagerContext& ctx) {
    std::vector<Check> checks;
    const ProveOptions opts = ctx.prove_opts();

    checks.push_back(Check{"O_q.flip.example-scaled", CheckStatus::PASS, [&ctx, opts]() {
        Scalar s = (Scalar::q_power(1) - Scalar::q_power(-1)).inverse();
        auto report = check_flipping_triple(ctx.rs, {ctx.A * s, ctx.B * s, ctx.C * s}, opts);
        CheckOutcome o;
        o.status = report.flipping_at_bound() ? CheckStatus::PASS : CheckStatus::FAIL;
        o.note = report.generation == GenerationStatus::checked_trivially ? "generation: checked trivially"
                                                                          : "generation: assumed";
        return o;
    }});

    checks.push_back(Check{"O_q.flip.matches-action", CheckStatus::PASS, [&ctx, opts]() {
        // the scaled triple's condition maps coincide with the a, b, c actions
        // on every generator image that the triple determines
        Scalar s = (Scalar::q_power(1) - Scalar::q_power(-1)).inverse();
        std::array<NcPoly, 3> t{ctx.A * s, ctx.B * s, ctx.C * s};
        const GroupActionBinding bind = ctx.binding();
        CheckOutcome o;
        o.status = CheckStatus::PASS;
        for (int k = 0; k < 3; ++k) {
            const NcPoly& X = t[size_t(k)];
            const NcPoly& Y = t[size_t((k + 1) % 3)];
            const NcPoly& Z = t[size_t((k + 2) % 3)];
            Morphism action = bind.letter("abc"[k]);
            std::vector<std::pair<NcPoly, NcPoly>> prescriptions = {
                {X, X + Y * Z - Z * Y}, {Y, Y}, {Z, Z}};
            for (const auto& [elem, target] : prescriptions) {
                if (!(elem.term_count() == 1 && elem.leading_word().degree() == 1)) continue;
                int g = elem.leading_word().letter(0);
                NcPoly derived = target * elem.leading_coeff().inverse();
                Verdict v = prove_equal(ctx.rs, derived, action.image(g), opts);
                if (v.status != Status::PROVED) o.status = CheckStatus::FAIL;
            }
        }
        return o;
    }});

    checks.push_back(Check{"free3.flip.generators", CheckStatus::PASS, [opts]() {
        AlphabetPtr free3 = make_alphabet({{"A", "A"}, {"B", "B"}, {"C", "C"}});
        auto pres = std::make_shared<const Presentation>(free3, std::vector<NcPoly>{});
        RewriteSystem rs = complete(pres, 4, 1);
        std::array<NcPoly, 3> t{NcPoly::generator(free3, 0), NcPoly::generator(free3, 1),
                                NcPoly::generator(free3, 2)};
        auto report = check_flipping_triple(rs, t, opts);
        CheckOutcome o;
        bool exact_involutions = true;
        for (const auto& c : report.conditions)
            for (const auto& v : c.involution)
                if (v.status != Status::PROVED || v.witness_kind != "syntactic")
                    exact_involutions = false;
        o.status = report.flipping_at_bound() && exact_involutions &&
                           report.generation == GenerationStatus::checked_trivially
                       ? CheckStatus::PASS
                       : CheckStatus::FAIL;
        return o;
    }});

    checks.push_back(Check{"O_q.flip.degenerate-zero", CheckStatus::PASS, [&ctx, opts]() {
        auto report = check_flipping_triple(ctx.rs, {ctx.A, ctx.B, NcPoly(ctx.alphabet)}, opts);
        CheckOutcome o;
        // the third condition must fail: nothing can send 0 to AB - BA
        o.status = !report.flipping_at_bound() ? CheckStatus::PASS : CheckStatus::FAIL;
        o.note = "not a flipping triple";
        return o;
    }});
    return checks;
}

std::vector<Check> word_group_checks(uint64_t seed) {
    std::vector<Check> checks;

    checks.push_back(make_exact_check("grp.laws.fp", [seed]() {
        std::mt19937_64 rng(seed);
        auto words = reduced_words_up_to(5);
        for (int i = 0; i < 500; ++i) {
            const auto& x = words[rng() % words.size()];
            const auto& y = words[rng() % words.size()];
            const auto& z = words[rng() % words.size()];
            if (!(fp_multiply(fp_multiply(x, y), z) == fp_multiply(x, fp_multiply(y, z))))
                return false;
            if (!fp_multiply(x, x.inverse()).is_identity()) return false;
            if (!(fp_multiply(x, FreeProductWord()) == x)) return false;
        }
        return true;
    }));

    checks.push_back(make_exact_check("grp.laws.sd", [seed]() {
        std::mt19937_64 rng(seed + 1);
        auto words = reduced_words_up_to(5);
        for (int i = 0; i < 500; ++i) {
            auto x = translate_fp_to_sd(words[rng() % words.size()]);
            auto y = translate_fp_to_sd(words[rng() % words.size()]);
            auto z = translate_fp_to_sd(words[rng() % words.size()]);
            if (!(sd_multiply(sd_multiply(x, y), z) == sd_multiply(x, sd_multiply(y, z))))
                return false;
            if (!(sd_multiply(x, SemidirectWord()) == x)) return false;
            if (!(sd_multiply(SemidirectWord(), x) == x)) return false;
        }
        // defining relations of the second presentation
        auto s = SemidirectWord::s();
        auto t0 = SemidirectWord::t(0, 1), t0i = SemidirectWord::t(0, -1);
        auto t1 = SemidirectWord::t(1, 1), t1i = SemidirectWord::t(1, -1);
        if (!sd_multiply(s, s).is_identity()) return false;
        if (!sd_multiply(t0, t0i).is_identity()) return false;
        if (!sd_multiply(t1i, t1).is_identity()) return false;
        if (!(sd_multiply(sd_multiply(s, t0), s) == t0i)) return false;
        if (!(sd_multiply(sd_multiply(s, t1), s) == t1i)) return false;
        return true;
    }));

    checks.push_back(make_exact_check("grp.translate.mutual-inverse-len6", []() {
        auto words = reduced_words_up_to(6);
        if (words.size() != 190) return false;
        for (const auto& w : words) {
            SemidirectWord t = translate_fp_to_sd(w);
            if (!(translate_sd_to_fp(t) == w)) return false;
            if (!(translate_fp_to_sd(translate_sd_to_fp(t)) == t)) return false;
        }
        for (const auto& x : words) {
            for (const auto& y : words) {
                if (!(translate_fp_to_sd(fp_multiply(x, y)) ==
                      sd_multiply(translate_fp_to_sd(x), translate_fp_to_sd(y))))
                    return false;
                if (!(translate_sd_to_fp(sd_multiply(translate_fp_to_sd(x), translate_fp_to_sd(y))) ==
                      fp_multiply(x, y)))
                    return false;
            }
        }
        return true;
    }));
    return checks;
}

std::vector<Check> action_group_checks(const OnsagerContext& ctx) {
    std::vector<Check> checks;
    const ProveOptions opts = ctx.prove_opts();

    checks.push_back(Check{"grp.realize.hom-quotient", CheckStatus::PASS, [&ctx, opts]() {
        const GroupActionBinding bind = ctx.binding();
        std::mt19937_64 rng(opts.seed);
        auto words = reduced_words_up_to(2);
        CheckOutcome o;
        o.status = CheckStatus::PASS;
        for (int trial = 0; trial < 6; ++trial) {
            const auto& x = words[rng() % words.size()];
            const auto& y = words[rng() % words.size()];
            for (int g = 0; g < 2; ++g) {
                NcPoly gen = NcPoly::generator(ctx.alphabet, g);
                NcPoly lhs = quotient_image(bind, fp_multiply(x, y), gen, ctx.rs);
                NcPoly rhs = quotient_image(bind, x, quotient_image(bind, y, gen, ctx.rs), ctx.rs);
                Verdict v = prove_equal(ctx.rs, lhs, rhs, opts);
                if (v.status != Status::PROVED) o.status = CheckStatus::FAIL;
            }
        }
        return o;
    }});

    checks.push_back(Check{"grp.evidence.faithful-len3", CheckStatus::EVIDENCE, [&ctx]() {
        // Distinct words must act distinctly. A composite is pinned down by
        // its variance together with the images of both generators (b and c
        // fix A, so the image of A alone cannot separate).
        const GroupActionBinding bind = ctx.binding();
        auto words = reduced_words_up_to(3);
        struct Key {
            size_t parity;
            NcPoly imgA, imgB;
        };
        std::vector<Key> keys;
        keys.reserve(words.size());
        for (const auto& w : words)
            keys.push_back({w.length() % 2, quotient_image(bind, w, ctx.A, ctx.rs),
                            quotient_image(bind, w, ctx.B, ctx.rs)});
        CheckOutcome o;
        o.status = CheckStatus::EVIDENCE;
        o.witness_kind = "evidence";
        for (size_t i = 0; i < keys.size(); ++i) {
            for (size_t j = i + 1; j < keys.size(); ++j) {
                if (keys[i].parity == keys[j].parity && keys[i].imgA == keys[j].imgA &&
                    keys[i].imgB == keys[j].imgB) {
                    o.status = CheckStatus::FAIL;
                    o.note = "collision: " + words[i].str() + " vs " + words[j].str();
                    return o;
                }
            }
        }
        o.note = std::to_string(words.size()) +
                 " words act pairwise distinctly on the generators at this bound "
                 "(distinctness is evidence, not proof)";
        return o;
    }});
    return checks;
}

}  // namespace qons
