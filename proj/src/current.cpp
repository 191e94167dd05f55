#include "qons/current.hpp"

#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qons {

namespace {

Scalar delta() {
    return (Scalar::q_power(1) - Scalar::q_power(-1)) * (Scalar::q_power(2) - Scalar::q_power(-2));
}

Scalar q2m2_sq() {
    Scalar b = Scalar::q_power(2) - Scalar::q_power(-2);
    return b * b;
}

Scalar q_plus_qinv() { return Scalar::q_power(1) + Scalar::q_power(-1); }

NcPoly lusztig_image(const NcPoly& X, const NcPoly& G, const Scalar& c1, const Scalar& c2) {
    NcPoly corr = G * G * X * c1 - G * X * G * q_plus_qinv() + X * G * G * c2;
    return X + corr * delta().inverse();
}

}  // namespace

CurrentGenerators make_current_generators(int K) {
    if (K < 1) throw ConfigError("index bound must be at least 1");
    std::vector<GenSymbol> symbols;
    for (int k = 0; k <= K; ++k)
        symbols.push_back({"Gt" + std::to_string(k + 1), "Gt_" + std::to_string(k + 1)});
    for (int k = 0; k <= K; ++k)
        symbols.push_back({"G" + std::to_string(k + 1), "G_" + std::to_string(k + 1)});
    for (int k = 0; k <= K; ++k)
        symbols.push_back({"Wp" + std::to_string(k), "W_" + std::to_string(k + 1)});
    for (int k = 0; k <= K; ++k)
        symbols.push_back({"Wm" + std::to_string(k), k == 0 ? "W_0" : "W_-" + std::to_string(k)});
    return CurrentGenerators{K, make_alphabet(std::move(symbols))};
}

std::vector<NcPoly> current_relations(const CurrentGenerators& gens,
                                      std::vector<std::string>* labels) {
    const int K = gens.K;
    std::vector<NcPoly> rels;
    std::vector<std::string> labs;
    auto push = [&](NcPoly r, std::string lab) {
        rels.push_back(std::move(r));
        labs.push_back(std::move(lab));
    };
    const Scalar qq = q_plus_qinv();
    const NcPoly W0 = gens.Wm(0), W1 = gens.Wp(0);

    for (int k = 0; k <= K; ++k) {
        NcPoly rhs = (gens.Gt(k) - gens.G(k)) * qq.inverse();
        push(bracket(W0, gens.Wp(k)) - rhs, "3p1.k" + std::to_string(k) + ".a");
        if (k > 0) push(bracket(gens.Wm(k), W1) - rhs, "3p1.k" + std::to_string(k) + ".b");
    }
    const Scalar rho = -q2m2_sq();
    for (int k = 0; k + 1 <= K; ++k) {
        NcPoly rhs = (gens.Wm(k + 1) - gens.Wp(k)) * rho;
        push(q_bracket_op(W0, gens.G(k)) - rhs, "3p2.k" + std::to_string(k) + ".a");
        push(q_bracket_op(gens.Gt(k), W0) - rhs, "3p2.k" + std::to_string(k) + ".b");
    }
    for (int k = 0; k + 1 <= K; ++k) {
        NcPoly rhs = (gens.Wp(k + 1) - gens.Wm(k)) * rho;
        push(q_bracket_op(gens.G(k), W1) - rhs, "3p3.k" + std::to_string(k) + ".a");
        push(q_bracket_op(W1, gens.Gt(k)) - rhs, "3p3.k" + std::to_string(k) + ".b");
    }
    auto kl = [](const char* fam, int k, int l) {
        return std::string(fam) + ".k" + std::to_string(k) + ".l" + std::to_string(l);
    };
    for (int k = 0; k <= K; ++k) {
        for (int l = k + 1; l <= K; ++l) {
            push(bracket(gens.Wm(k), gens.Wm(l)), kl("3p4.Wm", k, l));
            push(bracket(gens.Wp(k), gens.Wp(l)), kl("3p4.Wp", k, l));
            push(bracket(gens.Wm(k), gens.Wp(l)) + bracket(gens.Wp(k), gens.Wm(l)), kl("3p5", k, l));
            push(bracket(gens.Wm(k), gens.G(l)) + bracket(gens.G(k), gens.Wm(l)), kl("3p6", k, l));
            push(bracket(gens.Wm(k), gens.Gt(l)) + bracket(gens.Gt(k), gens.Wm(l)), kl("3p7", k, l));
            push(bracket(gens.Wp(k), gens.G(l)) + bracket(gens.G(k), gens.Wp(l)), kl("3p8", k, l));
            push(bracket(gens.Wp(k), gens.Gt(l)) + bracket(gens.Gt(k), gens.Wp(l)), kl("3p9", k, l));
            push(bracket(gens.G(k), gens.G(l)), kl("3p10.G", k, l));
            push(bracket(gens.Gt(k), gens.Gt(l)), kl("3p10.Gt", k, l));
            push(bracket(gens.Gt(k), gens.G(l)) + bracket(gens.G(k), gens.Gt(l)), kl("3p11", k, l));
        }
    }
    if (labels) *labels = std::move(labs);
    return rels;
}

size_t expected_relation_count(int K) {
    return size_t(6 * K + 1) + size_t(5 * K * (K + 1));
}

ProveOptions CurrentContext::prove_opts() const {
    ProveOptions o;
    o.certificate_degree = opts.certificate_degree;
    o.engine = opts.engine;
    o.seed = opts.seed;
    return o;
}

ConventionInfo CurrentContext::convention() const {
    ConventionInfo c;
    c.precedence = gens.alphabet->names();
    for (int i = 0; i < gens.alphabet->size(); ++i)
        c.display.emplace_back(gens.alphabet->symbol(i).name, gens.alphabet->symbol(i).display);
    return c;
}

NcPoly CurrentContext::doubleprimed_w(int k) const {
    return gens.Gt(k) * (-(Scalar::q_power(2) - Scalar::q_power(-2)).inverse());
}

CurrentContext build_current(CurrentOptions opts) {
    if (opts.index_bound < 1) throw ConfigError("index bound must be at least 1");
    if (opts.degree_bound < 4) throw ConfigError("degree bound must be at least 4");
    CurrentGenerators gens = make_current_generators(opts.index_bound);
    const int K = gens.K;

    std::vector<std::string> labels;
    std::vector<NcPoly> rels = current_relations(gens, &labels);
    auto presentation =
        std::make_shared<const Presentation>(gens.alphabet, std::move(rels), std::move(labels));
    RewriteSystem rs = complete(presentation, opts.degree_bound, opts.jobs);

    const Scalar qp = Scalar::q_power(1);
    const Scalar qm = Scalar::q_power(-1);
    const NcPoly W0 = gens.Wm(0);
    std::vector<NcPoly> omega_img(size_t(gens.alphabet->size()), NcPoly(gens.alphabet));
    std::vector<NcPoly> t0_img = omega_img, t0inv_img = omega_img, s_img = omega_img;
    for (int k = 0; k <= K; ++k) {
        omega_img[size_t(gens.wm(k))] = gens.Wp(k);
        omega_img[size_t(gens.wp(k))] = gens.Wm(k);
        omega_img[size_t(gens.g(k))] = gens.Gt(k);
        omega_img[size_t(gens.gt(k))] = gens.G(k);

        t0_img[size_t(gens.wm(k))] = gens.Wm(k);
        t0_img[size_t(gens.wp(k))] = lusztig_image(gens.Wp(k), W0, qp, qm);
        t0_img[size_t(gens.g(k))] = lusztig_image(gens.G(k), W0, qp, qm);
        t0_img[size_t(gens.gt(k))] = lusztig_image(gens.Gt(k), W0, qp, qm);

        t0inv_img[size_t(gens.wm(k))] = gens.Wm(k);
        t0inv_img[size_t(gens.wp(k))] = lusztig_image(gens.Wp(k), W0, qm, qp);
        t0inv_img[size_t(gens.g(k))] = lusztig_image(gens.G(k), W0, qm, qp);
        t0inv_img[size_t(gens.gt(k))] = lusztig_image(gens.Gt(k), W0, qm, qp);

        s_img[size_t(gens.wm(k))] = gens.Wm(k);
        s_img[size_t(gens.wp(k))] = gens.Wp(k);
        s_img[size_t(gens.g(k))] = gens.Gt(k);
        s_img[size_t(gens.gt(k))] = gens.G(k);
    }
    Morphism Omega(gens.alphabet, std::move(omega_img), Variance::hom);
    Morphism T0(gens.alphabet, std::move(t0_img), Variance::hom);
    Morphism T0inv(gens.alphabet, std::move(t0inv_img), Variance::hom);
    Morphism T1 = compose(Omega, compose(T0, Omega));
    Morphism T1inv = compose(Omega, compose(T0inv, Omega));
    Morphism S(gens.alphabet, std::move(s_img), Variance::antihom);

    CurrentContext ctx{opts,
                       gens,
                       presentation,
                       std::move(rs),
                       std::move(Omega),
                       std::move(T0),
                       std::move(T0inv),
                       std::move(T1),
                       std::move(T1inv),
                       std::move(S),
                       -q2m2_sq(),
                       {}};

    if (opts.check_well_definedness) {
        const std::vector<std::pair<std::string, const Morphism*>> named = {
            {"Omega", &ctx.Omega}, {"T0", &ctx.T0},       {"T0inv", &ctx.T0inv},
            {"T1", &ctx.T1},       {"T1inv", &ctx.T1inv}, {"S", &ctx.S}};
        const size_t R = presentation->size();
        std::vector<std::tuple<std::string, std::string, Verdict>> wd(named.size() * R);
        const ProveOptions popts = ctx.prove_opts();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(opts.jobs) if (opts.jobs > 1) collapse(2)
#endif
        for (long m = 0; m < long(named.size()); ++m) {
            for (long r = 0; r < long(R); ++r) {
                NcPoly image = apply(*named[size_t(m)].second, presentation->relation(size_t(r)));
                Verdict v = prove_equal(ctx.rs, image, NcPoly(gens.alphabet), popts);
                wd[size_t(m) * R + size_t(r)] = {named[size_t(m)].first,
                                                 presentation->label(size_t(r)), std::move(v)};
            }
        }
        ctx.well_definedness = std::move(wd);
    }
    return ctx;
}

NcPoly eliminate_closed_form(const CurrentGenerators& gens, int k, ElimFamily which) {
    const Scalar s2 = q2m2_sq();
    const NcPoly W0 = gens.Wm(0), W1 = gens.Wp(0);
    if (which == ElimFamily::G) {
        return gens.Gt(k) + bracket(W1, gens.Wm(k)) * q_plus_qinv();
    }
    if (k < 1 || k - 1 > gens.K) throw ConfigError("elimination index out of range");
    auto gtw = [&](int slot) { return q_bracket_op(gens.Gt(slot), W0) * s2.inverse(); };
    auto wgt = [&](int slot) { return q_bracket_op(W1, gens.Gt(slot)) * s2.inverse(); };
    NcPoly acc(gens.alphabet);
    if (k % 2 == 1) {
        const int r = (k - 1) / 2;
        if (which == ElimFamily::Wminus) {
            acc = W1;
            for (int l = 0; l <= r; ++l) acc -= gtw(2 * l);
            for (int l = 1; l <= r; ++l) acc -= wgt(2 * l - 1);
        } else {
            acc = W0;
            for (int l = 0; l <= r; ++l) acc -= wgt(2 * l);
            for (int l = 1; l <= r; ++l) acc -= gtw(2 * l - 1);
        }
    } else {
        const int r = k / 2;
        if (which == ElimFamily::Wminus) {
            acc = W0;
            for (int l = 0; l <= r - 1; ++l) acc -= wgt(2 * l);
            for (int l = 1; l <= r; ++l) acc -= gtw(2 * l - 1);
        } else {
            acc = W1;
            for (int l = 0; l <= r - 1; ++l) acc -= gtw(2 * l);
            for (int l = 1; l <= r; ++l) acc -= wgt(2 * l - 1);
        }
    }
    return acc;
}

NcPoly eliminate_recursive(const CurrentGenerators& gens, int k, ElimFamily which) {
    if (which == ElimFamily::G) return eliminate_closed_form(gens, k, which);
    if (k < 1 || k - 1 > gens.K) throw ConfigError("elimination index out of range");
    const Scalar s2 = q2m2_sq();
    const NcPoly W0 = gens.Wm(0), W1 = gens.Wp(0);
    NcPoly wm = W0, wp = W1;  // expressions for the current slot index
    // one step raises the index by one in each family
    for (int j = 0; j < k; ++j) {
        NcPoly next_wm = wp - q_bracket_op(gens.Gt(j), W0) * s2.inverse();
        NcPoly next_wp = wm - q_bracket_op(W1, gens.Gt(j)) * s2.inverse();
        wm = std::move(next_wm);
        wp = std::move(next_wp);
    }
    return which == ElimFamily::Wminus ? wm : wp;
}

std::string eliminate_closed_form_text(int k, ElimFamily which) {
    if (which == ElimFamily::G)
        return "Gt" + std::to_string(k + 1) + " + (q + q^-1)*[Wp0, Wm" + std::to_string(k) + "]";
    std::ostringstream out;
    const std::string den = "(q^2 - q^-2)^2";
    auto gtw = [&](int slot) { return "[Gt" + std::to_string(slot + 1) + ", Wm0]_q/" + den; };
    auto wgt = [&](int slot) { return "[Wp0, Gt" + std::to_string(slot + 1) + "]_q/" + den; };
    // alternating sums follow the recursion order
    std::vector<std::string> parts;
    if (which == ElimFamily::Wminus) {
        out << (k % 2 == 1 ? "Wp0" : "Wm0");
        for (int j = 0; j < k; ++j) parts.push_back((k - 1 - j) % 2 == 0 ? gtw(j) : wgt(j));
    } else {
        out << (k % 2 == 1 ? "Wm0" : "Wp0");
        for (int j = 0; j < k; ++j) parts.push_back((k - 1 - j) % 2 == 0 ? wgt(j) : gtw(j));
    }
    for (const auto& p : parts) out << " - " << p;
    return out.str();
}

namespace {

std::string ks(int k) { return "k" + std::to_string(k); }

}  // namespace

std::vector<Check> section3_checks(const CurrentContext& ctx) {
    std::vector<Check> checks;
    const ProveOptions opts = ctx.prove_opts();
    const CurrentGenerators& gens = ctx.gens;
    const int K = gens.K;
    const NcPoly W0 = gens.Wm(0), W1 = gens.Wp(0);
    const Scalar qm1 = Scalar::q_power(1) - Scalar::q_power(-1);

    for (int k = 0; k + 1 <= K; ++k) {
        checks.push_back(make_prove_check("A_q.lem32.e1." + ks(k), ctx.rs,
                                          bracket(q_bracket_op(gens.Wp(k), W0), W0),
                                          bracket(gens.G(k), W0), opts));
        checks.push_back(make_prove_check("A_q.lem32.e2." + ks(k), ctx.rs,
                                          bracket(W1, q_bracket_op(W1, gens.Wm(k))),
                                          bracket(W1, gens.G(k)), opts));
        checks.push_back(make_prove_check("A_q.lem32.e3." + ks(k), ctx.rs,
                                          bracket(W0, q_bracket_op(W0, gens.Wp(k))),
                                          bracket(W0, gens.Gt(k)), opts));
        checks.push_back(make_prove_check("A_q.lem32.e4." + ks(k), ctx.rs,
                                          bracket(q_bracket_op(gens.Wm(k), W1), W1),
                                          bracket(gens.Gt(k), W1), opts));
    }
    for (int k = 0; k + 1 <= K; ++k) {
        for (int l = k + 1; l + 1 <= K; ++l) {
            checks.push_back(make_prove_check(
                "A_q.lem32.dbl-w0." + ks(k) + ".l" + std::to_string(l), ctx.rs,
                bracket(bracket(W0, gens.Wp(k)), bracket(W0, gens.Wp(l))),
                NcPoly(gens.alphabet), opts));
            checks.push_back(make_prove_check(
                "A_q.lem32.dbl-w1." + ks(k) + ".l" + std::to_string(l), ctx.rs,
                bracket(bracket(W1, gens.Wm(k)), bracket(W1, gens.Wm(l))),
                NcPoly(gens.alphabet), opts));
        }
    }

    for (int k = 0; k + 1 <= K; ++k) {
        checks.push_back(make_prove_check("A_q.t-swap.T0-G." + ks(k), ctx.rs,
                                          apply(ctx.T0, gens.G(k)), gens.Gt(k), opts));
        checks.push_back(make_prove_check("A_q.t-swap.T0inv-Gt." + ks(k), ctx.rs,
                                          apply(ctx.T0inv, gens.Gt(k)), gens.G(k), opts));
        checks.push_back(make_prove_check("A_q.t-swap.T1-Gt." + ks(k), ctx.rs,
                                          apply(ctx.T1, gens.Gt(k)), gens.G(k), opts));
        checks.push_back(make_prove_check("A_q.t-swap.T1inv-G." + ks(k), ctx.rs,
                                          apply(ctx.T1inv, gens.G(k)), gens.Gt(k), opts));
    }

    const Morphism st0s = compose(ctx.S, compose(ctx.T0, ctx.S));
    const Morphism st1s = compose(ctx.S, compose(ctx.T1, ctx.S));
    for (int g = 0; g < gens.alphabet->size(); ++g) {
        const std::string gn = gens.alphabet->symbol(g).name;
        checks.push_back(make_prove_check("A_q.lem-st0s.T0." + gn, ctx.rs, st0s.image(g),
                                          ctx.T0inv.image(g), opts));
        checks.push_back(make_prove_check("A_q.lem-st0s.T1." + gn, ctx.rs, st1s.image(g),
                                          ctx.T1inv.image(g), opts));
    }

    // exact identities of the generating morphisms
    checks.push_back(make_exact_check("A_q.exact.S2", [&ctx]() {
        Morphism s2 = compose(ctx.S, ctx.S);
        for (int g = 0; g < ctx.gens.alphabet->size(); ++g)
            if (!(s2.image(g) == NcPoly::generator(ctx.gens.alphabet, g))) return false;
        return s2.variance() == Variance::hom;
    }));
    checks.push_back(make_exact_check("A_q.exact.Omega2", [&ctx]() {
        Morphism o2 = compose(ctx.Omega, ctx.Omega);
        for (int g = 0; g < ctx.gens.alphabet->size(); ++g)
            if (!(o2.image(g) == NcPoly::generator(ctx.gens.alphabet, g))) return false;
        return o2.variance() == Variance::hom;
    }));
    checks.push_back(make_exact_check("A_q.exact.OmegaS-commute", [&ctx]() {
        Morphism os = compose(ctx.Omega, ctx.S);
        Morphism so = compose(ctx.S, ctx.Omega);
        for (int g = 0; g < ctx.gens.alphabet->size(); ++g)
            if (!(os.image(g) == so.image(g))) return false;
        return os.variance() == Variance::antihom && so.variance() == Variance::antihom;
    }));
    checks.push_back(make_exact_check("A_q.exact.T1-displayed", [&ctx]() {
        const CurrentGenerators& g = ctx.gens;
        const NcPoly W1 = g.Wp(0);
        const Scalar qp = Scalar::q_power(1), qm = Scalar::q_power(-1);
        for (int k = 0; k <= g.K; ++k) {
            if (!(ctx.T1.image(g.wp(k)) == g.Wp(k))) return false;
            if (!(ctx.T1.image(g.wm(k)) == lusztig_image(g.Wm(k), W1, qp, qm))) return false;
            if (!(ctx.T1.image(g.g(k)) == lusztig_image(g.G(k), W1, qp, qm))) return false;
            if (!(ctx.T1.image(g.gt(k)) == lusztig_image(g.Gt(k), W1, qp, qm))) return false;
        }
        return true;
    }));
    checks.push_back(make_exact_check("A_q.exact.T1inv-displayed", [&ctx]() {
        const CurrentGenerators& g = ctx.gens;
        const NcPoly W1 = g.Wp(0);
        const Scalar qp = Scalar::q_power(1), qm = Scalar::q_power(-1);
        for (int k = 0; k <= g.K; ++k) {
            if (!(ctx.T1inv.image(g.wp(k)) == g.Wp(k))) return false;
            if (!(ctx.T1inv.image(g.wm(k)) == lusztig_image(g.Wm(k), W1, qm, qp))) return false;
            if (!(ctx.T1inv.image(g.g(k)) == lusztig_image(g.G(k), W1, qm, qp))) return false;
            if (!(ctx.T1inv.image(g.gt(k)) == lusztig_image(g.Gt(k), W1, qm, qp))) return false;
        }
        return true;
    }));

    for (int k = 0; k + 1 <= K; ++k) {
        checks.push_back(make_prove_check("A_q.helpful.h1." + ks(k), ctx.rs,
                                          bracket(gens.Wm(k), ctx.primed_w(0)),
                                          bracket(W0, ctx.primed_w(k)), opts));
        checks.push_back(make_prove_check("A_q.helpful.h2." + ks(k), ctx.rs,
                                          bracket(ctx.primed_w(k), ctx.doubleprimed_w(0)),
                                          bracket(ctx.primed_w(0), ctx.doubleprimed_w(k)), opts));
        checks.push_back(make_prove_check("A_q.helpful.h3." + ks(k), ctx.rs,
                                          bracket(ctx.doubleprimed_w(k), W0),
                                          bracket(ctx.doubleprimed_w(0), gens.Wm(k)), opts));
    }

    const GroupActionBinding bind = ctx.binding();
    const Morphism a = bind.letter('a');
    const Morphism b = bind.letter('b');
    const Morphism c = bind.letter('c');
    for (int k = 0; k + 1 <= K; ++k) {
        checks.push_back(make_prove_check(
            "A_q.thm-act.a-on-Wm." + ks(k), ctx.rs, apply(a, gens.Wm(k)),
            gens.Wm(k) + bracket(ctx.primed_w(k), ctx.doubleprimed_w(0)) * qm1.inverse(), opts));
        checks.push_back(make_prove_check("A_q.thm-act.a-fix-Wprime." + ks(k), ctx.rs,
                                          apply(a, ctx.primed_w(k)), ctx.primed_w(k), opts));
        checks.push_back(make_prove_check("A_q.thm-act.a-fix-Wsecond." + ks(k), ctx.rs,
                                          apply(a, ctx.doubleprimed_w(k)), ctx.doubleprimed_w(k),
                                          opts));
        checks.push_back(make_prove_check(
            "A_q.thm-act.b-on-Wprime." + ks(k), ctx.rs, apply(b, ctx.primed_w(k)),
            ctx.primed_w(k) + bracket(ctx.doubleprimed_w(k), W0) * qm1.inverse(), opts));
        checks.push_back(make_prove_check("A_q.thm-act.b-fix-Wsecond." + ks(k), ctx.rs,
                                          apply(b, ctx.doubleprimed_w(k)), ctx.doubleprimed_w(k),
                                          opts));
        checks.push_back(make_prove_check("A_q.thm-act.b-fix-Wm." + ks(k), ctx.rs,
                                          apply(b, gens.Wm(k)), gens.Wm(k), opts));
        checks.push_back(make_prove_check(
            "A_q.thm-act.c-on-Wsecond." + ks(k), ctx.rs, apply(c, ctx.doubleprimed_w(k)),
            ctx.doubleprimed_w(k) + bracket(gens.Wm(k), ctx.primed_w(0)) * qm1.inverse(), opts));
        checks.push_back(make_prove_check("A_q.thm-act.c-fix-Wm." + ks(k), ctx.rs,
                                          apply(c, gens.Wm(k)), gens.Wm(k), opts));
        checks.push_back(make_prove_check("A_q.thm-act.c-fix-Wprime." + ks(k), ctx.rs,
                                          apply(c, ctx.primed_w(k)), ctx.primed_w(k), opts));
    }

    const Morphism a_alt = compose(ctx.T1inv, ctx.S);
    const Morphism b_alt = compose(ctx.S, ctx.T0inv);
    for (int g = 0; g < gens.alphabet->size(); ++g) {
        const std::string gn = gens.alphabet->symbol(g).name;
        checks.push_back(make_prove_check("A_q.thm-act.part1.a." + gn, ctx.rs, a.image(g),
                                          a_alt.image(g), opts));
        checks.push_back(make_prove_check("A_q.thm-act.part1.b." + gn, ctx.rs, b.image(g),
                                          b_alt.image(g), opts));
    }
    const std::vector<std::pair<std::string, const Morphism*>> part2 = {
        {"T0", &ctx.T0}, {"T0inv", &ctx.T0inv}, {"T1", &ctx.T1}, {"T1inv", &ctx.T1inv}};
    const std::vector<std::string> part2_words = {"bc", "cb", "ca", "ac"};
    for (size_t i = 0; i < part2.size(); ++i) {
        Morphism w = realize(bind, FreeProductWord::parse(part2_words[i]));
        for (int g = 0; g < gens.alphabet->size(); ++g) {
            const std::string gn = gens.alphabet->symbol(g).name;
            checks.push_back(make_prove_check("A_q.thm-act.part2." + part2[i].first + "." + gn,
                                              ctx.rs, w.image(g), part2[i].second->image(g), opts));
        }
    }
    return checks;
}

std::vector<Check> elimination_checks(const CurrentContext& ctx) {
    std::vector<Check> checks;
    const ProveOptions opts = ctx.prove_opts();

    // recursion vs closed form: a pure identity over a wide enough alphabet
    for (int k = 1; k <= 6; ++k) {
        for (ElimFamily fam : {ElimFamily::Wminus, ElimFamily::Wplus}) {
            std::string id = std::string("A_q.elim.recursion.") +
                             (fam == ElimFamily::Wminus ? "Wm" : "Wp") + "." + ks(k);
            checks.push_back(make_exact_check(id, [k, fam]() {
                CurrentGenerators wide = make_current_generators(6);
                return eliminate_recursive(wide, k, fam) == eliminate_closed_form(wide, k, fam);
            }));
        }
    }
    for (int k = 1; k <= ctx.gens.K; ++k) {
        checks.push_back(make_prove_check("A_q.elim.quotient.Wm." + ks(k), ctx.rs, ctx.gens.Wm(k),
                                          eliminate_closed_form(ctx.gens, k, ElimFamily::Wminus),
                                          opts));
        checks.push_back(make_prove_check("A_q.elim.quotient.Wp." + ks(k), ctx.rs, ctx.gens.Wp(k),
                                          eliminate_closed_form(ctx.gens, k, ElimFamily::Wplus),
                                          opts));
    }
    for (int k = 0; k <= ctx.gens.K; ++k) {
        checks.push_back(make_prove_check("A_q.elim.quotient.G." + ks(k), ctx.rs, ctx.gens.G(k),
                                          eliminate_closed_form(ctx.gens, k, ElimFamily::G), opts));
    }
    return checks;
}

std::vector<Check> section4_checks(const CurrentContext& ctx) {
    std::vector<Check> checks;
    const ProveOptions opts = ctx.prove_opts();
    const CurrentGenerators& gens = ctx.gens;
    const NcPoly W0 = gens.Wm(0), W1 = gens.Wp(0);
    const Scalar s2 = q2m2_sq();
    const Scalar qm = Scalar::q_power(-1);

    checks.push_back(make_prove_check("A_q.lem48.e1", ctx.rs, bracket(W0, gens.Gt(0)),
                                      bracket(W0, q_bracket_op(W0, W1)), opts));
    checks.push_back(make_prove_check("A_q.lem48.e2", ctx.rs, bracket(gens.Gt(0), W1),
                                      bracket(q_bracket_op(W0, W1), W1), opts));
    for (int k = 1; k + 1 <= gens.K; ++k) {
        checks.push_back(make_prove_check(
            "A_q.lem48.gt-w0." + ks(k), ctx.rs, bracket(gens.Gt(k), W0),
            bracket(W0, q_bracket_op(W0, q_bracket_op(W1, gens.Gt(k - 1)))) * s2.inverse(), opts));
        checks.push_back(make_prove_check(
            "A_q.lem48.w1-gt." + ks(k), ctx.rs, bracket(W1, gens.Gt(k)),
            bracket(q_bracket_op(q_bracket_op(gens.Gt(k - 1), W0), W1), W1) * s2.inverse(), opts));
    }

    checks.push_back(make_prove_check(
        "A_q.conj49.qdg-w0", ctx.rs,
        bracket(W0, scaled_q_bracket(qm, W0, q_bracket_op(W0, W1))), bracket(W1, W0) * s2, opts));
    checks.push_back(make_prove_check(
        "A_q.conj49.qdg-w1", ctx.rs,
        bracket(W1, scaled_q_bracket(qm, W1, q_bracket_op(W1, W0))), bracket(W0, W1) * s2, opts));
    for (int k = 0; k <= gens.K; ++k) {
        for (int l = k + 1; l <= gens.K; ++l) {
            checks.push_back(make_prove_check(
                "A_q.conj49.gtcomm." + ks(k) + ".l" + std::to_string(l), ctx.rs,
                bracket(gens.Gt(k), gens.Gt(l)), NcPoly(gens.alphabet), opts));
        }
    }
    return checks;
}

std::vector<Check> well_definedness_checks(const CurrentContext& ctx) {
    std::vector<Check> checks;
    for (size_t i = 0; i < ctx.well_definedness.size(); ++i) {
        const auto& [morphism, label, verdict] = ctx.well_definedness[i];
        checks.push_back(Check{"A_q.wd." + morphism + "." + label, CheckStatus::PROVED,
                               [&ctx, i]() {
                                   const Verdict& v = std::get<2>(ctx.well_definedness[i]);
                                   return outcome_from_verdict(
                                       v,
                                       v.status == Status::PROVED
                                           ? v.certificate.evaluate(*ctx.presentation, ctx.rs.rules)
                                           : v.normal_form,
                                       ctx.rs);
                               }});
    }
    return checks;
}

}  // namespace qons
