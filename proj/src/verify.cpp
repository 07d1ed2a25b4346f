#include "rrcc/verify.hpp"

#include <optional>
#include <random>
#include <set>

namespace rrcc {

namespace {

bool classifiable(const QuotientCtx& C) {
    return C.tag == CaseTag::NcV || C.tag == CaseTag::NcFull;
}

std::string spec_label(const FieldCtx& F, const CodeSpec& sp) {
    return spec_to_json(F, sp).dump();
}

QElem v_times(const QCtx& ctx, const FPoly& f) {
    RPolySplit s{fp_zero(), fp_zero(), f, fp_zero()};
    return q_make(ctx, rp_join(ctx->field, s));
}

std::vector<RElem> word_of(const QCtx& ctx, const QElem& a) {
    std::vector<RElem> w(static_cast<size_t>(ctx->n), r_zero(ctx->field));
    for (size_t i = 0; i < a.rep.size(); ++i) w[i] = a.rep[i];
    return w;
}

bool shift_closed(const SubspaceBasis& S) {
    const QCtx& ctx = S.ctx;
    for (const auto& row : S.mat.rows) {
        QElem e = q_unflatten(ctx, row);
        QElem shifted = q_make(ctx, shift_word(ctx, word_of(ctx, e)));
        if (!member(shifted, S)) return false;
    }
    return true;
}

// smallest e with u theta^e in S, or 2 p^s if none below that
i64 probe_torsion(const SubspaceBasis& S) {
    const QCtx& ctx = S.ctx;
    const i64 N = 2 * ctx->ps;
    for (i64 e = 0; e < N; ++e)
        if (member(q_u_times(ctx, fp_theta_pow(ctx->field, ctx->alpha0, e)), S)) return e;
    return N;
}

std::vector<QElem> rows_as_elems(const SubspaceBasis& S) {
    std::vector<QElem> out;
    out.reserve(S.mat.rows.size());
    for (const auto& row : S.mat.rows) out.push_back(q_unflatten(S.ctx, row));
    return out;
}

struct PoolCache {
    std::vector<CodeSpec> specs;
    std::vector<std::optional<SubspaceBasis>> spans;

    const SubspaceBasis& span(const QCtx& ctx, size_t i) {
        if (!spans[i]) spans[i] = span_closure(ctx, generators(ctx, specs[i]));
        return *spans[i];
    }
};

} // namespace

std::vector<CodeSpec> build_spec_pool(const QCtx& ctx, const VerifyOpts& opts) {
    const QuotientCtx& C = *ctx;
    const FieldCtx& F = C.field;
    const i64 P = C.ps, N = 2 * P;
    const i64 q = F.q, q3 = q * q * q;

    std::vector<CodeSpec> pool;
    std::set<std::string> seen;
    i64 cd = 0; // how many Type C/D entries so far
    auto add = [&](const CodeSpec& cand) {
        try {
            CodeSpec sp = validate_spec(ctx, cand);
            if (!seen.insert(spec_label(F, sp)).second) return;
            if (sp.kind == Kind::C || sp.kind == Kind::D) ++cd;
            pool.push_back(std::move(sp));
        } catch (const Error&) {
        }
    };

    add(CodeSpec{Kind::A0, 0, 0, 0, {}});
    add(CodeSpec{Kind::A1, 0, 0, 0, {}});
    for (i64 l = 0; l <= N - 1; ++l) add(CodeSpec{Kind::B, l, 0, 0, {}});

    const FPoly one = fp_one(F);
    const FieldElem ta2 = ff_add(F, C.alpha.a2, C.alpha.a2);
    const FPoly m2{ff_neg(F, ta2)}; // the digit -2 alpha2
    const bool odd_full = C.tag == CaseTag::NcFull && F.p != 2;

    // boundary coverage ell = p^s + t, including the degenerate patterns
    // where z + 2 alpha2 vanishes mod theta^j in odd NC_FULL ambients
    for (i64 t = 0; P + t <= N - 1; ++t) {
        const i64 l = P + t;
        std::vector<ZSeries> zs{{one}};
        if (odd_full) {
            zs.push_back({m2});
            zs.push_back({m2, one});
            zs.push_back({m2, fp_zero(), one});
        }
        for (const auto& z : zs) {
            add(CodeSpec{Kind::C, l, t, 0, z});
            for (i64 mu : {t + 1, P, P + t - 1})
                add(CodeSpec{Kind::D, l, t, mu, z});
        }
    }

    std::mt19937_64 rng(opts.seed);
    auto rand_digit = [&](bool nonzero) {
        const i64 v = nonzero ? 1 + rnd_below(rng, q3 - 1) : rnd_below(rng, q3);
        FPoly d{ff_dec(F, v % q), ff_dec(F, (v / q) % q), ff_dec(F, v / (q * q))};
        return fp_normalize(F, d);
    };
    const i64 max_tries = opts.samples * 200 + 1000;
    for (i64 tries = 0; cd < opts.samples && tries < max_tries; ++tries) {
        const bool want_d = rnd_below(rng, 2) == 1;
        const i64 l = 1 + rnd_below(rng, N - 1);
        const i64 zlen = rnd_below(rng, opts.z_digit_bound + 1);
        const i64 t = zlen > 0 ? rnd_below(rng, l) : 0;
        ZSeries z;
        for (i64 k = 0; k < zlen; ++k) z.push_back(rand_digit(k == 0 || k == zlen - 1));
        if (!want_d) {
            add(CodeSpec{Kind::C, l, t, 0, z});
            continue;
        }
        const i64 mu = zlen > 0 ? t + 1 + rnd_below(rng, std::max<i64>(N - t - 1, 1))
                                : rnd_below(rng, std::max<i64>(l, 1));
        add(CodeSpec{Kind::D, l, t, mu, z});
    }
    return pool;
}

namespace {

SuiteResult suite_nilpotency(const QCtx& ctx) {
    SuiteResult r{"nilpotency", true, {}};
    const i64 predicted = predicted_theta_nilpotency(ctx);
    const i64 measured = nilpotency_index(q_from_fpoly(ctx, ctx->theta));
    r.add("theta nilpotency matches prediction", measured == predicted,
          "predicted " + std::to_string(predicted) + ", measured " + std::to_string(measured));
    return r;
}

SuiteResult suite_counts(const QCtx& ctx, const VerifyOpts& opts) {
    SuiteResult r{"counts", true, {}};
    const FieldCtx& F = ctx->field;
    for (const auto& sp : build_spec_pool(ctx, opts)) {
        CodeDescriptor d = describe(ctx, sp, 0);
        SubspaceBasis S = span_closure(ctx, generators(ctx, sp));
        const i64 dim = subspace_dim(S);
        r.add("count " + spec_label(F, sp), dim == d.dim_fp,
              dim == d.dim_fp ? "dim " + std::to_string(dim)
                              : "expected dim " + std::to_string(d.dim_fp) + ", oracle dim " +
                                    std::to_string(dim));
        r.add("shift " + spec_label(F, sp), shift_closed(S));
    }
    return r;
}

SuiteResult suite_duals(const QCtx& ctx, const VerifyOpts& opts) {
    SuiteResult r{"duals", true, {}};
    const FieldCtx& F = ctx->field;
    const QCtx dctx = dual_ctx(ctx);
    const i64 full = ambient_dim(*ctx);
    for (const auto& sp : build_spec_pool(ctx, opts)) {
        const std::string label = spec_label(F, sp);
        try {
            CodeDescriptor d = describe(ctx, sp, opts.dual_cap);
            SubspaceBasis S = span_closure(ctx, generators(ctx, sp));
            SubspaceBasis A = annihilator(S);
            SubspaceBasis truth = inner_dual(S, dctx);
            SubspaceBasis recip = reciprocal_ideal(rows_as_elems(A), dctx);
            SubspaceBasis formula = span_closure(dctx, d.dual.generators);

            std::string why;
            if (!subspace_equal(truth, recip)) why += "reciprocal(annihilator) != inner dual; ";
            if (!subspace_equal(truth, formula)) why += "synthesized dual != inner dual; ";
            if (subspace_dim(S) + subspace_dim(truth) != full)
                why += "dim C + dim C-perp != ambient; ";
            r.add("dual equality " + label, why.empty(),
                  why.empty() ? "branch " + d.dual.branch : why);
            if (sp.kind == Kind::C || sp.kind == Kind::D) {
                const i64 eps = probe_torsion(A);
                r.add("dual torsion " + label, eps == 2 * ctx->ps - sp.ell,
                      "epsilon " + std::to_string(eps) + ", 2p^s - ell = " +
                          std::to_string(2 * ctx->ps - sp.ell));
            }
            r.add("dual shift " + label, shift_closed(truth));
        } catch (const Error& e) {
            r.add("dual equality " + label, false, e.what());
        }
    }
    return r;
}

SuiteResult suite_distinctness(const QCtx& ctx, const VerifyOpts& opts) {
    SuiteResult r{"distinctness", true, {}};
    const FieldCtx& F = ctx->field;
    PoolCache cache;
    cache.specs = build_spec_pool(ctx, opts);
    cache.spans.resize(cache.specs.size());
    const i64 n = static_cast<i64>(cache.specs.size());
    if (n < 2) {
        r.add("distinct specs give distinct subspaces", true, "pool too small, vacuous");
        return r;
    }
    std::mt19937_64 rng(opts.seed + 1);
    i64 bad = 0;
    std::string first_bad;
    for (i64 k = 0; k < opts.pairs; ++k) {
        const size_t i = static_cast<size_t>(rnd_below(rng, n));
        size_t j = static_cast<size_t>(rnd_below(rng, n - 1));
        if (j >= i) ++j;
        if (subspace_equal(cache.span(ctx, i), cache.span(ctx, j))) {
            ++bad;
            if (first_bad.empty())
                first_bad = spec_label(F, cache.specs[i]) + " vs " + spec_label(F, cache.specs[j]);
        }
    }
    r.add("distinct specs give distinct subspaces (" + std::to_string(opts.pairs) + " pairs)",
          bad == 0,
          bad == 0 ? "pool size " + std::to_string(n)
                   : std::to_string(bad) + " collisions, first: " + first_bad);
    return r;
}

SuiteResult suite_principal(const QCtx& ctx, const VerifyOpts& opts) {
    SuiteResult r{"principal-completeness", true, {}};
    const FieldCtx& F = ctx->field;
    const i64 D = ambient_dim(*ctx);
    std::mt19937_64 rng(opts.seed + 2);
    for (i64 k = 0; k < opts.principal; ++k) {
        std::vector<i64> coords(static_cast<size_t>(D));
        for (auto& c : coords) c = rnd_below(rng, F.p);
        const QElem f = q_unflatten(ctx, coords);
        const std::string label = "principal #" + std::to_string(k);
        try {
            SubspaceBasis S = span_closure(ctx, {f});
            CodeSpec sp = reconstruct_spec(S);
            SubspaceBasis T = span_closure(ctx, generators(ctx, sp));
            r.add(label, subspace_equal(S, T),
                  subspace_equal(S, T)
                      ? spec_label(F, sp)
                      : "reconstructed " + spec_label(F, sp) + " spans a different subspace");
        } catch (const Error& e) {
            r.add(label, false, e.what());
        }
    }
    return r;
}

SuiteResult suite_crt(const QCtx& ctx, const VerifyOpts& opts) {
    SuiteResult r{"crt", true, {}};
    const QuotientCtx& C = *ctx;
    const FieldCtx& F = C.field;
    auto comps = crt_decompose(ctx);

    i64 total_len = 0;
    RPoly prod = rp_one(F);
    for (const auto& c : comps) {
        total_len += c.length;
        prod = rp_mul(F, prod, c.modulus);
    }
    RPoly target = rp_monomial(F, C.n, r_one(F));
    target = rp_sub(F, target, rp_monomial(F, 0, C.alpha));
    r.add("factor product equals x^n - alpha", rp_eq(prod, target),
          std::to_string(comps.size()) + " factors");
    r.add("component lengths sum to n", total_len == C.n, std::to_string(total_len));

    bool dims_ok = true;
    for (const auto& c : comps)
        dims_ok = dims_ok && generic_ideal_dim(F, c.modulus, {rp_one(F)}) == 4 * F.m * c.length;
    r.add("component unit ideals have full dimension", dims_ok);

    std::mt19937_64 rng(opts.seed + 3);
    bool cubes_ok = true;
    std::string cube_err;
    for (i64 k = 0; k < 10; ++k) {
        auto relem = [&] {
            return r_make(ff_dec(F, 1 + rnd_below(rng, F.q - 1)), ff_dec(F, rnd_below(rng, F.q)),
                          ff_dec(F, rnd_below(rng, F.q)), ff_dec(F, rnd_below(rng, F.q)));
        };
        const RElem a = r_pow(F, relem(), 3);
        try {
            crt_factorization(F, a, C.s);
        } catch (const Error& e) {
            cubes_ok = false;
            cube_err = e.what();
            break;
        }
    }
    r.add("random cube units factor with exact products", cubes_ok, cube_err);

    bool sums_ok = true;
    std::string sum_err;
    for (i64 k = 0; k < 3 && sums_ok; ++k) {
        RPoly f(static_cast<size_t>(C.n), r_zero(F));
        for (auto& c : f)
            c = r_make(ff_dec(F, rnd_below(rng, F.q)), ff_dec(F, rnd_below(rng, F.q)),
                       ff_dec(F, rnd_below(rng, F.q)), ff_dec(F, rnd_below(rng, F.q)));
        f = rp_normalize(std::move(f));
        const i64 whole = subspace_dim(span_closure(ctx, {q_make(ctx, f)}));
        i64 parts = 0;
        for (const auto& c : comps) parts += generic_ideal_dim(F, c.modulus, {f});
        if (whole != parts) {
            sums_ok = false;
            sum_err = "dim " + std::to_string(whole) + " != sum " + std::to_string(parts);
        }
    }
    r.add("ideal dimension equals sum over components", sums_ok, sum_err);
    return r;
}

SuiteResult suite_nonchain(const QCtx& ctx) {
    SuiteResult r{"nonchain", true, {}};
    const FieldCtx& F = ctx->field;
    const QElem theta = q_from_fpoly(ctx, ctx->theta);
    const QElem u = q_u_times(ctx, fp_one(F));
    const QElem v = v_times(ctx, fp_one(F));

    if (ctx->tag == CaseTag::NcUv) {
        r.add("u not in <theta, v>", !member(u, span_closure(ctx, {theta, v})));
        r.add("theta not in <u, v>", !member(theta, span_closure(ctx, {u, v})));
        return r;
    }
    r.add("u not in <theta>", !member(u, span_closure(ctx, {theta})));
    r.add("theta not in <u>", !member(theta, span_closure(ctx, {u})));
    if (ctx->tag == CaseTag::NcV) {
        const QElem tp = q_theta_pow(ctx, ctx->ps);
        r.add("<v> = <theta^(p^s)>",
              subspace_equal(span_closure(ctx, {v}), span_closure(ctx, {tp})));
    }
    return r;
}

} // namespace

std::vector<SuiteResult> run_suites(const QCtx& ctx, const std::string& suite,
                                    const VerifyOpts& opts) {
    require(ambient_dim(*ctx) <= opts.max_dim, "RangeViolation",
            "ambient F_p dimension " + std::to_string(ambient_dim(*ctx)) +
                " exceeds the verification cap " + std::to_string(opts.max_dim));
    const bool cls = classifiable(*ctx);
    const bool cube = ctx->tag == CaseTag::Cube;
    const bool nonchain_ok = cls || ctx->tag == CaseTag::NcUv;

    std::vector<std::string> names;
    if (suite == "all") {
        names.push_back("nilpotency");
        if (cls) {
            names.insert(names.end(),
                         {"counts", "duals", "distinctness", "principal-completeness"});
        }
        if (cube) names.push_back("crt");
        if (nonchain_ok) names.push_back("nonchain");
    } else {
        names.push_back(suite);
    }

    std::vector<SuiteResult> out;
    for (const auto& name : names) {
        if (name == "nilpotency") {
            out.push_back(suite_nilpotency(ctx));
        } else if (name == "counts") {
            require(cls, "UnsupportedCase", "counts needs an NC_V or NC_FULL ambient");
            out.push_back(suite_counts(ctx, opts));
        } else if (name == "duals") {
            require(cls, "UnsupportedCase", "duals needs an NC_V or NC_FULL ambient");
            out.push_back(suite_duals(ctx, opts));
        } else if (name == "distinctness") {
            require(cls, "UnsupportedCase", "distinctness needs an NC_V or NC_FULL ambient");
            out.push_back(suite_distinctness(ctx, opts));
        } else if (name == "principal-completeness") {
            require(cls, "UnsupportedCase",
                    "principal-completeness needs an NC_V or NC_FULL ambient");
            out.push_back(suite_principal(ctx, opts));
        } else if (name == "crt") {
            out.push_back(suite_crt(ctx, opts));
        } else if (name == "nonchain") {
            require(nonchain_ok, "UnsupportedCase",
                    "nonchain needs an NC_V, NC_FULL or NC_UV ambient");
            out.push_back(suite_nonchain(ctx));
        } else {
            fail("InvalidInput", "unknown suite \"" + name + "\"");
        }
    }
    return out;
}

bool suites_pass(const std::vector<SuiteResult>& rs) {
    for (const auto& s : rs)
        if (!s.pass) return false;
    return true;
}

Json suites_to_json(const std::vector<SuiteResult>& rs) {
    Json j;
    j["pass"] = suites_pass(rs);
    Json arr = Json::array();
    for (const auto& s : rs) {
        Json sj;
        sj["suite"] = s.suite;
        sj["pass"] = s.pass;
        Json checks = Json::array();
        for (const auto& c : s.checks) {
            Json cj;
            cj["name"] = c.name;
            cj["pass"] = c.pass;
            cj["detail"] = c.detail;
            checks.push_back(std::move(cj));
        }
        sj["checks"] = std::move(checks);
        arr.push_back(std::move(sj));
    }
    j["suites"] = std::move(arr);
    return j;
}

} // namespace rrcc
