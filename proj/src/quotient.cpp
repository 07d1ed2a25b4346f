#include "rrcc/quotient.hpp"

#include "rrcc/fplin.hpp"

namespace rrcc {

std::string case_name(CaseTag t) {
    switch (t) {
        case CaseTag::Cube: return "CUBE";
        case CaseTag::NcV: return "NC_V";
        case CaseTag::NcFull: return "NC_FULL";
        case CaseTag::NcUv: return "NC_UV";
        case CaseTag::NcOther: return "NC_OTHER";
    }
    fail("InternalError", "unknown case tag");
}

namespace {

CaseTag derive_case(const FieldCtx& F, const RElem& alpha) {
    if (ff_is_cube(F, alpha.a1)) return CaseTag::Cube;
    bool z2 = ff_is_zero(alpha.a2), z3 = ff_is_zero(alpha.a3), z4 = ff_is_zero(alpha.a4);
    if (z2 && !z3 && !z4) return CaseTag::NcV;
    if (!z2 && !z3) return CaseTag::NcFull;
    if (z2 && z3 && !z4) return CaseTag::NcUv;
    return CaseTag::NcOther;
}

} // namespace

QCtx make_quotient_ctx(const FieldCtx& F, i64 s, const RElem& alpha) {
    require(s >= 0, "InvalidInput", "s must be >= 0");
    require(r_is_unit(alpha), "NotAUnit", "alpha must be a unit of R");
    auto ctx = std::make_shared<QuotientCtx>();
    ctx->field = F;
    ctx->s = s;
    ctx->ps = 1;
    for (i64 i = 0; i < s; ++i) {
        require(ctx->ps <= (i64(1) << 16) / F.p, "InvalidInput", "p^s too large");
        ctx->ps *= F.p;
    }
    ctx->n = 3 * ctx->ps;
    ctx->alpha = alpha;
    ctx->alpha0 = ff_alpha0(F, alpha.a1, s);
    ctx->tag = derive_case(F, alpha);
    ctx->theta = fp_theta(F, ctx->alpha0);
    return ctx;
}

QCtx dual_ctx(const QCtx& ctx) {
    return make_quotient_ctx(ctx->field, ctx->s, r_inv(ctx->field, ctx->alpha));
}

void check_same_ctx(const QElem& a, const QElem& b) {
    require(a.ctx && b.ctx && a.ctx->same(*b.ctx), "ContextMismatch",
            "operands live in different ambient rings");
}

RPoly q_reduce(const QuotientCtx& ctx, RPoly f) {
    const FieldCtx& F = ctx.field;
    f = rp_normalize(std::move(f));
    while (rp_deg(f) >= ctx.n) {
        i64 d = rp_deg(f);
        RElem lead = f.back();
        f.pop_back();
        f[d - ctx.n] = r_add(F, f[d - ctx.n], r_mul(F, ctx.alpha, lead));
        f = rp_normalize(std::move(f));
    }
    return f;
}

QElem q_make(const QCtx& ctx, RPoly f) {
    require(static_cast<bool>(ctx), "InvalidInput", "null context");
    return {ctx, q_reduce(*ctx, std::move(f))};
}

QElem q_zero(const QCtx& ctx) { return {ctx, rp_zero()}; }

QElem q_one(const QCtx& ctx) { return {ctx, rp_one(ctx->field)}; }

QElem q_from_fpoly(const QCtx& ctx, const FPoly& f) {
    return q_make(ctx, rp_from_fpoly(ctx->field, f));
}

QElem q_u_times(const QCtx& ctx, const FPoly& f) {
    const FieldCtx& F = ctx->field;
    RPoly r(f.size(), r_zero(F));
    for (size_t i = 0; i < f.size(); ++i) r[i].a2 = f[i];
    return q_make(ctx, std::move(r));
}

QElem q_theta_pow(const QCtx& ctx, i64 k) {
    return q_from_fpoly(ctx, fp_theta_pow(ctx->field, ctx->alpha0, k));
}

bool q_is_zero(const QElem& a) { return rp_is_zero(a.rep); }

bool q_eq(const QElem& a, const QElem& b) {
    check_same_ctx(a, b);
    return rp_eq(a.rep, b.rep);
}

QElem q_add(const QElem& a, const QElem& b) {
    check_same_ctx(a, b);
    return {a.ctx, rp_add(a.ctx->field, a.rep, b.rep)};
}

QElem q_sub(const QElem& a, const QElem& b) {
    check_same_ctx(a, b);
    return {a.ctx, rp_sub(a.ctx->field, a.rep, b.rep)};
}

QElem q_neg(const QElem& a) { return {a.ctx, rp_neg(a.ctx->field, a.rep)}; }

QElem q_mul(const QElem& a, const QElem& b) {
    check_same_ctx(a, b);
    return {a.ctx, q_reduce(*a.ctx, rp_mul(a.ctx->field, a.rep, b.rep))};
}

QElem q_pow(const QElem& a, i64 e) {
    require(e >= 0, "InvalidInput", "negative exponent");
    QElem r = q_one(a.ctx), base = a;
    while (e > 0) {
        if (e & 1) r = q_mul(r, base);
        base = q_mul(base, base);
        e >>= 1;
    }
    return r;
}

QElem q_scale(const RElem& c, const QElem& a) {
    return {a.ctx, rp_scale(a.ctx->field, c, a.rep)};
}

QElem q_shift_x(const QElem& a) {
    return {a.ctx, q_reduce(*a.ctx, rp_shift(a.rep, 1))};
}

i64 nilpotency_index(const QElem& a) {
    i64 cap = 3 * a.ctx->ps + 1;
    QElem acc = q_one(a.ctx);
    for (i64 k = 1; k <= cap; ++k) {
        acc = q_mul(acc, a);
        if (q_is_zero(acc)) return k;
    }
    return kInfinite;
}

i64 ambient_dim(const QuotientCtx& ctx) { return 4 * ctx.field.m * ctx.n; }

std::vector<i64> q_flatten(const QElem& a) {
    const QuotientCtx& ctx = *a.ctx;
    i64 m = ctx.field.m;
    std::vector<i64> out(ambient_dim(ctx), 0);
    for (size_t d = 0; d < a.rep.size(); ++d) {
        const RElem& c = a.rep[d];
        const FieldElem* comps[4] = {&c.a1, &c.a2, &c.a3, &c.a4};
        for (i64 k = 0; k < 4; ++k)
            for (i64 j = 0; j < m; ++j)
                out[(static_cast<i64>(d) * 4 + k) * m + j] = (*comps[k])[j];
    }
    return out;
}

QElem q_unflatten(const QCtx& ctxp, const std::vector<i64>& v) {
    const QuotientCtx& ctx = *ctxp;
    require(static_cast<i64>(v.size()) == ambient_dim(ctx), "ShapeMismatch",
            "coordinate vector has the wrong length");
    i64 m = ctx.field.m;
    RPoly rep(ctx.n, r_zero(ctx.field));
    for (i64 d = 0; d < ctx.n; ++d) {
        FieldElem* comps[4] = {&rep[d].a1, &rep[d].a2, &rep[d].a3, &rep[d].a4};
        for (i64 k = 0; k < 4; ++k)
            for (i64 j = 0; j < m; ++j)
                (*comps[k])[j] = v[(d * 4 + k) * m + j];
    }
    return {ctxp, rp_normalize(std::move(rep))};
}

namespace {

// constant theta-digit of the F-part; the unit criterion in every local
// (non-cube) ambient
FPoly const_digit(const QuotientCtx& ctx, const RPoly& rep) {
    RPolySplit s = rp_split(ctx.field, rep);
    return fp_divmod(ctx.field, s.h1, ctx.theta).second;
}

// multiplication-by-a matrix on the flattened ambient (columns = images of
// the standard basis)
FpMat mult_matrix(const QElem& a) {
    const QuotientCtx& ctx = *a.ctx;
    i64 D = ambient_dim(ctx);
    FpMat M{ctx.field.p, D, std::vector<std::vector<i64>>(D, std::vector<i64>(D, 0))};
    for (i64 col = 0; col < D; ++col) {
        std::vector<i64> e(D, 0);
        e[col] = 1;
        std::vector<i64> img = q_flatten(q_mul(a, q_unflatten(a.ctx, e)));
        for (i64 row = 0; row < D; ++row) M.rows[row][col] = img[row];
    }
    return M;
}

} // namespace

bool q_is_unit(const QElem& a) {
    const QuotientCtx& ctx = *a.ctx;
    if (ctx.tag != CaseTag::Cube) return !fp_is_zero(const_digit(ctx, a.rep));
    FpMat M = mult_matrix(a);
    fp_rref(M);
    return fp_rank(M) == M.cols;
}

QElem q_invert(const QElem& a) {
    const QuotientCtx& ctx = *a.ctx;
    const FieldCtx& F = ctx.field;
    require(q_is_unit(a), "NotAUnit", "element is not a unit of the ambient ring");
    QElem inv;
    if (ctx.tag == CaseTag::Cube) {
        // solve a y = 1 as a linear system over F_p
        FpMat M = mult_matrix(a);
        std::vector<i64> one = q_flatten(q_one(a.ctx));
        auto sol = fp_solve_linear(M, one);
        require(sol.has_value(), "InternalError", "unit system inconsistent");
        inv = q_unflatten(a.ctx, *sol);
    } else {
        // e = d0^-1 mod theta, then a e = 1 + nu with nu nilpotent, and
        // a^-1 = e sum (-nu)^k
        FPoly d0 = const_digit(ctx, a.rep);
        FPoly e = fp_inv_mod(F, d0, ctx.theta);
        QElem eq = q_from_fpoly(a.ctx, e);
        QElem nu = q_sub(q_mul(eq, a), q_one(a.ctx));
        QElem series = q_one(a.ctx);
        QElem term = q_one(a.ctx);
        QElem neg_nu = q_neg(nu);
        for (i64 k = 1; k <= 3 * ctx.ps; ++k) {
            term = q_mul(term, neg_nu);
            if (q_is_zero(term)) break;
            series = q_add(series, term);
        }
        inv = q_mul(eq, series);
    }
    require(q_eq(q_mul(a, inv), q_one(a.ctx)), "InternalError",
            "q_invert postcondition failed");
    return inv;
}

QElem q_invert_quad_path(const QCtx& ctxp, const FPoly& g_in) {
    const QuotientCtx& ctx = *ctxp;
    const FieldCtx& F = ctx.field;
    require(ctx.tag != CaseTag::Cube, "UnsupportedCase",
            "quad path needs a non-cube alpha1");
    FPoly g = fp_normalize(F, g_in);
    require(!fp_is_zero(g), "NotAUnit", "zero is not a unit");
    require(fp_deg(g) <= 2, "InvalidInput", "quad path takes degree <= 2 input");
    i64 P = ctx.ps;
    if (fp_deg(g) == 0) {
        return q_from_fpoly(ctxp, {ff_inv(F, g[0])});
    }
    if (fp_deg(g) == 1) {
        // g = c (x - r); (x-r)^-1 = (x-r)^(P-1) (x^2+rx+r^2)^P (alpha - r^(3P))^-1
        FieldElem c = g[1];
        FieldElem r = ff_neg(F, ff_mul(F, ff_inv(F, c), g[0]));
        QElem xr = q_from_fpoly(ctxp, fp_x_minus(F, r));
        FPoly quad = {ff_mul(F, r, r), r, ff_one(F)};
        QElem head = q_mul(q_pow(xr, P - 1), q_pow(q_from_fpoly(ctxp, quad), P));
        RElem w = r_sub(F, ctx.alpha, r_from_field(F, ff_pow(F, r, 3 * P)));
        QElem winv = q_make(ctxp, rp_monomial(F, 0, r_inv(F, w)));
        return q_scale(r_from_field(F, ff_inv(F, c)), q_mul(head, winv));
    }
    // g = c1 (x^2 + b x + c); (x^2+bx+c)(x-b) = x^3 + (c-b^2) x - bc =: E
    FieldElem c1 = g[2];
    FieldElem c1i = ff_inv(F, c1);
    FieldElem b = ff_mul(F, c1i, g[1]);
    FieldElem c = ff_mul(F, c1i, g[0]);
    FieldElem cb2 = ff_sub(F, c, ff_mul(F, b, b));
    FieldElem bc = ff_mul(F, b, c);
    FPoly E = {ff_neg(F, bc), cb2, ff_zero(F), ff_one(F)};
    QElem Eq = q_from_fpoly(ctxp, E);
    // E^P = w0 + w1 x^P with w0 = alpha - (bc)^P, w1 = (c-b^2)^P
    RElem w0 = r_sub(F, ctx.alpha, r_from_field(F, ff_pow(F, bc, P)));
    FieldElem w1 = ff_pow(F, cb2, P);
    // (w0 + w1 y)^-1 = (w0^2 - w0 w1 y + w1^2 y^2) (w0^3 + w1^3 alpha)^-1, y = x^P
    RPoly num = rp_monomial(F, 0, r_mul(F, w0, w0));
    num = rp_add(F, num, rp_monomial(F, P, r_neg(F, r_scale(F, w1, w0))));
    num = rp_add(F, num, rp_monomial(F, 2 * P, r_from_field(F, ff_mul(F, w1, w1))));
    RElem denom = r_add(F, r_mul(F, w0, r_mul(F, w0, w0)),
                        r_scale(F, ff_mul(F, w1, ff_mul(F, w1, w1)), ctx.alpha));
    QElem EPinv = q_scale(r_inv(F, denom), q_make(ctxp, num));
    QElem xb = q_from_fpoly(ctxp, fp_x_minus(F, b));
    QElem res = q_mul(q_mul(xb, q_pow(Eq, P - 1)), EPinv);
    return q_scale(r_from_field(F, c1i), res);
}

AdicForm adic_expand(const QElem& a) {
    const QuotientCtx& ctx = *a.ctx;
    const FieldCtx& F = ctx.field;
    require(ctx.tag == CaseTag::NcV || ctx.tag == CaseTag::NcFull ||
                ctx.tag == CaseTag::NcUv,
            "UnsupportedCase", "adic normal form needs case NC_V, NC_FULL or NC_UV");
    i64 P = ctx.ps;
    RPolySplit sp = rp_split(F, a.rep);
    auto dig = [&](const FPoly& h) { return fp_theta_digits(F, ctx.alpha0, h, P); };
    std::vector<FPoly> d1 = dig(sp.h1), d2 = dig(sp.h2), d3 = dig(sp.h3), d4 = dig(sp.h4);
    AdicForm out;
    if (ctx.tag == CaseTag::NcUv) {
        // theta^P = a4 uv, so uv = a4^-1 theta^P
        FieldElem a4i = ff_inv(F, ctx.alpha.a4);
        out.f_digits.assign(2 * P, fp_zero());
        for (i64 k = 0; k < P; ++k) {
            out.f_digits[k] = d1[k];
            out.f_digits[P + k] = fp_scale(F, a4i, d4[k]);
        }
        out.u_digits.assign(d2.begin(), d2.begin() + P);
        out.v_digits.assign(d3.begin(), d3.begin() + P);
        return out;
    }
    out.f_digits.assign(2 * P, fp_zero());
    out.u_digits.assign(2 * P, fp_zero());
    for (i64 k = 0; k < P; ++k) {
        out.f_digits[k] = d1[k];
        out.u_digits[k] = d2[k];
    }
    if (ctx.tag == CaseTag::NcV) {
        // v = (c + d u) theta^P with c = a3^-1, d = -a4 a3^-2
        FieldElem c = ff_inv(F, ctx.alpha.a3);
        FieldElem d = ff_neg(F, ff_mul(F, ctx.alpha.a4, ff_mul(F, c, c)));
        for (i64 k = 0; k < P; ++k) {
            out.f_digits[P + k] = fp_scale(F, c, d3[k]);
            out.u_digits[P + k] =
                fp_add(F, fp_scale(F, d, d3[k]), fp_scale(F, c, d4[k]));
        }
    } else {
        // v = e3 theta^P - e3 a2 u - e3^2 a4 u theta^P with e3 = a3^-1
        FieldElem e3 = ff_inv(F, ctx.alpha.a3);
        FieldElem e3a2 = ff_mul(F, e3, ctx.alpha.a2);
        FieldElem e3e3a4 = ff_mul(F, ff_mul(F, e3, e3), ctx.alpha.a4);
        for (i64 k = 0; k < P; ++k) {
            out.f_digits[P + k] = fp_scale(F, e3, d3[k]);
            out.u_digits[k] = fp_sub(F, out.u_digits[k], fp_scale(F, e3a2, d3[k]));
            out.u_digits[P + k] = fp_sub(F, fp_scale(F, e3, d4[k]),
                                         fp_scale(F, e3e3a4, d3[k]));
        }
    }
    return out;
}

QElem adic_assemble(const QCtx& ctxp, const AdicForm& form) {
    const QuotientCtx& ctx = *ctxp;
    const FieldCtx& F = ctx.field;
    require(ctx.tag == CaseTag::NcV || ctx.tag == CaseTag::NcFull ||
                ctx.tag == CaseTag::NcUv,
            "UnsupportedCase", "adic normal form needs case NC_V, NC_FULL or NC_UV");
    i64 P = ctx.ps;
    bool uv_case = ctx.tag == CaseTag::NcUv;
    size_t want_f = 2 * P, want_u = uv_case ? P : 2 * P;
    size_t nv = form.v_digits.size(), nuv = form.uv_digits.size();
    require(form.f_digits.size() == want_f && form.u_digits.size() == want_u,
            "ShapeMismatch", "digit vector lengths do not match the ambient case");
    // eliminated slots may still carry a length-p^s vector (pre-elimination)
    require((uv_case ? nv == size_t(P) : (nv == 0 || nv == size_t(P))) &&
                (nuv == 0 || nuv == size_t(P)),
            "ShapeMismatch", "digit vector lengths do not match the ambient case");
    auto check_digits = [&](const std::vector<FPoly>& ds) {
        for (const auto& d : ds)
            require(fp_deg(fp_normalize(F, d)) <= 2, "DegreeTooLarge",
                    "adic digits must have degree <= 2");
    };
    check_digits(form.f_digits);
    check_digits(form.u_digits);
    check_digits(form.v_digits);
    check_digits(form.uv_digits);
    auto comp_elem = [&](const std::vector<FPoly>& digits, int comp) {
        FPoly part = fp_theta_series(F, ctx.alpha0, digits, 0);
        RPoly r(part.size(), r_zero(F));
        for (size_t i = 0; i < part.size(); ++i) {
            if (comp == 0) r[i].a1 = part[i];
            if (comp == 1) r[i].a2 = part[i];
            if (comp == 2) r[i].a3 = part[i];
            if (comp == 3) r[i].a4 = part[i];
        }
        return q_make(ctxp, std::move(r));
    };
    QElem acc = comp_elem(form.f_digits, 0);
    acc = q_add(acc, comp_elem(form.u_digits, 1));
    if (nv) acc = q_add(acc, comp_elem(form.v_digits, 2));
    if (nuv) acc = q_add(acc, comp_elem(form.uv_digits, 3));
    return acc;
}

} // namespace rrcc
