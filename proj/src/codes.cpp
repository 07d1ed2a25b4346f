#include "rrcc/codes.hpp"

#include <algorithm>

namespace rrcc {

std::string kind_name(Kind k) {
    switch (k) {
    case Kind::A0: return "A0";
    case Kind::A1: return "A1";
    case Kind::B: return "B";
    case Kind::C: return "C";
    case Kind::D: return "D";
    }
    fail("InternalError", "unknown kind");
}

Kind kind_from_name(const std::string& s) {
    if (s == "A0") return Kind::A0;
    if (s == "A1") return Kind::A1;
    if (s == "B") return Kind::B;
    if (s == "C") return Kind::C;
    if (s == "D") return Kind::D;
    fail("InvalidInput", "unknown code kind \"" + s + "\"");
}

namespace {

bool odd_full(const QuotientCtx& C) {
    return C.tag == CaseTag::NcFull && C.field.p != 2;
}

void check_classifiable(const QuotientCtx& C) {
    require(C.tag == CaseTag::NcV || C.tag == CaseTag::NcFull, "UnsupportedCase",
            "classification covers NC_V and NC_FULL ambients only, got " + case_name(C.tag));
}

// z + 2 alpha2 as a digit series (only meaningful in odd NC_FULL ambients)
ZSeries boundary_series(const QuotientCtx& C, const ZSeries& z) {
    const FieldCtx& F = C.field;
    ZSeries s = z;
    if (s.empty()) s.push_back(fp_zero());
    s[0] = fp_add(F, s[0], FPoly{ff_add(F, C.alpha.a2, C.alpha.a2)});
    for (auto& d : s) d = fp_normalize(F, d);
    return s;
}

// theta-valuation of z + 2 alpha2; kInfinite when the sum vanishes
i64 boundary_j(const QuotientCtx& C, const ZSeries& z) {
    ZSeries s = boundary_series(C, z);
    for (i64 k = 0; k < static_cast<i64>(s.size()); ++k)
        if (!fp_is_zero(s[k])) return k;
    return kInfinite;
}

// Im of the principal generator theta^ell + u theta^t z. At the odd NC_FULL
// boundary ell = p^s + t the exponent drops from p^s + t exactly as far as
// the valuation j of z + 2 alpha2 allows: Im = p^s + min(t, j).
i64 im_c(const QuotientCtx& C, i64 ell, i64 t, const ZSeries& z) {
    const i64 P = C.ps, N = 2 * P;
    if (!odd_full(C)) {
        if (z.empty()) return ell;
        return std::min(ell, N + t - ell);
    }
    if (z.empty()) return std::min(ell, P);
    if (ell != P + t) return std::min({ell, P, N + t - ell});
    i64 j = boundary_j(C, z);
    return P + (j == kInfinite ? t : std::min(t, j));
}

void trim_series(ZSeries& z, i64 window) {
    if (static_cast<i64>(z.size()) > window) z.resize(std::max<i64>(window, 0));
    while (!z.empty() && fp_is_zero(z.back())) z.pop_back();
}

QElem normalize_gen(QElem g) {
    // scale by a field unit so the leading coefficient starts with 1
    const FieldCtx& F = g.ctx->field;
    for (i64 i = static_cast<i64>(g.rep.size()) - 1; i >= 0; --i) {
        const RElem& r = g.rep[i];
        for (const FieldElem* c : {&r.a1, &r.a2, &r.a3, &r.a4}) {
            if (ff_is_zero(*c)) continue;
            return q_scale(r_from_field(F, ff_inv(F, *c)), g);
        }
    }
    return g;
}

} // namespace

CodeSpec validate_spec(const QCtx& ctx, CodeSpec sp) {
    const QuotientCtx& C = *ctx;
    check_classifiable(C);
    const FieldCtx& F = C.field;
    const i64 N = 2 * C.ps;

    for (auto& d : sp.z) {
        require(fp_deg(d) <= 2, "RangeViolation", "z digit of degree > 2");
        for (const auto& c : d) {
            require(static_cast<i64>(c.size()) == F.m, "RangeViolation",
                    "z digit coefficient has the wrong field width");
            for (i64 x : c)
                require(0 <= x && x < F.p, "RangeViolation", "z digit coefficient out of range");
        }
        d = fp_normalize(F, d);
    }
    while (!sp.z.empty() && fp_is_zero(sp.z.back())) sp.z.pop_back();

    switch (sp.kind) {
    case Kind::A0:
    case Kind::A1:
        sp.ell = 0;
        sp.t = 0;
        sp.mu = 0;
        sp.z.clear();
        return sp;
    case Kind::B:
        require(0 <= sp.ell && sp.ell <= N - 1, "RangeViolation",
                "Type B needs 0 <= ell <= 2 p^s - 1");
        sp.t = 0;
        sp.mu = 0;
        sp.z.clear();
        return sp;
    case Kind::C: {
        require(1 <= sp.ell && sp.ell <= N - 1, "RangeViolation",
                "Type C needs 1 <= ell <= 2 p^s - 1");
        sp.mu = 0;
        if (sp.z.empty()) {
            sp.t = 0;
            return sp;
        }
        require(0 <= sp.t && sp.t < sp.ell, "RangeViolation", "Type C needs 0 <= t < ell");
        require(!fp_is_zero(sp.z.front()), "ZNotInvertible", "z digit 0 must be nonzero");
        trim_series(sp.z, im_c(C, sp.ell, sp.t, sp.z) - sp.t);
        if (sp.z.empty()) sp.t = 0;
        return sp;
    }
    case Kind::D: {
        require(1 <= sp.ell && sp.ell <= N - 1, "RangeViolation",
                "Type D needs 1 <= ell <= 2 p^s - 1");
        require(sp.mu >= 0, "RangeViolation", "Type D needs mu >= 0");
        if (!sp.z.empty()) {
            require(0 <= sp.t && sp.t < sp.ell, "RangeViolation", "Type D needs 0 <= t < ell");
            require(!fp_is_zero(sp.z.front()), "ZNotInvertible", "z digit 0 must be nonzero");
            trim_series(sp.z, sp.mu - sp.t);
        }
        if (sp.z.empty()) sp.t = 0;
        require(sp.mu < im_c(C, sp.ell, sp.t, sp.z), "MuNotBelowIm",
                "Type D needs mu < Im of the principal part");
        return sp;
    }
    }
    fail("InternalError", "unreachable");
}

i64 smallest_torsion_exponent(const QCtx& ctx, const CodeSpec& spec) {
    CodeSpec sp = validate_spec(ctx, spec);
    switch (sp.kind) {
    case Kind::A0: return 2 * ctx->ps;
    case Kind::A1: return 0;
    case Kind::B: return sp.ell;
    case Kind::C:
    case Kind::D: return im_c(*ctx, sp.ell, sp.t, sp.z);
    }
    fail("InternalError", "unreachable");
}

std::vector<QElem> generators(const QCtx& ctx, const CodeSpec& spec) {
    CodeSpec sp = validate_spec(ctx, spec);
    const QuotientCtx& C = *ctx;
    const FieldCtx& F = C.field;
    switch (sp.kind) {
    case Kind::A0: return {q_zero(ctx)};
    case Kind::A1: return {q_one(ctx)};
    case Kind::B: return {q_u_times(ctx, fp_theta_pow(F, C.alpha0, sp.ell))};
    case Kind::C:
    case Kind::D: {
        RPolySplit s;
        s.h1 = fp_theta_pow(F, C.alpha0, sp.ell);
        s.h2 = sp.z.empty() ? fp_zero() : fp_theta_series(F, C.alpha0, sp.z, sp.t);
        s.h3 = fp_zero();
        s.h4 = fp_zero();
        std::vector<QElem> out{q_make(ctx, rp_join(F, s))};
        if (sp.kind == Kind::D)
            out.push_back(q_u_times(ctx, fp_theta_pow(F, C.alpha0, sp.mu)));
        return out;
    }
    }
    fail("InternalError", "unreachable");
}

AnnGens ann_generators(const QCtx& ctx, const CodeSpec& spec) {
    CodeSpec sp = validate_spec(ctx, spec);
    const QuotientCtx& C = *ctx;
    const FieldCtx& F = C.field;
    const i64 P = C.ps, N = 2 * P;
    const FieldElem a0 = C.alpha0;
    const FieldElem ta2 = ff_add(F, C.alpha.a2, C.alpha.a2); // 2 alpha2

    auto TH = [&](i64 k) { return fp_theta_pow(F, a0, k); };
    auto SER = [&](const ZSeries& d, i64 sh) { return fp_theta_series(F, a0, d, sh); };
    auto FU = [&](FPoly f, FPoly g) {
        RPolySplit s{std::move(f), std::move(g), fp_zero(), fp_zero()};
        return rp_join(F, s);
    };
    auto U = [&](FPoly g) { return FU(fp_zero(), std::move(g)); };
    auto usub = [&](std::initializer_list<FPoly> parts) {
        FPoly g = fp_zero();
        for (const auto& part : parts) g = fp_add(F, g, part);
        return fp_neg(F, g);
    };

    AnnGens out;
    switch (sp.kind) {
    case Kind::A0:
        out.raw = {rp_one(F)};
        out.branch = "A0";
        return out;
    case Kind::A1:
        out.raw = {};
        out.branch = "A1";
        return out;
    case Kind::B:
        out.raw = {rp_from_fpoly(F, TH(N - sp.ell)), U(fp_one(F))};
        out.branch = "B";
        return out;
    default: break;
    }

    const i64 L = sp.ell, t = sp.t;
    if (sp.kind == Kind::C) {
        if (!odd_full(C)) {
            if (sp.z.empty()) {
                // the published statement of this branch carries no exponent;
                // the dimension-correct annihilator is theta^(N - ell)
                out.raw = {rp_from_fpoly(F, TH(N - L))};
                out.branch = "C.z0";
                out.flagged = true;
            } else if (2 * L <= N + t) {
                out.raw = {FU(TH(N - L), usub({SER(sp.z, N - 2 * L + t)}))};
                out.branch = "C.chi1";
            } else {
                out.raw = {FU(TH(L - t), usub({SER(sp.z, 0)})), U(TH(N - L))};
                out.branch = "C.chi2";
            }
            return out;
        }
        if (sp.z.empty()) {
            if (L <= P) {
                out.raw = {FU(TH(N - L), usub({fp_scale(F, ta2, TH(P - L))}))};
                out.branch = "C.phi1";
            } else {
                out.raw = {FU(TH(P), usub({FPoly{ta2}})), U(TH(N - L))};
                out.branch = "C.phi2";
            }
            return out;
        }
        if (L == P + t) {
            // boundary: the theta^P head folds into the u-series, leaving
            // z + 2 alpha2 = theta^j w; the annihilator follows j against t
            const i64 j = boundary_j(C, sp.z);
            out.branch = "C.phi6";
            out.flagged = true;
            if (j == kInfinite) {
                out.raw = {rp_from_fpoly(F, TH(P - t))};
            } else {
                ZSeries S = boundary_series(C, sp.z);
                S.erase(S.begin(), S.begin() + j);
                if (j >= t)
                    out.raw = {FU(TH(P - t), usub({SER(S, j - t)}))};
                else
                    out.raw = {FU(TH(P - j), usub({SER(S, 0)})), U(TH(P - t))};
            }
            return out;
        }
        if (L < P) {
            out.raw = {FU(TH(N - L),
                          usub({fp_scale(F, ta2, TH(P - L)), SER(sp.z, N + t - 2 * L)}))};
            out.branch = "C.phi3";
        } else if (L < P + t) {
            out.raw = {FU(TH(P), usub({FPoly{ta2}, SER(sp.z, P + t - L)})), U(TH(N - L))};
            out.branch = "C.phi4";
        } else {
            out.raw = {FU(TH(L - t), usub({fp_scale(F, ta2, TH(L - P - t)), SER(sp.z, 0)})),
                       U(TH(N - L))};
            out.branch = "C.phi5";
        }
        return out;
    }

    // Kind::D: the principal-part annihilator head with mu in place of Im,
    // plus u theta^(N - ell)
    const i64 mu = sp.mu;
    if (!odd_full(C)) {
        FPoly upart = sp.z.empty() ? fp_zero() : usub({SER(sp.z, N + t - L - mu)});
        out.raw = {FU(TH(N - mu), std::move(upart)), U(TH(N - L))};
        out.branch = "D.phi";
        return out;
    }
    if (!sp.z.empty() && L == P + t) {
        const i64 j = boundary_j(C, sp.z);
        out.branch = "D.psi";
        out.flagged = true;
        FPoly upart = fp_zero();
        if (j != kInfinite) {
            ZSeries S = boundary_series(C, sp.z);
            S.erase(S.begin(), S.begin() + j);
            upart = usub({SER(S, P - mu + j)});
        }
        out.raw = {FU(TH(N - mu), std::move(upart)), U(TH(N - L))};
        return out;
    }
    FPoly upart = fp_scale(F, ta2, TH(P - mu));
    if (!sp.z.empty()) upart = fp_add(F, upart, SER(sp.z, N + t - L - mu));
    out.raw = {FU(TH(N - mu), fp_neg(F, upart)), U(TH(N - L))};
    out.branch = "D.psi";
    return out;
}

DualSpec dual_spec(const QCtx& ctx, const CodeSpec& spec, i64 check_cap) {
    CodeSpec sp = validate_spec(ctx, spec);
    AnnGens ag = ann_generators(ctx, sp);
    QCtx dctx = dual_ctx(ctx);

    DualSpec out;
    out.ambient = dctx;
    out.branch = ag.branch;
    out.flagged = ag.flagged;
    for (auto& raw : ag.raw) {
        RPoly r = rp_normalize(std::move(raw));
        if (rp_is_zero(r)) continue;
        out.generators.push_back(normalize_gen(q_make(dctx, rp_reciprocal(r))));
    }

    if (ambient_dim(*ctx) <= check_cap) {
        SubspaceBasis code = span_closure(ctx, generators(ctx, sp));
        SubspaceBasis truth = inner_dual(code, dctx);
        SubspaceBasis formula = span_closure(dctx, out.generators);
        if (!subspace_equal(truth, formula))
            fail("FormulaDiscrepancy",
                 "dual branch " + ag.branch + " disagrees with the inner-product dual");
        out.oracle_checked = true;
    }
    return out;
}

CodeDescriptor describe(const QCtx& ctx, const CodeSpec& spec, i64 dual_check_cap) {
    CodeSpec sp = validate_spec(ctx, spec);
    const QuotientCtx& C = *ctx;
    const i64 N = 2 * C.ps;

    CodeDescriptor d;
    d.spec = sp;
    d.im = smallest_torsion_exponent(ctx, sp);
    switch (sp.kind) {
    case Kind::A0: d.res_exp = N; d.tor_exp = N; break;
    case Kind::A1: d.res_exp = 0; d.tor_exp = 0; break;
    case Kind::B: d.res_exp = N; d.tor_exp = sp.ell; break;
    case Kind::C: d.res_exp = sp.ell; d.tor_exp = d.im; break;
    case Kind::D: d.res_exp = sp.ell; d.tor_exp = sp.mu; break;
    }
    d.dim_fp = 3 * C.field.m * (4 * C.ps - d.res_exp - d.tor_exp);
    d.eta = pow_decimal(C.field.p, d.dim_fp);
    d.dual = dual_spec(ctx, sp, dual_check_cap);
    return d;
}

std::vector<CodeSpec> enumerate_specs(const QCtx& ctx, const EnumOpts& opts) {
    const QuotientCtx& C = *ctx;
    check_classifiable(C);
    const FieldCtx& F = C.field;
    const i64 P = C.ps, N = 2 * P;
    const i64 q = F.q, q3 = q * q * q;

    std::vector<CodeSpec> out;
    auto fullv = [&] { return static_cast<i64>(out.size()) >= opts.limit; };
    auto push = [&](CodeSpec sp) {
        if (!fullv()) out.push_back(std::move(sp));
    };

    push(CodeSpec{Kind::A0, 0, 0, 0, {}});
    push(CodeSpec{Kind::A1, 0, 0, 0, {}});
    for (i64 l = 0; l <= N - 1 && !fullv(); ++l) push(CodeSpec{Kind::B, l, 0, 0, {}});

    auto digit_of = [&](i64 v) {
        FPoly d{ff_dec(F, v % q), ff_dec(F, (v / q) % q), ff_dec(F, v / (q * q))};
        return fp_normalize(F, d);
    };
    // z tuples by digit count, then lexicographically by the (x^2, x, const)
    // encodings of each digit; digit 0 and the last digit are nonzero
    auto for_each_z = [&](i64 max_count, auto&& fn) {
        std::vector<i64> vals;
        auto rec = [&](auto&& self, i64 count) -> bool {
            if (static_cast<i64>(vals.size()) == count) {
                ZSeries z(vals.size());
                for (size_t i = 0; i < vals.size(); ++i) z[i] = digit_of(static_cast<i64>(vals[i]));
                return fn(std::move(z));
            }
            const bool skip_zero = vals.empty() || static_cast<i64>(vals.size()) == count - 1;
            for (i64 v = 0; v < q3; ++v) {
                if (v == 0 && skip_zero) continue;
                vals.push_back(v);
                const bool go = self(self, count);
                vals.pop_back();
                if (!go) return false;
            }
            return true;
        };
        for (i64 c = 1; c <= max_count; ++c)
            if (!rec(rec, c)) return;
    };
    auto try_push = [&](CodeSpec cand) -> bool {
        try {
            CodeSpec v = validate_spec(ctx, cand);
            if (v == cand) push(std::move(v));
        } catch (const Error&) {
            // non-canonical or out-of-range candidate; a canonical twin is
            // emitted elsewhere in the stream
        }
        return !fullv();
    };

    for (i64 l = 1; l <= N - 1 && !fullv(); ++l) {
        push(CodeSpec{Kind::C, l, 0, 0, {}});
        if (opts.z_digit_bound < 1) continue;
        for (i64 t = 0; t < l && !fullv(); ++t) {
            i64 win_hi;
            if (!odd_full(C)) win_hi = std::min(l, N + t - l) - t;
            else if (l == P + t) win_hi = P;
            else win_hi = std::min({l, P, N + t - l}) - t;
            const i64 maxc = std::min(opts.z_digit_bound, win_hi);
            if (maxc < 1) continue;
            for_each_z(maxc, [&](ZSeries z) {
                return try_push(CodeSpec{Kind::C, l, t, 0, std::move(z)});
            });
        }
    }

    for (i64 l = 1; l <= N - 1 && !fullv(); ++l) {
        const i64 im_z0 = im_c(C, l, 0, {});
        for (i64 t = 0; t < l && !fullv(); ++t) {
            i64 im_hi;
            if (!odd_full(C)) im_hi = std::min(l, N + t - l);
            else if (l == P + t) im_hi = P + t;
            else im_hi = std::min({l, P, N + t - l});
            const i64 mu_hi = std::max(t == 0 ? im_z0 : 0, im_hi) - 1;
            for (i64 mu = 0; mu <= mu_hi && !fullv(); ++mu) {
                if (t == 0 && mu < im_z0) push(CodeSpec{Kind::D, l, 0, mu, {}});
                if (opts.z_digit_bound < 1 || mu < t + 1) continue;
                const i64 maxc = std::min(opts.z_digit_bound, mu - t);
                for_each_z(maxc, [&](ZSeries z) {
                    return try_push(CodeSpec{Kind::D, l, t, mu, std::move(z)});
                });
            }
        }
    }
    return out;
}

CodeSpec reconstruct_spec(const SubspaceBasis& S) {
    const QCtx ctx = S.ctx;
    const QuotientCtx& C = *ctx;
    check_classifiable(C);
    const FieldCtx& F = C.field;
    const i64 P = C.ps, N = 2 * P, m = F.m;
    const i64 D = ambient_dim(C);
    const i64 dim = static_cast<i64>(S.mat.rows.size());
    if (dim == 0) return CodeSpec{Kind::A0, 0, 0, 0, {}};
    if (dim == D) return CodeSpec{Kind::A1, 0, 0, 0, {}};

    auto flat_f = [&](const AdicForm& a) {
        std::vector<i64> v(static_cast<size_t>(N * 3 * m), 0);
        for (i64 d = 0; d < static_cast<i64>(a.f_digits.size()); ++d)
            for (i64 c = 0; c < static_cast<i64>(a.f_digits[d].size()); ++c)
                for (i64 j = 0; j < static_cast<i64>(a.f_digits[d][c].size()); ++j)
                    v[static_cast<size_t>((d * 3 + c) * m + j)] = a.f_digits[d][c][j];
        return v;
    };

    FpMat proj{F.p, N * 3 * m, {}};
    FpMat fm{F.p, N * 3 * m, {}};
    for (const auto& row : S.mat.rows) {
        AdicForm a = adic_expand(q_unflatten(ctx, row));
        fm.rows.push_back(flat_f(a));
        fp_insert(proj, fm.rows.back());
    }
    const i64 res = N - static_cast<i64>(proj.rows.size()) / (3 * m);

    i64 tor = N;
    for (i64 e = 0; e < N; ++e)
        if (member(q_u_times(ctx, fp_theta_pow(F, C.alpha0, e)), S)) {
            tor = e;
            break;
        }

    if (res == N) return validate_spec(ctx, CodeSpec{Kind::B, tor, 0, 0, {}});

    // lift some member whose pure part is exactly theta^res; its u-series
    // carries t and the canonical z digits
    std::vector<i64> target(static_cast<size_t>(N * 3 * m), 0);
    target[static_cast<size_t>(res * 3 * m)] = 1;
    auto combo = fp_solve_combination(fm, target);
    require(combo.has_value(), "InternalError", "residue generator lift failed");
    std::vector<i64> acc(static_cast<size_t>(D), 0);
    for (size_t i = 0; i < combo->size(); ++i) {
        const i64 c = (*combo)[i];
        if (!c) continue;
        for (i64 j = 0; j < D; ++j)
            acc[static_cast<size_t>(j)] =
                (acc[static_cast<size_t>(j)] + c * S.mat.rows[i][static_cast<size_t>(j)]) % F.p;
    }
    AdicForm sa = adic_expand(q_unflatten(ctx, acc));
    // u theta^tor lies in S, so u digits from position tor on are
    // subtractable from the lift and never part of the canonical series
    for (i64 d = tor; d < static_cast<i64>(sa.u_digits.size()); ++d)
        sa.u_digits[static_cast<size_t>(d)] = {};

    i64 t0 = kInfinite;
    for (i64 d = 0; d < static_cast<i64>(sa.u_digits.size()); ++d)
        if (!fp_is_zero(sa.u_digits[d])) {
            t0 = d;
            break;
        }

    if (t0 == kInfinite) {
        CodeSpec c{Kind::C, res, 0, 0, {}};
        if (tor == smallest_torsion_exponent(ctx, c)) return c;
        return validate_spec(ctx, CodeSpec{Kind::D, res, 0, tor, {}});
    }
    ZSeries z(sa.u_digits.begin() + t0, sa.u_digits.end());
    while (!z.empty() && fp_is_zero(z.back())) z.pop_back();
    CodeSpec c = validate_spec(ctx, CodeSpec{Kind::C, res, t0, 0, z});
    if (tor == smallest_torsion_exponent(ctx, c)) return c;
    return validate_spec(ctx, CodeSpec{Kind::D, res, t0, tor, z});
}

std::vector<RElem> shift_word(const QCtx& ctx, const std::vector<RElem>& word) {
    const QuotientCtx& C = *ctx;
    require(static_cast<i64>(word.size()) == C.n, "LengthMismatch",
            "shift needs a word of length 3 p^s");
    std::vector<RElem> out(word.size());
    out[0] = r_mul(C.field, C.alpha, word.back());
    for (size_t i = 1; i < word.size(); ++i) out[i] = word[i - 1];
    return out;
}

std::vector<CrtComponent> crt_decompose(const QCtx& ctx) {
    const QuotientCtx& C = *ctx;
    require(C.tag == CaseTag::Cube, "NotCube", "CRT decomposition needs a cube-case ambient");
    std::vector<CrtComponent> out;
    for (auto& f : crt_factorization(C.field, C.alpha, C.s)) {
        CrtComponent comp;
        comp.length = rp_deg(f);
        bool sparse = true;
        for (i64 i = 1; i < comp.length; ++i)
            if (!r_is_zero(f[static_cast<size_t>(i)])) {
                sparse = false;
                break;
            }
        comp.constacyclic = sparse;
        comp.unit = sparse ? r_neg(C.field, f[0]) : r_zero(C.field);
        comp.modulus = std::move(f);
        out.push_back(std::move(comp));
    }
    return out;
}

i64 predicted_theta_nilpotency(const QCtx& ctx) {
    const QuotientCtx& C = *ctx;
    const FieldCtx& F = C.field;
    const RElem nu = r_make(ff_zero(F), C.alpha.a2, C.alpha.a3, C.alpha.a4);
    if (r_is_zero(nu)) return C.ps;
    if (r_is_zero(r_mul(F, nu, nu))) return 2 * C.ps;
    return 3 * C.ps;
}

std::string pow_decimal(i64 p, i64 e) {
    require(e >= 0, "RangeViolation", "pow_decimal needs a nonnegative exponent");
    const i64 B = 1000000000;
    std::vector<i64> digits{1}; // little-endian base 10^9
    for (i64 i = 0; i < e; ++i) {
        i64 carry = 0;
        for (auto& d : digits) {
            const i64 v = d * p + carry;
            d = v % B;
            carry = v / B;
        }
        while (carry) {
            digits.push_back(carry % B);
            carry /= B;
        }
    }
    std::string s = std::to_string(digits.back());
    for (i64 i = static_cast<i64>(digits.size()) - 2; i >= 0; --i) {
        const std::string part = std::to_string(digits[static_cast<size_t>(i)]);
        s += std::string(9 - part.size(), '0') + part;
    }
    return s;
}

} // namespace rrcc
