#include "rrcc/oracle.hpp"

#include <deque>
#include <sstream>

namespace rrcc {
namespace {

void check_ambient(const QCtx& a, const QCtx& b) {
    require(a && b && a->same(*b), "AmbientMismatch",
            "subspaces live in different ambient rings");
}

std::vector<QElem> multiplier_images(const QElem& a) {
    const FieldCtx& F = a.ctx->field;
    std::vector<QElem> out;
    out.push_back(q_shift_x(a));
    out.push_back(q_scale(r_make(ff_zero(F), ff_one(F), ff_zero(F), ff_zero(F)), a));
    out.push_back(q_scale(r_make(ff_zero(F), ff_zero(F), ff_one(F), ff_zero(F)), a));
    if (F.m > 1) out.push_back(q_scale(r_from_field(F, ff_gen(F)), a));
    return out;
}

} // namespace

SubspaceBasis span_closure(const QCtx& ctx, const std::vector<QElem>& gens) {
    SubspaceBasis S{ctx, FpMat{ctx->field.p, ambient_dim(*ctx), {}}};
    std::deque<QElem> work;
    for (const auto& g : gens) {
        check_ambient(ctx, g.ctx);
        work.push_back(g);
    }
    while (!work.empty()) {
        QElem cur = std::move(work.front());
        work.pop_front();
        if (!fp_insert(S.mat, q_flatten(cur))) continue;
        for (auto& img : multiplier_images(cur)) work.push_back(std::move(img));
    }
    return S;
}

i64 subspace_dim(const SubspaceBasis& S) { return fp_rank(S.mat); }

bool member(const QElem& f, const SubspaceBasis& S) {
    check_ambient(f.ctx, S.ctx);
    std::vector<i64> v = q_flatten(f);
    return fp_reduce_against(S.mat, v);
}

bool subspace_equal(const SubspaceBasis& A, const SubspaceBasis& B) {
    check_ambient(A.ctx, B.ctx);
    return A.mat.rows == B.mat.rows;
}

SubspaceBasis full_space(const QCtx& ctx) {
    i64 D = ambient_dim(*ctx);
    FpMat M{ctx->field.p, D, {}};
    for (i64 i = 0; i < D; ++i) {
        std::vector<i64> e(D, 0);
        e[i] = 1;
        M.rows.push_back(std::move(e));
    }
    return {ctx, std::move(M)};
}

SubspaceBasis annihilator(const SubspaceBasis& S) {
    const QCtx& ctx = S.ctx;
    i64 D = ambient_dim(*ctx);
    // kernel candidates, initially the whole ambient
    std::vector<QElem> K;
    for (i64 i = 0; i < D; ++i) {
        std::vector<i64> e(D, 0);
        e[i] = 1;
        K.push_back(q_unflatten(ctx, e));
    }
    for (const auto& row : S.mat.rows) {
        if (K.empty()) break;
        QElem b = q_unflatten(ctx, row);
        // columns of E live over the current candidates
        FpMat E{S.mat.p, static_cast<i64>(K.size()), {}};
        std::vector<std::vector<i64>> imgs;
        imgs.reserve(K.size());
        bool all_zero = true;
        for (const auto& k : K) {
            imgs.push_back(q_flatten(q_mul(k, b)));
            if (all_zero)
                for (i64 x : imgs.back())
                    if (x) { all_zero = false; break; }
        }
        if (all_zero) continue;
        E.rows.assign(D, std::vector<i64>(K.size(), 0));
        for (size_t i = 0; i < K.size(); ++i)
            for (i64 j = 0; j < D; ++j) E.rows[j][i] = imgs[i][j];
        FpMat ker = fp_kernel(E);
        std::vector<QElem> K2;
        K2.reserve(ker.rows.size());
        for (const auto& c : ker.rows) {
            QElem acc = q_zero(ctx);
            for (size_t i = 0; i < K.size(); ++i) {
                if (c[i] == 0) continue;
                acc = q_add(acc, q_scale(r_from_field(ctx->field,
                                                      ff_from_int(ctx->field, c[i])),
                                         K[i]));
            }
            K2.push_back(std::move(acc));
        }
        K = std::move(K2);
    }
    FpMat out{S.mat.p, D, {}};
    for (const auto& k : K) fp_insert(out, q_flatten(k));
    SubspaceBasis A{ctx, std::move(out)};
    // closure check: the annihilator of an ideal must itself be an ideal
    for (const auto& row : A.mat.rows) {
        QElem e = q_unflatten(ctx, row);
        for (const auto& img : multiplier_images(e))
            require(member(img, A), "InternalError", "annihilator is not an ideal");
    }
    return A;
}

SubspaceBasis inner_dual(const SubspaceBasis& S, const QCtx& dctx) {
    const QCtx& ctx = S.ctx;
    require(dctx->field == ctx->field && dctx->s == ctx->s, "AmbientMismatch",
            "dual ambient must share field and length");
    require(dctx->alpha == r_inv(ctx->field, ctx->alpha), "AmbientMismatch",
            "dual ambient must use alpha^-1");
    const FieldCtx& F = ctx->field;
    i64 D = ambient_dim(*ctx);
    i64 m = F.m;
    FpMat constraints{F.p, D, {}};
    for (const auto& row : S.mat.rows) {
        QElem x = q_unflatten(ctx, row);
        RPoly xr = x.rep;
        xr.resize(ctx->n, r_zero(F));
        // 4m scalar constraints per row: each F_p coordinate of sum_i x_i y_i
        std::vector<std::vector<i64>> block(4 * m, std::vector<i64>(D, 0));
        for (i64 pos = 0; pos < ctx->n; ++pos) {
            for (i64 comp = 0; comp < 4; ++comp) {
                for (i64 j = 0; j < m; ++j) {
                    RElem basis = r_zero(F);
                    FieldElem w(m, 0);
                    w[j] = 1;
                    if (comp == 0) basis.a1 = w;
                    if (comp == 1) basis.a2 = w;
                    if (comp == 2) basis.a3 = w;
                    if (comp == 3) basis.a4 = w;
                    RElem prod = r_mul(F, xr[pos], basis);
                    const FieldElem* comps[4] = {&prod.a1, &prod.a2, &prod.a3, &prod.a4};
                    i64 ycoord = (pos * 4 + comp) * m + j;
                    for (i64 oc = 0; oc < 4; ++oc)
                        for (i64 oj = 0; oj < m; ++oj)
                            block[oc * m + oj][ycoord] = (*comps[oc])[oj];
                }
            }
        }
        for (auto& r : block) fp_insert(constraints, std::move(r));
    }
    FpMat ker = fp_kernel(constraints);
    return {dctx, std::move(ker)};
}

SubspaceBasis reciprocal_ideal(const std::vector<QElem>& gens, const QCtx& dctx) {
    std::vector<QElem> rgens;
    for (const auto& g : gens) {
        if (q_is_zero(g)) continue;
        rgens.push_back(q_make(dctx, rp_reciprocal(g.rep)));
    }
    return span_closure(dctx, rgens);
}

std::string export_matrix(const SubspaceBasis& S) {
    std::ostringstream os;
    os << S.ctx->field.p << ' ' << S.ctx->field.m << ' ' << S.ctx->s << ' '
       << S.ctx->n << ' ' << subspace_dim(S) << '\n';
    for (const auto& row : S.mat.rows) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) os << ' ';
            os << row[j];
        }
        os << '\n';
    }
    return os.str();
}

i64 generic_ideal_dim(const FieldCtx& F, const RPoly& modulus,
                      const std::vector<RPoly>& gens) {
    RPoly M = rp_normalize(modulus);
    require(!M.empty() && M.back() == r_one(F), "InvalidInput",
            "modulus must be monic over R");
    i64 deg = rp_deg(M);
    i64 m = F.m;
    i64 D = 4 * m * deg;
    auto reduce = [&](RPoly f) {
        f = rp_normalize(std::move(f));
        while (rp_deg(f) >= deg) {
            i64 d = rp_deg(f);
            RElem lead = f.back();
            f.pop_back();
            for (i64 j = 0; j < deg; ++j)
                f[d - deg + j] = r_sub(F, f[d - deg + j], r_mul(F, lead, M[j]));
            f = rp_normalize(std::move(f));
        }
        return f;
    };
    auto flat = [&](const RPoly& f) {
        std::vector<i64> out(D, 0);
        for (size_t d = 0; d < f.size(); ++d) {
            const FieldElem* comps[4] = {&f[d].a1, &f[d].a2, &f[d].a3, &f[d].a4};
            for (i64 k = 0; k < 4; ++k)
                for (i64 j = 0; j < m; ++j)
                    out[(static_cast<i64>(d) * 4 + k) * m + j] = (*comps[k])[j];
        }
        return out;
    };
    FpMat S{F.p, D, {}};
    std::deque<RPoly> work;
    for (const auto& g : gens) work.push_back(reduce(g));
    RElem u = r_make(ff_zero(F), ff_one(F), ff_zero(F), ff_zero(F));
    RElem v = r_make(ff_zero(F), ff_zero(F), ff_one(F), ff_zero(F));
    while (!work.empty()) {
        RPoly cur = std::move(work.front());
        work.pop_front();
        if (!fp_insert(S, flat(cur))) continue;
        work.push_back(reduce(rp_shift(cur, 1)));
        work.push_back(rp_scale(F, u, cur));
        work.push_back(rp_scale(F, v, cur));
        if (m > 1) work.push_back(rp_scale(F, r_from_field(F, ff_gen(F)), cur));
    }
    return fp_rank(S);
}

} // namespace rrcc
