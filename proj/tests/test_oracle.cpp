#include <doctest.h>

#include <algorithm>

#include "util.hpp"

using namespace rrcc;
using namespace rrcc::testutil;

namespace {

std::vector<QElem> rows_of(const SubspaceBasis& S) {
    std::vector<QElem> out;
    for (const auto& row : S.mat.rows) out.push_back(q_unflatten(S.ctx, row));
    return out;
}

} // namespace

TEST_CASE("span closure landmarks") {
    QCtx ctx = ctx_ncv();
    const FieldCtx& F = ctx->field;
    CHECK(subspace_dim(span_closure(ctx, {q_zero(ctx)})) == 0);
    CHECK(subspace_dim(span_closure(ctx, {q_one(ctx)})) == 84);
    CHECK(subspace_dim(span_closure(ctx, {q_u_times(ctx, fp_one(F))})) == 42);
    CHECK(subspace_dim(full_space(ctx)) == 84);
}

TEST_CASE("membership witnesses") {
    QCtx ctx = ctx_ncv();
    const FieldCtx& F = ctx->field;
    QElem theta = q_from_fpoly(ctx, ctx->theta);
    QElem u = q_u_times(ctx, fp_one(F));
    SubspaceBasis T = span_closure(ctx, {theta});
    SubspaceBasis U = span_closure(ctx, {u});
    CHECK_FALSE(member(u, T));
    CHECK_FALSE(member(theta, U));
    CHECK(member(q_zero(ctx), T));
    CHECK(member(q_mul(theta, theta), T));
}

TEST_CASE("subspace equality") {
    QCtx ctx = ctx_ncv();
    const FieldCtx& F = ctx->field;
    QElem v = q_make(ctx, RPoly{r_make(ff_zero(F), ff_zero(F), ff_one(F), ff_zero(F))});
    CHECK(subspace_equal(span_closure(ctx, {v}), span_closure(ctx, {q_theta_pow(ctx, 7)})));
    QElem u = q_u_times(ctx, fp_one(F));
    CHECK_FALSE(subspace_equal(span_closure(ctx, {u}), span_closure(ctx, {v})));
}

TEST_CASE("closure is idempotent and order independent") {
    QCtx ctx = ctx_ncv();
    std::mt19937_64 rng(41);
    for (int k = 0; k < 10; ++k) {
        std::vector<QElem> gens{rand_qelem(rng, ctx), rand_qelem(rng, ctx),
                                rand_qelem(rng, ctx)};
        SubspaceBasis S = span_closure(ctx, gens);
        std::reverse(gens.begin(), gens.end());
        CHECK(subspace_equal(S, span_closure(ctx, gens)));
        CHECK(subspace_equal(S, span_closure(ctx, rows_of(S))));
    }
}

TEST_CASE("annihilator") {
    QCtx ctx = ctx_ncv();
    CHECK(subspace_dim(annihilator(span_closure(ctx, {q_zero(ctx)}))) == 84);
    CHECK(subspace_dim(annihilator(span_closure(ctx, {q_one(ctx)}))) == 0);

    std::mt19937_64 rng(42);
    for (int k = 0; k < 8; ++k) {
        SubspaceBasis S = span_closure(ctx, {rand_qelem(rng, ctx)});
        SubspaceBasis A = annihilator(S);
        CHECK(subspace_dim(A) == 84 - subspace_dim(S));
        // the annihilator is an ideal and biduality is exact at this scale
        CHECK(subspace_equal(A, span_closure(ctx, rows_of(A))));
        CHECK(subspace_equal(annihilator(A), S));
    }
}

TEST_CASE("inner dual and reciprocal ideal") {
    QCtx ctx = ctx_ncv();
    QCtx dctx = dual_ctx(ctx);
    const FieldCtx& F = ctx->field;

    CHECK(subspace_dim(inner_dual(span_closure(ctx, {q_zero(ctx)}), dctx)) == 84);
    CHECK(subspace_dim(reciprocal_ideal({q_one(dctx)}, ctx)) == 84);

    // <u theta^ell> reverses onto <u theta*^ell> up to a unit scale
    for (i64 ell : {0, 3, 9}) {
        SubspaceBasis lhs = reciprocal_ideal(
            {q_u_times(ctx, fp_theta_pow(F, ctx->alpha0, ell))}, dctx);
        SubspaceBasis rhs = span_closure(
            dctx, {q_u_times(dctx, fp_theta_pow(F, dctx->alpha0, ell))});
        CHECK(subspace_equal(lhs, rhs));
    }

    std::mt19937_64 rng(43);
    for (int k = 0; k < 8; ++k) {
        SubspaceBasis S = span_closure(ctx, {rand_qelem(rng, ctx)});
        SubspaceBasis D = inner_dual(S, dctx);
        CHECK(subspace_dim(S) + subspace_dim(D) == 84);
        CHECK(subspace_equal(inner_dual(D, ctx), S));
        CHECK(subspace_equal(reciprocal_ideal(rows_of(annihilator(S)), dctx), D));
    }
}

TEST_CASE("matrix export format") {
    QCtx ctx = ctx_full_even();
    SubspaceBasis S = span_closure(ctx, {q_u_times(ctx, fp_one(ctx->field))});
    std::string text = export_matrix(S);
    CHECK(text.substr(0, text.find('\n')) == "2 2 1 6 24");
    i64 lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    CHECK(lines == 25); // header plus one line per basis row
}

TEST_CASE("generic ideal dimension") {
    FieldCtx F = field_new(7, 1);
    RPoly modulus = rp_sub(F, rp_monomial(F, 7, r_one(F)), rp_one(F)); // x^7 - 1
    CHECK(generic_ideal_dim(F, modulus, {rp_one(F)}) == 28);
    CHECK(generic_ideal_dim(F, modulus, {rp_zero()}) == 0);
}
