#pragma once

#include <random>
#include <string>

#include "rrcc/verify.hpp"

namespace rrcc::testutil {

// the desk-scale ambients every suite leans on
inline QCtx ctx_ncv() {
    FieldCtx F = field_new(7, 1);
    return make_quotient_ctx(F, 1,
                             r_make(ff_dec(F, 2), ff_zero(F), ff_dec(F, 3), ff_dec(F, 5)));
}

inline QCtx ctx_full_odd() {
    FieldCtx F = field_new(7, 1);
    return make_quotient_ctx(F, 1,
                             r_make(ff_dec(F, 2), ff_one(F), ff_dec(F, 3), ff_dec(F, 5)));
}

inline QCtx ctx_full_even() {
    FieldCtx F = field_new(2, 2);
    return make_quotient_ctx(F, 1, r_make(ff_gen(F), ff_one(F), ff_one(F), ff_zero(F)));
}

inline QCtx ctx_uv() {
    FieldCtx F = field_new(7, 1);
    return make_quotient_ctx(F, 1,
                             r_make(ff_dec(F, 2), ff_zero(F), ff_zero(F), ff_dec(F, 5)));
}

inline QCtx ctx_cube7() {
    FieldCtx F = field_new(7, 1);
    return make_quotient_ctx(F, 1, r_one(F));
}

inline QCtx ctx_cube2() {
    FieldCtx F = field_new(2, 1);
    return make_quotient_ctx(F, 1, r_one(F));
}

template <class Fn>
std::string err_code(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return "no-error";
}

inline CodeSpec mk(Kind k, i64 ell = 0, i64 t = 0, i64 mu = 0, ZSeries z = {}) {
    return CodeSpec{k, ell, t, mu, std::move(z)};
}

// z digit c2 x^2 + c1 x + c0, coefficients given as field encodings
inline FPoly dig(const FieldCtx& F, i64 c0, i64 c1 = 0, i64 c2 = 0) {
    return fp_normalize(F, FPoly{ff_dec(F, c0), ff_dec(F, c1), ff_dec(F, c2)});
}

inline RElem rand_relem(std::mt19937_64& rng, const FieldCtx& F) {
    auto c = [&] { return ff_dec(F, rnd_below(rng, F.q)); };
    return r_make(c(), c(), c(), c());
}

inline QElem rand_qelem(std::mt19937_64& rng, const QCtx& ctx) {
    std::vector<i64> coords(static_cast<size_t>(ambient_dim(*ctx)));
    for (auto& v : coords) v = rnd_below(rng, ctx->field.p);
    return q_unflatten(ctx, coords);
}

} // namespace rrcc::testutil
