#include "rrcc/ring_r.hpp"

namespace rrcc {

RElem r_zero(const FieldCtx& F) {
    return {ff_zero(F), ff_zero(F), ff_zero(F), ff_zero(F)};
}

RElem r_one(const FieldCtx& F) {
    return {ff_one(F), ff_zero(F), ff_zero(F), ff_zero(F)};
}

RElem r_from_field(const FieldCtx& F, const FieldElem& a1) {
    return {a1, ff_zero(F), ff_zero(F), ff_zero(F)};
}

RElem r_make(FieldElem a1, FieldElem a2, FieldElem a3, FieldElem a4) {
    return {std::move(a1), std::move(a2), std::move(a3), std::move(a4)};
}

bool r_is_zero(const RElem& a) {
    return ff_is_zero(a.a1) && ff_is_zero(a.a2) && ff_is_zero(a.a3) && ff_is_zero(a.a4);
}

bool r_is_unit(const RElem& a) { return !ff_is_zero(a.a1); }

RElem r_add(const FieldCtx& F, const RElem& a, const RElem& b) {
    return {ff_add(F, a.a1, b.a1), ff_add(F, a.a2, b.a2),
            ff_add(F, a.a3, b.a3), ff_add(F, a.a4, b.a4)};
}

RElem r_sub(const FieldCtx& F, const RElem& a, const RElem& b) {
    return {ff_sub(F, a.a1, b.a1), ff_sub(F, a.a2, b.a2),
            ff_sub(F, a.a3, b.a3), ff_sub(F, a.a4, b.a4)};
}

RElem r_neg(const FieldCtx& F, const RElem& a) {
    return {ff_neg(F, a.a1), ff_neg(F, a.a2), ff_neg(F, a.a3), ff_neg(F, a.a4)};
}

RElem r_mul(const FieldCtx& F, const RElem& x, const RElem& y) {
    RElem z;
    z.a1 = ff_mul(F, x.a1, y.a1);
    z.a2 = ff_add(F, ff_mul(F, x.a1, y.a2), ff_mul(F, x.a2, y.a1));
    z.a3 = ff_add(F, ff_mul(F, x.a1, y.a3), ff_mul(F, x.a3, y.a1));
    z.a4 = ff_add(F, ff_add(F, ff_mul(F, x.a1, y.a4), ff_mul(F, x.a4, y.a1)),
                  ff_add(F, ff_mul(F, x.a2, y.a3), ff_mul(F, x.a3, y.a2)));
    return z;
}

RElem r_scale(const FieldCtx& F, const FieldElem& c, const RElem& a) {
    return {ff_mul(F, c, a.a1), ff_mul(F, c, a.a2), ff_mul(F, c, a.a3),
            ff_mul(F, c, a.a4)};
}

RElem r_inv(const FieldCtx& F, const RElem& a) {
    require(r_is_unit(a), "NotAUnit", "inverse of a non-unit of R");
    // a = a1 (1 + n) with n nilpotent of index <= 3, so a^-1 = a1^-1 (1 - n + n^2)
    FieldElem c = ff_inv(F, a.a1);
    RElem n = r_scale(F, c, {ff_zero(F), a.a2, a.a3, a.a4});
    RElem n2 = r_mul(F, n, n);
    RElem inv = r_scale(F, c, r_add(F, r_sub(F, r_one(F), n), n2));
    require(r_mul(F, a, inv) == r_one(F), "InternalError", "r_inv postcondition failed");
    return inv;
}

RElem r_pow(const FieldCtx& F, RElem a, i64 e) {
    require(e >= 0, "InvalidInput", "negative exponent");
    RElem r = r_one(F);
    while (e > 0) {
        if (e & 1) r = r_mul(F, r, a);
        a = r_mul(F, a, a);
        e >>= 1;
    }
    return r;
}

RElem r_swap_uv(const RElem& a) { return {a.a1, a.a3, a.a2, a.a4}; }

bool r_is_cube(const FieldCtx& F, const RElem& a) {
    require(r_is_unit(a), "NotAUnit", "cube test is for units");
    return ff_is_cube(F, a.a1);
}

RElem r_cube_witness(const FieldCtx& F, const RElem& a) {
    require(r_is_cube(F, a), "NotACube", "unit is not a cube in R");
    // b1 = cube root of a1, then solve component-wise: (b1+b2u+b3v+b4uv)^3 = a
    // gives 3 b1^2 b2 = a2, 3 b1^2 b3 = a3, 3 b1^2 b4 + 6 b1 b2 b3 = a4
    FieldElem b1 = ff_cube_root(F, a.a1);
    FieldElem three_inv = ff_inv(F, ff_from_int(F, 3));
    FieldElem b1sq_inv = ff_inv(F, ff_mul(F, b1, b1));
    FieldElem k = ff_mul(F, three_inv, b1sq_inv);
    FieldElem b2 = ff_mul(F, k, a.a2);
    FieldElem b3 = ff_mul(F, k, a.a3);
    FieldElem six_b1 = ff_mul(F, ff_from_int(F, 6), b1);
    FieldElem b4 = ff_mul(F, k, ff_sub(F, a.a4, ff_mul(F, six_b1, ff_mul(F, b2, b3))));
    RElem b = {b1, b2, b3, b4};
    require(r_pow(F, b, 3) == a, "InternalError", "cube witness postcondition failed");
    return b;
}

} // namespace rrcc
