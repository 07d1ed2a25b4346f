#pragma once

#include "rrcc/gf.hpp"

namespace rrcc {

// element a1 + a2 u + a3 v + a4 uv of R = F_{p^m}[u,v]/(u^2, v^2, uv-vu)
struct RElem {
    FieldElem a1, a2, a3, a4;

    bool operator==(const RElem&) const = default;
};

RElem r_zero(const FieldCtx& F);
RElem r_one(const FieldCtx& F);
RElem r_from_field(const FieldCtx& F, const FieldElem& a1);
RElem r_make(FieldElem a1, FieldElem a2, FieldElem a3, FieldElem a4);

bool r_is_zero(const RElem& a);
// R is local: units are exactly the elements with a1 != 0
bool r_is_unit(const RElem& a);

RElem r_add(const FieldCtx& F, const RElem& a, const RElem& b);
RElem r_sub(const FieldCtx& F, const RElem& a, const RElem& b);
RElem r_neg(const FieldCtx& F, const RElem& a);
RElem r_mul(const FieldCtx& F, const RElem& a, const RElem& b);
RElem r_scale(const FieldCtx& F, const FieldElem& c, const RElem& a);
RElem r_inv(const FieldCtx& F, const RElem& a); // NotAUnit on non-units
RElem r_pow(const FieldCtx& F, RElem a, i64 e);

// u <-> v
RElem r_swap_uv(const RElem& a);

// a unit a is a cube iff a1 is a cube in the field; NotAUnit otherwise
bool r_is_cube(const FieldCtx& F, const RElem& a);
// some b with b^3 = a (canonical: built from ff_cube_root(a1)); postcondition
// checked
RElem r_cube_witness(const FieldCtx& F, const RElem& a);

} // namespace rrcc
