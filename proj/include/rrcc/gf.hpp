#pragma once

#include <optional>
#include <vector>

#include "rrcc/common.hpp"

namespace rrcc {

// element of F_{p^m}: coefficient vector length m, constant first
using FieldElem = std::vector<i64>;

struct FieldCtx {
    i64 p = 0;
    i64 m = 0;
    i64 q = 0;                // p^m
    std::vector<i64> modulus; // monic, length m+1, constant first

    bool operator==(const FieldCtx&) const = default;
};

// modulus defaults to the lexicographically smallest monic irreducible of
// degree m (constant-first coefficient order); for m=1 that is x itself
FieldCtx field_new(i64 p, i64 m, const std::optional<std::vector<i64>>& modulus = std::nullopt);

FieldElem ff_zero(const FieldCtx& F);
FieldElem ff_one(const FieldCtx& F);
FieldElem ff_from_int(const FieldCtx& F, i64 c);
// generator w of the polynomial basis (m >= 2)
FieldElem ff_gen(const FieldCtx& F);

bool ff_is_zero(const FieldElem& a);
bool ff_eq(const FieldElem& a, const FieldElem& b);

FieldElem ff_add(const FieldCtx& F, const FieldElem& a, const FieldElem& b);
FieldElem ff_sub(const FieldCtx& F, const FieldElem& a, const FieldElem& b);
FieldElem ff_neg(const FieldCtx& F, const FieldElem& a);
FieldElem ff_mul(const FieldCtx& F, const FieldElem& a, const FieldElem& b);
FieldElem ff_inv(const FieldCtx& F, const FieldElem& a); // DivisionByZero on 0
FieldElem ff_div(const FieldCtx& F, const FieldElem& a, const FieldElem& b);
FieldElem ff_pow(const FieldCtx& F, FieldElem a, i64 e); // e >= 0

// canonical integer encoding sum c_i p^i; element iteration order
i64 ff_enc(const FieldCtx& F, const FieldElem& a);
FieldElem ff_dec(const FieldCtx& F, i64 code);

// a = b^3 solvable? always true when p^m = 2 (mod 3); else Euler criterion
bool ff_is_cube(const FieldCtx& F, const FieldElem& a);
// smallest cube root in encoding order when several exist; NotACube otherwise
FieldElem ff_cube_root(const FieldCtx& F, const FieldElem& a);

// unique alpha0 with alpha0^(p^s) = a1; ZeroInput on 0
FieldElem ff_alpha0(const FieldCtx& F, const FieldElem& a1, i64 s);

// the two roots of x^2+x+1, delta first by encoding; WrongResidueClass
// unless p^m = 1 (mod 3)
std::pair<FieldElem, FieldElem> ff_delta_gamma(const FieldCtx& F);

// x^2 + cx + c^2 irreducible over F? ZeroInput on c = 0
bool ff_is_irreducible_quadratic(const FieldCtx& F, const FieldElem& c);

} // namespace rrcc
