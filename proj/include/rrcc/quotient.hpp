#pragma once

#include <memory>

#include "rrcc/poly.hpp"

namespace rrcc {

enum class CaseTag { Cube, NcV, NcFull, NcUv, NcOther };

std::string case_name(CaseTag t);

// ambient ring R[x]/(x^(3 p^s) - alpha), alpha a unit of R
struct QuotientCtx {
    FieldCtx field;
    i64 s = 0;
    i64 ps = 0; // p^s
    i64 n = 0;  // 3 p^s
    RElem alpha;
    FieldElem alpha0; // alpha0^(p^s) = alpha1
    CaseTag tag = CaseTag::Cube;

    FPoly theta; // x^3 - alpha0

    bool same(const QuotientCtx& o) const {
        return field == o.field && s == o.s && alpha == o.alpha;
    }
};

using QCtx = std::shared_ptr<const QuotientCtx>;

// derives alpha0 and the case tag; NotAUnit if alpha is not a unit
QCtx make_quotient_ctx(const FieldCtx& F, i64 s, const RElem& alpha);
// ambient of the dual code: unit alpha^-1 (same case tag)
QCtx dual_ctx(const QCtx& ctx);

struct QElem {
    QCtx ctx;
    RPoly rep; // reduced, degree < n
};

void check_same_ctx(const QElem& a, const QElem& b);

// fold x^n -> alpha until degree < n
RPoly q_reduce(const QuotientCtx& ctx, RPoly f);

QElem q_make(const QCtx& ctx, RPoly f);
QElem q_zero(const QCtx& ctx);
QElem q_one(const QCtx& ctx);
QElem q_from_fpoly(const QCtx& ctx, const FPoly& f);
// u * f, v * f, uv * f embeddings
QElem q_u_times(const QCtx& ctx, const FPoly& f);
QElem q_theta_pow(const QCtx& ctx, i64 k);

bool q_is_zero(const QElem& a);
bool q_eq(const QElem& a, const QElem& b);
QElem q_add(const QElem& a, const QElem& b);
QElem q_sub(const QElem& a, const QElem& b);
QElem q_neg(const QElem& a);
QElem q_mul(const QElem& a, const QElem& b);
QElem q_pow(const QElem& a, i64 e);
QElem q_scale(const RElem& c, const QElem& a);
QElem q_shift_x(const QElem& a); // * x (the constacyclic shift)

// smallest k >= 1 with a^k = 0, or kInfinite if none up to 3 p^s + 1
i64 nilpotency_index(const QElem& a);

// unit test: constant theta-digit of the F-part nonzero (local non-cube
// cases); multiplication-map rank over F_p in the cube case
bool q_is_unit(const QElem& a);
// NotAUnit on non-units; postcondition a * result = 1
QElem q_invert(const QElem& a);
// independent inversion path for field polynomials of degree <= 2 built on
// p^s-th power identities; used to cross-check q_invert (non-cube ambients)
QElem q_invert_quad_path(const QCtx& ctx, const FPoly& g);

// F_p coordinates of the ambient, index ((deg * 4 + comp) * m + j) with
// components ordered 1, u, v, uv
i64 ambient_dim(const QuotientCtx& ctx);
std::vector<i64> q_flatten(const QElem& a);
QElem q_unflatten(const QCtx& ctx, const std::vector<i64>& v);

// normal form against theta-digit axes. canonical shapes (as produced by
// adic_expand):
//   NC_V, NC_FULL: f_digits, u_digits of length 2 p^s; v/uv empty
//   NC_UV:         f_digits 2 p^s, u_digits p^s, v_digits p^s; uv empty
// every digit has degree <= 2 (DegreeTooLarge). adic_assemble additionally
// accepts not-yet-eliminated v/uv vectors of length p^s and folds them in.
// UnsupportedCase for CUBE and NC_OTHER
struct AdicForm {
    std::vector<FPoly> f_digits, u_digits, v_digits, uv_digits;
};
AdicForm adic_expand(const QElem& a);
QElem adic_assemble(const QCtx& ctx, const AdicForm& form);

} // namespace rrcc
