#pragma once

#include <vector>

#include "rrcc/ring_r.hpp"

namespace rrcc {

// dense polynomials, constant-first, trailing zeros trimmed by normalize
using FPoly = std::vector<FieldElem>; // over F_{p^m}
using RPoly = std::vector<RElem>;     // over R

FPoly fp_normalize(const FieldCtx& F, FPoly a);
FPoly fp_zero();
FPoly fp_one(const FieldCtx& F);
FPoly fp_monomial(const FieldCtx& F, i64 deg, const FieldElem& c);
FPoly fp_x_minus(const FieldCtx& F, const FieldElem& r); // x - r
i64 fp_deg(const FPoly& a);                              // -1 for zero
bool fp_is_zero(const FPoly& a);
bool fp_eq(const FieldCtx& F, const FPoly& a, const FPoly& b);
FPoly fp_add(const FieldCtx& F, const FPoly& a, const FPoly& b);
FPoly fp_sub(const FieldCtx& F, const FPoly& a, const FPoly& b);
FPoly fp_neg(const FieldCtx& F, const FPoly& a);
FPoly fp_mul(const FieldCtx& F, const FPoly& a, const FPoly& b);
FPoly fp_scale(const FieldCtx& F, const FieldElem& c, const FPoly& a);
FPoly fp_shift(const FPoly& a, i64 k); // * x^k
// remainder and quotient by a monic divisor
std::pair<FPoly, FPoly> fp_divmod(const FieldCtx& F, FPoly a, const FPoly& b);
FPoly fp_pow(const FieldCtx& F, const FPoly& a, i64 e);
// inverse mod a monic modulus coprime with a (extended euclid); NotAUnit if
// the gcd is not constant
FPoly fp_inv_mod(const FieldCtx& F, const FPoly& a, const FPoly& modulus);

RPoly rp_normalize(RPoly a);
RPoly rp_zero();
RPoly rp_one(const FieldCtx& F);
RPoly rp_from_fpoly(const FieldCtx& F, const FPoly& a);
RPoly rp_monomial(const FieldCtx& F, i64 deg, const RElem& c);
i64 rp_deg(const RPoly& a);
bool rp_is_zero(const RPoly& a);
bool rp_eq(const RPoly& a, const RPoly& b);
RPoly rp_add(const FieldCtx& F, const RPoly& a, const RPoly& b);
RPoly rp_sub(const FieldCtx& F, const RPoly& a, const RPoly& b);
RPoly rp_neg(const FieldCtx& F, const RPoly& a);
RPoly rp_mul(const FieldCtx& F, const RPoly& a, const RPoly& b);
RPoly rp_scale(const FieldCtx& F, const RElem& c, const RPoly& a);
RPoly rp_shift(const RPoly& a, i64 k);
RPoly rp_pow(const FieldCtx& F, const RPoly& a, i64 e);
// u <-> v applied coefficient-wise
RPoly rp_swap_uv(const RPoly& a);

// component polynomials: f = h1 + u h2 + v h3 + uv h4
struct RPolySplit {
    FPoly h1, h2, h3, h4;
};
RPolySplit rp_split(const FieldCtx& F, const RPoly& f);
RPoly rp_join(const FieldCtx& F, const RPolySplit& s);

// reversal about the formal degree (position of the last stored nonzero
// coefficient); ZeroPolynomial on 0. the leading coefficient may be a zero
// divisor, reciprocal is still about the formal degree
RPoly rp_reciprocal(const RPoly& a);

// theta = x^3 - a0 helpers (the adic base used throughout)
FPoly fp_theta(const FieldCtx& F, const FieldElem& a0);
FPoly fp_theta_pow(const FieldCtx& F, const FieldElem& a0, i64 k);
// theta-adic digits of h (degree <= 2 each, constant digit first); result is
// padded with zero digits to at least min_count entries
std::vector<FPoly> fp_theta_digits(const FieldCtx& F, const FieldElem& a0,
                                   FPoly h, i64 min_count);
// sum_k digits[k] theta^(k+shift), as a plain polynomial
FPoly fp_theta_series(const FieldCtx& F, const FieldElem& a0,
                      const std::vector<FPoly>& digits, i64 shift);

// CRT factor list for x^(3 p^s) - alpha when alpha is a cube unit of R:
// q = 1 (mod 3): [x^P - b, x^P - d b, x^P - g b]   (P = p^s, b^3 = alpha)
// q = 2 (mod 3): [x^P - b, x^(2P) + b x^P + b^2]
// the product is checked against x^(3P) - alpha; ProductMismatch otherwise
std::vector<RPoly> crt_factorization(const FieldCtx& F, const RElem& alpha, i64 s);

} // namespace rrcc
