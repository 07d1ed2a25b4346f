#pragma once

#include "rrcc/oracle.hpp"

namespace rrcc {

// ideal types of the chain-of-squares classification; A0/A1 are the trivial
// ideals, B is u-only, C is principal with unit u-series z, D adds u theta^mu
enum class Kind { A0, A1, B, C, D };

std::string kind_name(Kind k);
Kind kind_from_name(const std::string& s);

// z digit series: digit kappa multiplies theta^(t+kappa); each digit is an
// FPoly of degree <= 2 (constant first, like every FPoly here)
using ZSeries = std::vector<FPoly>;

struct CodeSpec {
    Kind kind = Kind::A0;
    i64 ell = 0; // B, C, D
    i64 t = 0;   // C, D
    i64 mu = 0;  // D
    ZSeries z;   // C, D; empty means z = 0

    bool operator==(const CodeSpec&) const = default;
};

struct DualSpec {
    QCtx ambient; // the alpha^-1 ring
    std::vector<QElem> generators;
    std::string branch;        // formula family that produced the generators
    bool flagged = false;      // branch whose source statement needed repair
    bool oracle_checked = false;
};

struct CodeDescriptor {
    CodeSpec spec; // canonical form
    i64 im = 0;    // smallest e with u theta^e in the code
    i64 res_exp = 0;
    i64 tor_exp = 0;
    i64 dim_fp = 0;
    std::string eta; // code size p^dim_fp as a decimal string
    DualSpec dual;
};

// canonicalizes (trims z beyond the invariant window, drops trailing zero
// digits, resets t when z vanishes) and checks every range constraint.
// errors: UnsupportedCase (ambient not NC_V / NC_FULL), RangeViolation,
// ZNotInvertible, MuNotBelowIm
CodeSpec validate_spec(const QCtx& ctx, CodeSpec spec);

// the invariant that separates principal from non-principal ideals: smallest
// e with u theta^e in the PRINCIPAL part (kinds C and D use the underlying
// C generator); A0 -> 2 p^s, A1 -> 0, B -> ell
i64 smallest_torsion_exponent(const QCtx& ctx, const CodeSpec& spec);

// ideal generators in the primal ambient (validated spec)
std::vector<QElem> generators(const QCtx& ctx, const CodeSpec& spec);

// annihilator generators as raw (unreduced) polynomials plus branch info;
// the dual is generated by their reciprocals
struct AnnGens {
    std::vector<RPoly> raw;
    std::string branch;
    bool flagged = false;
};
AnnGens ann_generators(const QCtx& ctx, const CodeSpec& spec);

// synthesized dual; when the ambient F_p dimension is <= check_cap the
// generators are verified against oracle.inner_dual and FormulaDiscrepancy
// is raised on mismatch
DualSpec dual_spec(const QCtx& ctx, const CodeSpec& spec, i64 check_cap = 96);

CodeDescriptor describe(const QCtx& ctx, const CodeSpec& spec, i64 dual_check_cap = 96);

struct EnumOpts {
    i64 z_digit_bound = 1;
    i64 limit = 1000;
};
// canonical specs in order A0, A1, B by ell, C by (ell, t, z), D by
// (ell, t, mu, z); z ordered by digit count then lexicographically
std::vector<CodeSpec> enumerate_specs(const QCtx& ctx, const EnumOpts& opts);

// recover the canonical spec of a classified subspace (principal or not);
// requires S to be an ideal of a NC_V / NC_FULL ambient
CodeSpec reconstruct_spec(const SubspaceBasis& S);

// constacyclic shift sigma_alpha on coefficient words of length n
std::vector<RElem> shift_word(const QCtx& ctx, const std::vector<RElem>& word);

// direct-sum component of a cube-case ambient
struct CrtComponent {
    RPoly modulus; // monic factor of x^(3 p^s) - alpha
    i64 length = 0;
    bool constacyclic = false; // modulus has the shape x^length - unit
    RElem unit;                // set when constacyclic
};
// NotCube unless the ambient is a CUBE case
std::vector<CrtComponent> crt_decompose(const QCtx& ctx);

// predicted nilpotency index of x^3 - alpha0 from the unit's nilpotent part
// nu = alpha2 u + alpha3 v + alpha4 uv: p^s when nu = 0, 2 p^s when nu^2 = 0,
// 3 p^s otherwise ((x^3-alpha0)^{p^s} = nu in the ambient, any case tag)
i64 predicted_theta_nilpotency(const QCtx& ctx);

// p^e as a decimal string
std::string pow_decimal(i64 p, i64 e);

} // namespace rrcc
