#pragma once

#include "rrcc/fplin.hpp"
#include "rrcc/quotient.hpp"

namespace rrcc {

// F_p row space of a code, rows kept in reduced row echelon form
struct SubspaceBasis {
    QCtx ctx;
    FpMat mat; // mat.cols == ambient_dim(*ctx)
};

// smallest subspace containing gens and closed under multiplication by x, u,
// v and the field generator: the ideal generated by gens
SubspaceBasis span_closure(const QCtx& ctx, const std::vector<QElem>& gens);
i64 subspace_dim(const SubspaceBasis& S);
bool member(const QElem& f, const SubspaceBasis& S);
bool subspace_equal(const SubspaceBasis& A, const SubspaceBasis& B);
SubspaceBasis full_space(const QCtx& ctx);

// {a : a s = 0 for every s in S}, computed as a progressive kernel of the
// multiplication maps of the basis rows; result is checked to be an ideal
SubspaceBasis annihilator(const SubspaceBasis& S);

// euclidean dual {y : sum_i x_i y_i = 0 in R for all x in S}, coordinates
// re-read in the alpha^-1 ambient
SubspaceBasis inner_dual(const SubspaceBasis& S, const QCtx& dctx);

// ideal of the dual ambient generated by the reciprocals of gens (zero
// generators are skipped)
SubspaceBasis reciprocal_ideal(const std::vector<QElem>& gens, const QCtx& dctx);

// header "p m s n dim", then one space-separated row per line
std::string export_matrix(const SubspaceBasis& S);

// F_p dimension of the ideal generated by gens in R[x]/(modulus), modulus
// monic over R; used for CRT component cross-checks
i64 generic_ideal_dim(const FieldCtx& F, const RPoly& modulus,
                      const std::vector<RPoly>& gens);

} // namespace rrcc
