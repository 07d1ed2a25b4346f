#pragma once

#include <optional>
#include <vector>

#include "rrcc/common.hpp"

namespace rrcc {

// dense linear algebra mod a small prime
struct FpMat {
    i64 p = 0;
    i64 cols = 0;
    std::vector<std::vector<i64>> rows;
};

// reduced row echelon form, zero rows dropped; rows end up sorted by pivot
void fp_rref(FpMat& M);
// rank assuming M is already in rref
inline i64 fp_rank(const FpMat& M) { return static_cast<i64>(M.rows.size()); }
// reduce v against an rref basis in place; returns true if v reduced to zero
bool fp_reduce_against(const FpMat& M, std::vector<i64>& v);
// try to insert v into the rref basis; returns true if the rank grew
bool fp_insert(FpMat& M, std::vector<i64> v);
// basis of the right kernel {x : M x = 0}, as an rref FpMat with M.cols columns
FpMat fp_kernel(const FpMat& M);
// solve M^T-style problem: find x with sum_i x_i rows[i] = target; empty
// optional if inconsistent
std::optional<std::vector<i64>> fp_solve_combination(const FpMat& M,
                                                     const std::vector<i64>& target);
// solve M x = b (rows[i] . x = b[i]); empty optional if inconsistent
std::optional<std::vector<i64>> fp_solve_linear(const FpMat& M, const std::vector<i64>& b);

} // namespace rrcc
