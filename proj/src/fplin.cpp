#include "rrcc/fplin.hpp"

#include <algorithm>

namespace rrcc {
namespace {

i64 mod_norm(i64 v, i64 p) {
    v %= p;
    return v < 0 ? v + p : v;
}

i64 inv_mod(i64 a, i64 p) {
    i64 r = 1, b = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

i64 pivot_col(const std::vector<i64>& row) {
    for (size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) return static_cast<i64>(j);
    return -1;
}

} // namespace

void fp_rref(FpMat& M) {
    FpMat out{M.p, M.cols, {}};
    for (auto& row : M.rows) fp_insert(out, std::move(row));
    M = std::move(out);
}

bool fp_reduce_against(const FpMat& M, std::vector<i64>& v) {
    for (const auto& row : M.rows) {
        i64 pc = pivot_col(row);
        if (pc < 0) continue;
        i64 c = v[pc];
        if (c == 0) continue;
        for (i64 j = pc; j < M.cols; ++j) v[j] = mod_norm(v[j] - c * row[j], M.p);
    }
    return pivot_col(v) < 0;
}

bool fp_insert(FpMat& M, std::vector<i64> v) {
    if (fp_reduce_against(M, v)) return false;
    i64 pc = pivot_col(v);
    i64 s = inv_mod(v[pc], M.p);
    for (i64 j = pc; j < M.cols; ++j) v[j] = mod_norm(v[j] * s, M.p);
    // clear the new pivot column from existing rows, keep rows pivot-sorted
    for (auto& row : M.rows) {
        i64 c = row[pc];
        if (c == 0) continue;
        for (i64 j = pc; j < M.cols; ++j) row[j] = mod_norm(row[j] - c * v[j], M.p);
    }
    auto it = std::lower_bound(M.rows.begin(), M.rows.end(), v,
                               [](const std::vector<i64>& a, const std::vector<i64>& b) {
                                   return pivot_col(a) < pivot_col(b);
                               });
    M.rows.insert(it, std::move(v));
    return true;
}

FpMat fp_kernel(const FpMat& M) {
    FpMat R = M;
    fp_rref(R);
    std::vector<i64> pivot_of_col(M.cols, -1);
    for (size_t i = 0; i < R.rows.size(); ++i) pivot_of_col[pivot_col(R.rows[i])] = i;
    FpMat K{M.p, M.cols, {}};
    for (i64 j = 0; j < M.cols; ++j) {
        if (pivot_of_col[j] >= 0) continue; // pivot column, not free
        std::vector<i64> v(M.cols, 0);
        v[j] = 1;
        for (i64 c = 0; c < M.cols; ++c) {
            if (pivot_of_col[c] < 0) continue;
            v[c] = mod_norm(-R.rows[pivot_of_col[c]][j], M.p);
        }
        K.rows.push_back(std::move(v));
    }
    fp_rref(K);
    return K;
}

std::optional<std::vector<i64>> fp_solve_linear(const FpMat& M, const std::vector<i64>& b) {
    FpMat aug{M.p, M.cols + 1, {}};
    for (size_t i = 0; i < M.rows.size(); ++i) {
        std::vector<i64> row = M.rows[i];
        row.push_back(mod_norm(b[i], M.p));
        fp_insert(aug, std::move(row));
    }
    std::vector<i64> x(M.cols, 0);
    for (const auto& row : aug.rows) {
        i64 pc = pivot_col(row);
        if (pc == M.cols) return std::nullopt; // 0 = nonzero row
        x[pc] = row[M.cols];
    }
    return x;
}

std::optional<std::vector<i64>> fp_solve_combination(const FpMat& M,
                                                     const std::vector<i64>& target) {
    // augment each row with indicator coordinates, reduce target alongside
    FpMat aug{M.p, M.cols + static_cast<i64>(M.rows.size()), {}};
    for (size_t i = 0; i < M.rows.size(); ++i) {
        std::vector<i64> row = M.rows[i];
        row.resize(aug.cols, 0);
        row[M.cols + i] = 1;
        fp_insert(aug, std::move(row));
    }
    std::vector<i64> t = target;
    t.resize(aug.cols, 0);
    fp_reduce_against(aug, t);
    for (i64 j = 0; j < M.cols; ++j)
        if (t[j] != 0) return std::nullopt;
    std::vector<i64> coeff(M.rows.size());
    for (size_t i = 0; i < M.rows.size(); ++i)
        coeff[i] = mod_norm(-t[M.cols + i], M.p);
    return coeff;
}

} // namespace rrcc
