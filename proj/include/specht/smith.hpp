#pragma once

#include <vector>

#include "specht/error.hpp"
#include "specht/linalg.hpp"
#include "specht/scalars.hpp"

namespace specht {

/// U * A * V = diag(d) with U, V unimodular and d_i >= 0, d_i | d_{i+1}.
struct SmithForm {
    std::vector<Int> d;                 // min(rows, cols) entries
    std::vector<std::vector<Int>> U, V; // square transforms

    /// Exact reconstruction check; throws check_error on failure.
    void verify(const std::vector<std::vector<Int>>& A) const;
};

namespace detail {

inline void row_op_sub(std::vector<std::vector<Int>>& M, int dst, int src, const Int& q) {
    for (std::size_t j = 0; j < M[dst].size(); ++j) M[dst][j] -= q * M[src][j];
}
inline void col_op_sub(std::vector<std::vector<Int>>& M, int dst, int src, const Int& q) {
    for (std::size_t i = 0; i < M.size(); ++i) M[i][dst] -= q * M[i][src];
}

} // namespace detail

/// Smith normal form by smallest-magnitude pivoting. Desk-scale sizes only;
/// coefficient growth is handled by arbitrary precision.
inline SmithForm smith_normal_form(std::vector<std::vector<Int>> M) {
    int rows = static_cast<int>(M.size());
    int cols = rows == 0 ? 0 : static_cast<int>(M[0].size());
    for (auto& r : M) require(static_cast<int>(r.size()) == cols, "smith: ragged matrix");

    SmithForm s;
    s.U.assign(rows, std::vector<Int>(rows, 0));
    s.V.assign(cols, std::vector<Int>(cols, 0));
    for (int i = 0; i < rows; ++i) s.U[i][i] = 1;
    for (int j = 0; j < cols; ++j) s.V[j][j] = 1;

    int m = std::min(rows, cols);
    for (int k = 0; k < m; ++k) {
        for (;;) {
            // smallest-magnitude nonzero pivot in the trailing submatrix
            int pr = -1, pc = -1;
            for (int i = k; i < rows; ++i)
                for (int j = k; j < cols; ++j)
                    if (M[i][j] != 0 &&
                        (pr < 0 || abs(M[i][j]) < abs(M[pr][pc]))) {
                        pr = i;
                        pc = j;
                    }
            if (pr < 0) break; // submatrix is zero
            if (pr != k) {
                std::swap(M[pr], M[k]);
                std::swap(s.U[pr], s.U[k]);
            }
            if (pc != k) {
                for (int i = 0; i < rows; ++i) std::swap(M[i][pc], M[i][k]);
                for (int t = 0; t < cols; ++t) std::swap(s.V[t][pc], s.V[t][k]);
            }
            bool clean = true;
            for (int i = k + 1; i < rows; ++i) {
                if (M[i][k] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), M[i][k].get_mpz_t(), M[k][k].get_mpz_t());
                detail::row_op_sub(M, i, k, q);
                detail::row_op_sub(s.U, i, k, q);
                if (M[i][k] != 0) clean = false;
            }
            for (int j = k + 1; j < cols; ++j) {
                if (M[k][j] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), M[k][j].get_mpz_t(), M[k][k].get_mpz_t());
                detail::col_op_sub(M, j, k, q);
                for (int t = 0; t < cols; ++t) s.V[t][j] -= q * s.V[t][k];
                if (M[k][j] != 0) clean = false;
            }
            if (!clean) continue;
            // pivot must divide the rest of the submatrix
            bool divides = true;
            for (int i = k + 1; i < rows && divides; ++i)
                for (int j = k + 1; j < cols && divides; ++j)
                    if (M[i][j] % M[k][k] != 0) {
                        for (int t = 0; t < cols; ++t) M[k][t] += M[i][t];
                        for (int t = 0; t < rows; ++t) s.U[k][t] += s.U[i][t];
                        divides = false;
                    }
            if (divides) break;
        }
        if (M[k][k] < 0) {
            for (int t = 0; t < cols; ++t) M[k][t] = -M[k][t];
            for (int t = 0; t < rows; ++t) s.U[k][t] = -s.U[k][t];
        }
    }
    for (int k = 0; k < m; ++k) s.d.push_back(M[k][k]);
    return s;
}

inline void SmithForm::verify(const std::vector<std::vector<Int>>& A) const {
    int rows = static_cast<int>(U.size());
    int cols = static_cast<int>(V.size());
    std::vector<std::vector<Int>> UA(rows, std::vector<Int>(cols, 0));
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < rows; ++k) {
            if (U[i][k] == 0) continue;
            for (int j = 0; j < cols; ++j) UA[i][j] += U[i][k] * A[k][j];
        }
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            Int v = 0;
            for (int k = 0; k < cols; ++k) v += UA[i][k] * V[k][j];
            Int expect = (i == j && i < static_cast<int>(d.size())) ? d[i] : Int(0);
            check(v == expect, "SmithForm: U*A*V != diag(d)");
        }
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
        check(d[i + 1] == 0 || (d[i] != 0 && d[i + 1] % d[i] == 0) || (d[i] == 0 && d[i + 1] == 0),
              "SmithForm: divisibility chain violated");
}

/// Integer kernel basis of A (as columns), via the Smith form: the kernel is
/// spanned by the columns of V whose elementary divisor vanishes.
inline std::vector<std::vector<Int>> integer_kernel(const std::vector<std::vector<Int>>& A) {
    SmithForm s = smith_normal_form(A);
    int cols = static_cast<int>(s.V.size());
    std::vector<std::vector<Int>> out;
    for (int j = 0; j < cols; ++j) {
        bool in_kernel = j >= static_cast<int>(s.d.size()) || s.d[j] == 0;
        if (!in_kernel) continue;
        std::vector<Int> v(cols);
        for (int i = 0; i < cols; ++i) v[i] = s.V[i][j];
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace specht
