#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <type_traits>
#include <vector>

#include "specht/error.hpp"
#include "specht/scalars.hpp"

namespace specht {

/// Dense matrix over a field object F (GFpOps or QQOps), row-major.
template <class F>
struct Mat {
    using E = typename F::elem;
    int rows = 0, cols = 0;
    std::vector<E> a;

    Mat() = default;
    Mat(int r, int c, E fill) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, fill) {}
    E& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const E& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    static Mat zero(const F& f, int r, int c) { return Mat(r, c, f.zero()); }
    static Mat identity(const F& f, int n) {
        Mat m = zero(f, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }
    bool is_zero(const F& f) const {
        for (const auto& x : a)
            if (!f.is_zero(x)) return false;
        return true;
    }
    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

template <class F>
Mat<F> mul(const F& f, const Mat<F>& A, const Mat<F>& B) {
    require(A.cols == B.rows, "mul: dimension mismatch");
    Mat<F> C = Mat<F>::zero(f, A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const auto& aik = A.at(i, k);
            if (f.is_zero(aik)) continue;
            for (int j = 0; j < B.cols; ++j)
                C.at(i, j) = f.add(C.at(i, j), f.mul(aik, B.at(k, j)));
        }
    return C;
}

template <class F>
Mat<F> add(const F& f, const Mat<F>& A, const Mat<F>& B) {
    require(A.rows == B.rows && A.cols == B.cols, "add: dimension mismatch");
    Mat<F> C = A;
    for (std::size_t i = 0; i < C.a.size(); ++i) C.a[i] = f.add(C.a[i], B.a[i]);
    return C;
}

template <class F>
Mat<F> sub(const F& f, const Mat<F>& A, const Mat<F>& B) {
    require(A.rows == B.rows && A.cols == B.cols, "sub: dimension mismatch");
    Mat<F> C = A;
    for (std::size_t i = 0; i < C.a.size(); ++i) C.a[i] = f.sub(C.a[i], B.a[i]);
    return C;
}

template <class F>
Mat<F> scale(const F& f, const Mat<F>& A, const typename F::elem& c) {
    Mat<F> C = A;
    for (auto& x : C.a) x = f.mul(x, c);
    return C;
}

template <class F>
std::vector<typename F::elem> mat_vec(const F& f, const Mat<F>& A,
                                      const std::vector<typename F::elem>& x) {
    require(A.cols == static_cast<int>(x.size()), "mat_vec: dimension mismatch");
    std::vector<typename F::elem> y(A.rows, f.zero());
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j)
            if (!f.is_zero(A.at(i, j))) y[i] = f.add(y[i], f.mul(A.at(i, j), x[j]));
    return y;
}

/// In-place row reduction to reduced row echelon form; returns pivot columns.
template <class F>
std::vector<int> rref(const F& f, Mat<F>& M) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < M.cols && r < M.rows; ++c) {
        int pr = -1;
        for (int i = r; i < M.rows; ++i)
            if (!f.is_zero(M.at(i, c))) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        for (int j = 0; j < M.cols; ++j) std::swap(M.at(pr, j), M.at(r, j));
        auto inv = f.inv(M.at(r, c));
        for (int j = c; j < M.cols; ++j) M.at(r, j) = f.mul(M.at(r, j), inv);
        for (int i = 0; i < M.rows; ++i) {
            if (i == r || f.is_zero(M.at(i, c))) continue;
            auto t = M.at(i, c);
            for (int j = c; j < M.cols; ++j)
                M.at(i, j) = f.sub(M.at(i, j), f.mul(t, M.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
int rank(const F& f, Mat<F> M) {
    return static_cast<int>(rref(f, M).size());
}

/// Kernel basis with the usual free-variable convention: for each free column
/// j, x_j = 1 and x_{pivot for row i} = -M[i][j].
template <class F>
std::vector<std::vector<typename F::elem>> kernel_basis(const F& f, Mat<F> M) {
    std::vector<int> pivots = rref(f, M);
    std::vector<int> pivot_of_col(M.cols, -1);
    for (std::size_t i = 0; i < pivots.size(); ++i) pivot_of_col[pivots[i]] = static_cast<int>(i);
    std::vector<std::vector<typename F::elem>> basis;
    for (int j = 0; j < M.cols; ++j) {
        if (pivot_of_col[j] >= 0) continue;
        std::vector<typename F::elem> v(M.cols, f.zero());
        v[j] = f.one();
        for (int c = 0; c < M.cols; ++c)
            if (pivot_of_col[c] >= 0) v[c] = f.neg(M.at(pivot_of_col[c], j));
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Any solution of M x = b, or nullopt when inconsistent.
template <class F>
std::optional<std::vector<typename F::elem>> solve(const F& f, const Mat<F>& M,
                                                   const std::vector<typename F::elem>& b) {
    require(M.rows == static_cast<int>(b.size()), "solve: dimension mismatch");
    Mat<F> A = Mat<F>::zero(f, M.rows, M.cols + 1);
    for (int i = 0; i < M.rows; ++i) {
        for (int j = 0; j < M.cols; ++j) A.at(i, j) = M.at(i, j);
        A.at(i, M.cols) = b[i];
    }
    std::vector<int> pivots = rref(f, A);
    if (!pivots.empty() && pivots.back() == M.cols) return std::nullopt;
    std::vector<typename F::elem> x(M.cols, f.zero());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = A.at(static_cast<int>(i), M.cols);
    return x;
}

template <class F>
Mat<F> inverse(const F& f, const Mat<F>& M) {
    require(M.rows == M.cols, "inverse: square matrix required");
    Mat<F> A = Mat<F>::zero(f, M.rows, 2 * M.cols);
    for (int i = 0; i < M.rows; ++i) {
        for (int j = 0; j < M.cols; ++j) A.at(i, j) = M.at(i, j);
        A.at(i, M.cols + i) = f.one();
    }
    auto pivots = rref(f, A);
    require(static_cast<int>(pivots.size()) == M.rows && pivots.back() == M.rows - 1,
            "inverse: matrix is singular");
    Mat<F> R = Mat<F>::zero(f, M.rows, M.cols);
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.cols; ++j) R.at(i, j) = A.at(i, M.cols + j);
    return R;
}

/// Matrix power by binary exponentiation.
template <class F>
Mat<F> mat_pow(const F& f, Mat<F> A, long long e) {
    require(A.rows == A.cols && e >= 0, "mat_pow: square matrix, e >= 0");
    Mat<F> R = Mat<F>::identity(f, A.rows);
    while (e > 0) {
        if (e & 1) R = mul(f, R, A);
        A = mul(f, A, A);
        e >>= 1;
    }
    return R;
}

/// Streaming column nullspace: feed columns one by one; each column that
/// reduces to zero contributes the combination that produced it. Used for the
/// intertwining systems, where columns are long and unknowns are few.
template <class F>
class ColumnNullspace {
public:
    using E = typename F::elem;
    ColumnNullspace(const F& f, int rows) : f_(f), rows_(rows) {}

    void add_column(std::vector<E> col) {
        std::vector<E> comb(ncols_ + 1, f_.zero());
        comb[ncols_] = f_.one();
        for (auto& c : combs_) c.push_back(f_.zero());
        ++ncols_;
        reduce(col, comb);
        int lead = leading(col);
        if (lead < 0) {
            null_combs_.push_back(std::move(comb));
            return;
        }
        auto inv = f_.inv(col[lead]);
        for (auto& x : col) x = f_.mul(x, inv);
        for (auto& x : comb) x = f_.mul(x, inv);
        // keep pivots ordered by leading row
        std::size_t pos = 0;
        while (pos < pivots_.size() && leads_[pos] < lead) ++pos;
        pivots_.insert(pivots_.begin() + pos, std::move(col));
        combs_.insert(combs_.begin() + pos, std::move(comb));
        leads_.insert(leads_.begin() + pos, lead);
    }

    int dim() const { return static_cast<int>(null_combs_.size()); }
    /// Kernel combinations, each of length = number of columns added.
    std::vector<std::vector<E>> basis() const {
        std::vector<std::vector<E>> out;
        for (auto v : null_combs_) {
            v.resize(ncols_, f_.zero());
            out.push_back(std::move(v));
        }
        return out;
    }

private:
    int leading(const std::vector<E>& v) const {
        for (int i = 0; i < rows_; ++i)
            if (!f_.is_zero(v[i])) return i;
        return -1;
    }
    void reduce(std::vector<E>& col, std::vector<E>& comb) {
        for (std::size_t k = 0; k < pivots_.size(); ++k) {
            const E& c = col[leads_[k]];
            if (f_.is_zero(c)) continue;
            E factor = c;
            const auto& pv = pivots_[k];
            for (int i = leads_[k]; i < rows_; ++i)
                if (!f_.is_zero(pv[i])) col[i] = f_.sub(col[i], f_.mul(factor, pv[i]));
            const auto& pc = combs_[k];
            for (std::size_t i = 0; i < pc.size(); ++i)
                if (!f_.is_zero(pc[i])) {
                    if (comb.size() <= i) comb.resize(i + 1, f_.zero());
                    comb[i] = f_.sub(comb[i], f_.mul(factor, pc[i]));
                }
        }
    }

    F f_;
    int rows_;
    int ncols_ = 0;
    std::vector<std::vector<E>> pivots_; // reduced columns, ordered by leading row
    std::vector<std::vector<E>> combs_;  // combination of original columns per pivot
    std::vector<int> leads_;
    std::vector<std::vector<E>> null_combs_;
};

/// Solver for B x = y with B of full column rank, factored once.
template <class F>
class ColumnSolver {
public:
    using E = typename F::elem;
    ColumnSolver(const F& f, const Mat<F>& B) : f_(f), B_(B) {
        Mat<F> A = Mat<F>::zero(f, B.rows, B.cols + B.rows);
        for (int i = 0; i < B.rows; ++i) {
            for (int j = 0; j < B.cols; ++j) A.at(i, j) = B.at(i, j);
            A.at(i, B.cols + i) = f.one();
        }
        auto pivots = rref(f_, A);
        require(static_cast<int>(pivots.size()) >= B.cols && (B.cols == 0 || pivots[B.cols - 1] == B.cols - 1),
                "ColumnSolver: matrix does not have full column rank");
        T_ = Mat<F>::zero(f, B.rows, B.rows);
        for (int i = 0; i < B.rows; ++i)
            for (int j = 0; j < B.rows; ++j) T_.at(i, j) = A.at(i, B.cols + j);
    }

    /// x with B x = y; throws check_error if y is outside the column space.
    std::vector<E> solve_vec(const std::vector<E>& y) const {
        auto t = mat_vec(f_, T_, y);
        std::vector<E> x(t.begin(), t.begin() + B_.cols);
        auto back = mat_vec(f_, B_, x);
        for (int i = 0; i < B_.rows; ++i)
            if (!f_.is_zero(f_.sub(back[i], y[i])))
                throw check_error("ColumnSolver: vector outside the column space");
        return x;
    }

    /// X with B X = A Y... more precisely returns M such that B M = C.
    Mat<F> solve_mat(const Mat<F>& C) const {
        require(C.rows == B_.rows, "solve_mat: dimension mismatch");
        Mat<F> M = Mat<F>::zero(f_, B_.cols, C.cols);
        std::vector<E> y(C.rows, f_.zero());
        for (int j = 0; j < C.cols; ++j) {
            for (int i = 0; i < C.rows; ++i) y[i] = C.at(i, j);
            auto x = solve_vec(y);
            for (int i = 0; i < B_.cols; ++i) M.at(i, j) = x[i];
        }
        return M;
    }

private:
    F f_;
    Mat<F> B_;
    Mat<F> T_;
};

// ---------------------------------------------------------------------------
// Sparse exact matrices (the serialization-facing form).
// ---------------------------------------------------------------------------

template <class C>
struct ExactMatrix {
    int rows = 0, cols = 0;
    std::map<std::pair<int, int>, C> entries;

    void set(int r, int c, const C& v) {
        require(0 <= r && r < rows && 0 <= c && c < cols, "ExactMatrix: index out of range");
        if (coeff_is_zero_g(v))
            entries.erase({r, c});
        else
            entries[{r, c}] = v;
    }
    C get(int r, int c) const {
        auto it = entries.find({r, c});
        return it == entries.end() ? C() : it->second;
    }
    bool is_zero() const { return entries.empty(); }

    friend bool operator==(const ExactMatrix& x, const ExactMatrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.entries == y.entries;
    }

private:
    static bool coeff_is_zero_g(const Int& v) { return v == 0; }
    static bool coeff_is_zero_g(const Rat& v) { return v == 0; }
    static bool coeff_is_zero_g(const Fp& v) { return v.is_zero(); }
};

inline Mat<GFpOps> to_dense(const ExactMatrix<Fp>& M, uint32_t p) {
    GFpOps f{p};
    Mat<GFpOps> D = Mat<GFpOps>::zero(f, M.rows, M.cols);
    for (const auto& [rc, v] : M.entries) {
        require(v.p == p, "to_dense: mixed scalar domains (moduli differ)");
        D.at(rc.first, rc.second) = v.v;
    }
    return D;
}

inline Mat<QQOps> to_dense(const ExactMatrix<Rat>& M) {
    QQOps f;
    Mat<QQOps> D = Mat<QQOps>::zero(f, M.rows, M.cols);
    for (const auto& [rc, v] : M.entries) D.at(rc.first, rc.second) = v;
    return D;
}

inline Mat<QQOps> to_dense_rational(const ExactMatrix<Int>& M) {
    QQOps f;
    Mat<QQOps> D = Mat<QQOps>::zero(f, M.rows, M.cols);
    for (const auto& [rc, v] : M.entries) D.at(rc.first, rc.second) = Rat(v);
    return D;
}

template <class C, class D>
ExactMatrix<D> convert_matrix(const ExactMatrix<C>& M, D (*conv)(const C&)) {
    ExactMatrix<D> R;
    R.rows = M.rows;
    R.cols = M.cols;
    for (const auto& [rc, v] : M.entries) R.set(rc.first, rc.second, conv(v));
    return R;
}

inline ExactMatrix<Fp> reduce_mod(const ExactMatrix<Int>& M, uint32_t p) {
    ExactMatrix<Fp> R;
    R.rows = M.rows;
    R.cols = M.cols;
    for (const auto& [rc, v] : M.entries) R.set(rc.first, rc.second, Fp::from_int(v, p));
    return R;
}

template <class C>
ExactMatrix<C> sparse_mul(const ExactMatrix<C>& A, const ExactMatrix<C>& B) {
    require(A.cols == B.rows, "sparse_mul: dimension mismatch");
    ExactMatrix<C> R;
    R.rows = A.rows;
    R.cols = B.cols;
    std::map<std::pair<int, int>, C> acc;
    for (const auto& [rc, av] : A.entries) {
        auto lo = B.entries.lower_bound({rc.second, 0});
        auto hi = B.entries.upper_bound({rc.second, B.cols});
        for (auto it = lo; it != hi; ++it) {
            auto key = std::make_pair(rc.first, it->first.second);
            auto f = acc.find(key);
            if (f == acc.end())
                acc.emplace(key, av * it->second);
            else
                f->second = f->second + av * it->second;
        }
    }
    for (auto& [k, v] : acc) R.set(k.first, k.second, v);
    return R;
}

} // namespace specht
