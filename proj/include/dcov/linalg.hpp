#ifndef DCOV_LINALG_HPP
#define DCOV_LINALG_HPP

#include <optional>
#include <vector>

#include "dcov/error.hpp"
#include "dcov/field.hpp"

namespace dcov {

// Dense exact matrix over the coefficient field, row-major.
template <class F>
struct MatrixT {
    using Elem = typename F::Elem;

    int rows = 0, cols = 0;
    std::vector<Elem> a;
    F fld;

    MatrixT() = default;
    MatrixT(const F& f, int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c), f.zero()), fld(f) {}

    Elem& at(int r, int c) { return a[size_t(r) * size_t(cols) + size_t(c)]; }
    const Elem& at(int r, int c) const { return a[size_t(r) * size_t(cols) + size_t(c)]; }
};

template <class F>
struct RrefResult {
    MatrixT<F> mat;
    std::vector<int> pivots; // pivot column of each pivot row, strictly increasing
};

namespace detail {

// Plain Gauss-Jordan; used over prime fields. Deterministic pivoting: first
// row with a nonzero entry, columns scanned left to right.
template <class F>
RrefResult<F> rref_gauss_jordan(MatrixT<F> m) {
    const F& f = m.fld;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int sel = -1;
        for (int i = r; i < m.rows; ++i)
            if (!f.is_zero(m.at(i, c))) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
        auto pinv = f.inv(m.at(r, c));
        for (int j = c; j < m.cols; ++j) m.at(r, j) = f.mul(pinv, m.at(r, j));
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || f.is_zero(m.at(i, c))) continue;
            auto factor = m.at(i, c);
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return RrefResult<F>{std::move(m), std::move(pivots)};
}

inline mpz_class exact_div(const mpz_class& num, const mpz_class& den) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) fail(ErrorCode::internal, "fraction-free elimination: inexact division");
    return q;
}

// Fraction-free (Bareiss) forward elimination on a denominator-cleared copy,
// then exact rational normalization to reduced row echelon form. Controls
// the coefficient blow-up that plain rational elimination would produce.
inline RrefResult<QField> rref_bareiss(const MatrixT<QField>& m) {
    const int rows = m.rows, cols = m.cols;
    std::vector<mpz_class> z(size_t(rows) * size_t(cols));
    for (int i = 0; i < rows; ++i) {
        mpz_class l(1);
        for (int j = 0; j < cols; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (int j = 0; j < cols; ++j) {
            const mpq_class& q = m.at(i, j);
            z[size_t(i) * size_t(cols) + size_t(j)] = q.get_num() * (l / q.get_den());
        }
    }
    auto zat = [&](int i, int j) -> mpz_class& { return z[size_t(i) * size_t(cols) + size_t(j)]; };

    std::vector<int> pivots;
    mpz_class prev(1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (zat(i, c) != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = 0; j < cols; ++j) mpz_swap(zat(sel, j).get_mpz_t(), zat(r, j).get_mpz_t());
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                zat(i, j) = exact_div(zat(r, c) * zat(i, j) - zat(i, c) * zat(r, j), prev);
            zat(i, c) = 0;
        }
        prev = zat(r, c);
        pivots.push_back(c);
        ++r;
    }

    QField f;
    MatrixT<QField> out(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out.at(i, j) = mpq_class(z[size_t(i) * size_t(cols) + size_t(j)]);
    for (int t = int(pivots.size()) - 1; t >= 0; --t) {
        int pc = pivots[size_t(t)];
        mpq_class pinv = 1 / out.at(t, pc);
        for (int j = pc; j < cols; ++j) out.at(t, j) = mpq_class(out.at(t, j) * pinv);
        for (int i = 0; i < t; ++i) {
            mpq_class factor = out.at(i, pc);
            if (factor == 0) continue;
            for (int j = pc; j < cols; ++j)
                out.at(i, j) = mpq_class(out.at(i, j) - factor * out.at(t, j));
        }
    }
    return RrefResult<QField>{std::move(out), std::move(pivots)};
}

} // namespace detail

template <class F>
RrefResult<F> rref(const MatrixT<F>& m) {
    if constexpr (std::is_same_v<F, QField>)
        return detail::rref_bareiss(m);
    else
        return detail::rref_gauss_jordan(m);
}

template <class F>
int rank(const MatrixT<F>& m) {
    return int(rref(m).pivots.size());
}

namespace detail {

template <class F>
std::vector<std::vector<typename F::Elem>> nullspace_of_rref(const RrefResult<F>& r, int cols) {
    const F& f = r.mat.fld;
    std::vector<bool> is_pivot(size_t(cols), false);
    for (int p : r.pivots)
        if (p < cols) is_pivot[size_t(p)] = true;
    std::vector<std::vector<typename F::Elem>> basis;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[size_t(fc)]) continue;
        std::vector<typename F::Elem> v(size_t(cols), f.zero());
        v[size_t(fc)] = f.one();
        for (size_t t = 0; t < r.pivots.size(); ++t) {
            if (r.pivots[t] >= cols) break;
            v[size_t(r.pivots[t])] = f.neg(r.mat.at(int(t), fc));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace detail

// Basis of the right kernel; size is always cols - rank.
template <class F>
std::vector<std::vector<typename F::Elem>> nullspace(const MatrixT<F>& m) {
    return detail::nullspace_of_rref(rref(m), m.cols);
}

template <class F>
struct LinearSolution {
    std::optional<std::vector<typename F::Elem>> particular; // free variables set to zero
    std::vector<std::vector<typename F::Elem>> kernel;
    int rank = 0;
};

// One reduction of the augmented matrix gives a particular solution together
// with a kernel basis of the coefficient matrix.
template <class F>
LinearSolution<F> solve_with_kernel(const MatrixT<F>& m, const std::vector<typename F::Elem>& b) {
    if (int(b.size()) != m.rows)
        fail(ErrorCode::dimension_mismatch, "solve: right-hand side has wrong length");
    const F& f = m.fld;
    MatrixT<F> aug(f, m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[size_t(i)];
    }
    auto r = rref(aug);
    LinearSolution<F> out;
    bool consistent = true;
    for (int p : r.pivots)
        if (p == m.cols) consistent = false;
    out.rank = int(r.pivots.size()) - (consistent ? 0 : 1);
    out.kernel = detail::nullspace_of_rref(r, m.cols);
    if (consistent) {
        std::vector<typename F::Elem> x(size_t(m.cols), f.zero());
        for (size_t t = 0; t < r.pivots.size(); ++t) x[size_t(r.pivots[t])] = r.mat.at(int(t), m.cols);
        out.particular = std::move(x);
    }
    return out;
}

template <class F>
std::optional<std::vector<typename F::Elem>> solve(const MatrixT<F>& m,
                                                   const std::vector<typename F::Elem>& b) {
    return solve_with_kernel(m, b).particular;
}

} // namespace dcov

#endif
