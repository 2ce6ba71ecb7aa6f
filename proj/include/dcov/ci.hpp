#ifndef DCOV_CI_HPP
#define DCOV_CI_HPP

#include <map>
#include <string>
#include <vector>

#include "dcov/error.hpp"
#include "dcov/hilbert.hpp"
#include "dcov/linalg.hpp"
#include "dcov/poly.hpp"

namespace dcov {

// Index of a monomial basis in canonical order, for building coefficient
// matrices of graded maps.
struct BasisIndex {
    std::vector<ExpVec> exps;
    std::map<ExpVec, int, std::greater<ExpVec>> pos;

    explicit BasisIndex(std::vector<ExpVec> e) : exps(std::move(e)) {
        for (size_t i = 0; i < exps.size(); ++i) pos.emplace(exps[i], int(i));
    }
    int size() const { return int(exps.size()); }
};

inline BasisIndex degree_basis(const RingCtx& ring, long m) {
    return BasisIndex(exponents_of_degree(ring, m));
}

template <class F>
std::vector<typename F::Elem> coeff_vector(const PolyT<F>& p, const BasisIndex& basis) {
    const F& f = p.field();
    std::vector<typename F::Elem> v(size_t(basis.size()), f.zero());
    for (const auto& t : p.terms()) {
        auto it = basis.pos.find(t.e);
        if (it == basis.pos.end())
            fail(ErrorCode::internal, "coefficient vector: monomial outside basis");
        v[size_t(it->second)] = t.c;
    }
    return v;
}

// Matrix whose j-th column is cols[j] written in the degree-m monomial basis.
template <class F>
MatrixT<F> coefficient_matrix(const RingCtx& ring, long m, const std::vector<PolyT<F>>& cols) {
    F f = field_from_desc<F>(ring.field);
    BasisIndex basis = degree_basis(ring, m);
    MatrixT<F> mat(f, basis.size(), int(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
        if (!cols[j].is_zero() && cols[j].degree() != m)
            fail(ErrorCode::degree_mismatch, "coefficient matrix: column of wrong degree");
        for (const auto& t : cols[j].terms()) {
            auto it = basis.pos.find(t.e);
            if (it == basis.pos.end()) fail(ErrorCode::internal, "column monomial outside basis");
            mat.at(it->second, int(j)) = t.c;
        }
    }
    return mat;
}

// q == p * r for some r, decided exactly by a linear solve in the
// coefficients of r.
template <class F>
bool divides(const PolyT<F>& p, const PolyT<F>& q) {
    if (p.is_zero()) return q.is_zero();
    if (q.is_zero()) return true;
    long dr = q.degree() - p.degree();
    if (dr < 0) return false;
    std::vector<PolyT<F>> cols;
    for (const auto& mu : monomial_basis<F>(p.ring(), dr)) cols.push_back(p * mu);
    auto m = coefficient_matrix(p.ring(), q.degree(), cols);
    return solve(m, coeff_vector(q, degree_basis(p.ring(), q.degree()))).has_value();
}

// Complete intersection Z = V(f_a, f_b) of type (a, b), a <= b, in P^n.
// a == 0 encodes the Z = empty convention with f_a a nonzero constant.
template <class F>
struct CompleteIntersection {
    RingCtx ring;
    PolyT<F> fa, fb;
    int a = 0, b = 0;

    CompleteIntersection(PolyT<F> fa_, PolyT<F> fb_) : fa(std::move(fa_)), fb(std::move(fb_)) {
        require_same_ring(fa.ring(), fb.ring(), "complete intersection");
        ring = fa.ring();
        if (!ring.unit_weights())
            fail(ErrorCode::bad_argument, "complete intersection lives in a unit-weight ring");
        if (fa.is_zero() || fb.is_zero())
            fail(ErrorCode::bad_argument, "complete intersection generators must be nonzero");
        a = int(fa.degree());
        b = int(fb.degree());
        if (a > b) fail(ErrorCode::bad_argument, "generator degrees must satisfy a <= b");
        if (a >= 1 && divides(fa, fb))
            fail(ErrorCode::bad_argument, "degenerate pair: f_a divides f_b");
    }

    int n() const { return ring.nvars - 1; }
};

// dim I_Z^(2)_m = h(m-2a) + h(m-a-b) + h(m-2b) - h(m-2a-b) - h(m-a-2b),
// read off the length-one resolution of the square of the ideal.
inline long long i2_dim_formula(int n, int a, int b, long m) {
    if (n < 1 || a < 1 || a > b || m < 0)
        fail(ErrorCode::bad_argument, "i2_dim_formula: need n >= 1, 1 <= a <= b, m >= 0");
    return h(n, m - 2 * a) + h(n, m - a - b) + h(n, m - 2 * b) - h(n, m - 2 * a - b) -
           h(n, m - a - 2 * b);
}

namespace detail {

// Unknown blocks of the degree-m decomposition g = A fa^2 + 2 B fa fb + C fb^2.
template <class F>
struct I2System {
    MatrixT<F> mat;
    int dim_a = 0, dim_b = 0, dim_c = 0;
    std::vector<ExpVec> basis_a, basis_b, basis_c;
};

template <class F>
I2System<F> build_i2_system(const CompleteIntersection<F>& ci, long m) {
    const F f = field_from_desc<F>(ci.ring.field);
    I2System<F> sys;
    sys.basis_a = exponents_of_degree(ci.ring, m - 2 * ci.a);
    sys.basis_b = exponents_of_degree(ci.ring, m - ci.a - ci.b);
    sys.basis_c = exponents_of_degree(ci.ring, m - 2 * ci.b);
    sys.dim_a = int(sys.basis_a.size());
    sys.dim_b = int(sys.basis_b.size());
    sys.dim_c = int(sys.basis_c.size());
    PolyT<F> fa2 = ci.fa * ci.fa;
    PolyT<F> fab2 = f.from_int(2) * (ci.fa * ci.fb);
    PolyT<F> fb2 = ci.fb * ci.fb;
    std::vector<PolyT<F>> cols;
    cols.reserve(size_t(sys.dim_a + sys.dim_b + sys.dim_c));
    for (const auto& e : sys.basis_a) cols.push_back(fa2 * PolyT<F>::monomial(ci.ring, e, f.one()));
    for (const auto& e : sys.basis_b) cols.push_back(fab2 * PolyT<F>::monomial(ci.ring, e, f.one()));
    for (const auto& e : sys.basis_c) cols.push_back(fb2 * PolyT<F>::monomial(ci.ring, e, f.one()));
    sys.mat = coefficient_matrix(ci.ring, m, cols);
    return sys;
}

template <class F>
PolyT<F> poly_from_coeffs(const RingCtx& ring, const std::vector<ExpVec>& basis,
                          const std::vector<typename F::Elem>& coeffs, size_t offset) {
    F f = field_from_desc<F>(ring.field);
    std::vector<typename PolyT<F>::Term> terms;
    for (size_t i = 0; i < basis.size(); ++i)
        if (!f.is_zero(coeffs[offset + i]))
            terms.push_back({basis[i], coeffs[offset + i]});
    return PolyT<F>::from_terms(ring, std::move(terms));
}

} // namespace detail

// Brute-force rank of the multiplication map onto the degree-m piece of
// I_Z^2; the independent check of i2_dim_formula.
template <class F>
int i2_dim_oracle(const CompleteIntersection<F>& ci, long m) {
    if (m < 2 * ci.a) fail(ErrorCode::bad_argument, "i2_dim_oracle: need m >= 2a");
    const F f = field_from_desc<F>(ci.ring.field);
    PolyT<F> fa2 = ci.fa * ci.fa;
    PolyT<F> fab = ci.fa * ci.fb;
    PolyT<F> fb2 = ci.fb * ci.fb;
    std::vector<PolyT<F>> cols;
    for (const auto& p : {fa2, fab, fb2}) {
        long dm = m - p.degree();
        for (const auto& e : exponents_of_degree(ci.ring, dm))
            cols.push_back(p * PolyT<F>::monomial(ci.ring, e, f.one()));
    }
    return rank(coefficient_matrix(ci.ring, m, cols));
}

// Number of independent choices in the decomposition at degree m; equals
// cols - rank of the decomposition system, and for a regular pair matches
// h(m-2a-b) + h(m-a-2b) from the syzygy module.
template <class F>
int decomposition_kernel_dim(const CompleteIntersection<F>& ci, long m) {
    if (m < 2 * ci.a) fail(ErrorCode::bad_argument, "decomposition_kernel_dim: need m >= 2a");
    auto sys = detail::build_i2_system(ci, m);
    return sys.mat.cols - rank(sys.mat);
}

// g = A fa^2 + 2 B fa fb + C fb^2 with C a scalar (so deg g = 2b). The
// reconstruction is exact; callers normalize with scalar 1/C.
template <class F>
struct I2Decomposition {
    PolyT<F> A, B;
    typename F::Elem C;
    long source_degree = 0;
};

template <class F>
I2Decomposition<F> decompose_in_i2(const PolyT<F>& g, const CompleteIntersection<F>& ci) {
    require_same_ring(g.ring(), ci.ring, "decompose_in_i2");
    const F f = field_from_desc<F>(ci.ring.field);
    if (f.characteristic() == 2)
        fail(ErrorCode::bad_argument, "decomposition needs 2 invertible in the field");
    if (g.is_zero()) fail(ErrorCode::bad_argument, "cannot decompose the zero polynomial");
    long m = g.degree();
    if (m != 2 * ci.b)
        fail(ErrorCode::degree_mismatch, "decompose_in_i2: deg g = " + std::to_string(m) +
                                             ", expected 2b = " + std::to_string(2 * ci.b));

    auto sys = detail::build_i2_system(ci, m);
    auto gvec = coeff_vector(g, degree_basis(ci.ring, m));
    auto sol = solve_with_kernel(sys.mat, gvec);
    if (!sol.particular)
        fail(ErrorCode::not_in_ideal_square, "polynomial is not in the square of the ideal");

    const int nc = sys.dim_a + sys.dim_b; // columns of the C-free system
    // Prefer the C = 1 solution when one exists: subtract the fb^2 column
    // from the right-hand side and solve in (A, B) alone.
    {
        MatrixT<F> mab(f, sys.mat.rows, nc);
        for (int i = 0; i < sys.mat.rows; ++i)
            for (int j = 0; j < nc; ++j) mab.at(i, j) = sys.mat.at(i, j);
        std::vector<typename F::Elem> rhs(gvec);
        for (int i = 0; i < sys.mat.rows; ++i)
            rhs[size_t(i)] = f.sub(rhs[size_t(i)], sys.mat.at(i, nc));
        auto sol1 = solve(mab, rhs);
        if (sol1) {
            I2Decomposition<F> out;
            out.A = detail::poly_from_coeffs<F>(ci.ring, sys.basis_a, *sol1, 0);
            out.B = detail::poly_from_coeffs<F>(ci.ring, sys.basis_b, *sol1, size_t(sys.dim_a));
            out.C = f.one();
            out.source_degree = m;
            return out;
        }
    }
    // C is then constant over the whole solution set.
    auto& x = *sol.particular;
    typename F::Elem c0 = x[size_t(nc)];
    if (f.is_zero(c0))
        fail(ErrorCode::degenerate_decomposition,
             "every decomposition has C = 0: the image contains the f_a hypersurface doubly");
    I2Decomposition<F> out;
    out.A = detail::poly_from_coeffs<F>(ci.ring, sys.basis_a, x, 0);
    out.B = detail::poly_from_coeffs<F>(ci.ring, sys.basis_b, x, size_t(sys.dim_a));
    out.C = c0;
    out.source_degree = m;
    return out;
}

// Reconstruction A fa^2 + 2 B fa fb + C fb^2; test hook for the exactness
// invariant.
template <class F>
PolyT<F> reconstruct_decomposition(const I2Decomposition<F>& dec, const CompleteIntersection<F>& ci) {
    const F f = field_from_desc<F>(ci.ring.field);
    PolyT<F> r = ci.fb * ci.fb;
    r = dec.C * r;
    if (!dec.A.is_zero()) r = r + dec.A * (ci.fa * ci.fa);
    if (!dec.B.is_zero()) r = r + f.from_int(2) * (dec.B * (ci.fa * ci.fb));
    return r;
}

} // namespace dcov

#endif
