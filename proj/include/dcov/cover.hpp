#ifndef DCOV_COVER_HPP
#define DCOV_COVER_HPP

#include <utility>
#include <vector>

#include "dcov/ci.hpp"
#include "dcov/poly.hpp"

namespace dcov {

// Double cover V -> P^n branched over B = V(g2d): the hypersurface
// y^2 = g2d(x) in P(1^{n+1}, d). V is never materialized; everything is
// computed from g2d in the unit-weight ring, with weighted-ring identity
// checks on the side.
template <class F>
struct DoubleCover {
    int n = 0, d = 0;
    PolyT<F> g2d;

    DoubleCover(int n_, int d_, PolyT<F> branch) : n(n_), d(d_), g2d(std::move(branch)) {
        if (n < 1 || d < 1) fail(ErrorCode::bad_argument, "double cover needs n >= 1, d >= 1");
        if (g2d.ring().nvars != n + 1 || !g2d.ring().unit_weights())
            fail(ErrorCode::bad_argument, "branch equation must live in the unit-weight ring on n+1 variables");
        if (g2d.is_zero() || g2d.degree() != 2 * d)
            fail(ErrorCode::bad_argument, "branch equation must be nonzero of degree 2d");
    }

    const RingCtx& ring() const { return g2d.ring(); }
};

// A member W of |kL| presented as V(y f_{k-d} - f_k) on V.
template <class F>
struct CoverDivisor {
    DoubleCover<F> cover;
    PolyT<F> fk, fkd;
    int k = 0;

    CoverDivisor(DoubleCover<F> c, PolyT<F> fk_, PolyT<F> fkd_, int k_)
        : cover(std::move(c)), fk(std::move(fk_)), fkd(std::move(fkd_)), k(k_) {
        if (k < cover.d) fail(ErrorCode::bad_argument, "divisor needs k >= d");
        if (fk.is_zero() && fkd.is_zero())
            fail(ErrorCode::bad_argument, "divisor data (f_k, f_{k-d}) must not both vanish");
        if (!fk.is_zero()) {
            require_same_ring(fk.ring(), cover.ring(), "cover divisor");
            if (fk.degree() != k) fail(ErrorCode::degree_mismatch, "f_k has wrong degree");
        }
        if (!fkd.is_zero()) {
            require_same_ring(fkd.ring(), cover.ring(), "cover divisor");
            if (fkd.degree() != k - cover.d) fail(ErrorCode::degree_mismatch, "f_{k-d} has wrong degree");
        }
    }
};

// The two eigenspaces of the involution on H^0(V, kL): pull-backs of degree-k
// forms, and y times pull-backs of degree-(k-d) forms. Sizes h(k) and h(k-d).
template <class F>
std::pair<std::vector<PolyT<F>>, std::vector<PolyT<F>>> isotypic_basis(const DoubleCover<F>& cover,
                                                                       long k) {
    if (k < 0) fail(ErrorCode::bad_argument, "isotypic_basis: k >= 0 required");
    return {monomial_basis<F>(cover.ring(), k), monomial_basis<F>(cover.ring(), k - cover.d)};
}

template <class F>
struct DivisorImage {
    PolyT<F> g;                  // f_k^2 - g2d f_{k-d}^2, the degree-2k image equation
    CompleteIntersection<F> ci;  // (f_{k-d}, f_k), the double locus
};

// Eliminates y from (y^2 - g2d, y f_{k-d} - f_k): the image of W under the
// cover map, double along Z = V(f_{k-d}, f_k).
template <class F>
DivisorImage<F> divisor_image(const CoverDivisor<F>& w) {
    if (w.fkd.is_zero() || w.fk.is_zero())
        fail(ErrorCode::component_divisor,
             "divisor is a pull-back or contains the ramification divisor; image is not of double-structure form");
    PolyT<F> g = w.fk * w.fk - w.cover.g2d * (w.fkd * w.fkd);
    if (g.is_zero())
        fail(ErrorCode::component_divisor, "image equation vanishes identically");
    return DivisorImage<F>{std::move(g), CompleteIntersection<F>(w.fkd, w.fk)};
}

// (x, y) -> (x, -y) on divisor data.
template <class F>
CoverDivisor<F> involution_conjugate(const CoverDivisor<F>& w) {
    return CoverDivisor<F>(w.cover, w.fk, -w.fkd, w.k);
}

// Extends a unit-weight polynomial to P(1^{n+1}, d) with y-exponent 0.
template <class F>
PolyT<F> embed_in_cover_ring(const PolyT<F>& p, const RingCtx& cring) {
    std::vector<typename PolyT<F>::Term> terms;
    for (const auto& t : p.terms()) {
        ExpVec e = t.e;
        e.push_back(0);
        terms.push_back({std::move(e), t.c});
    }
    return PolyT<F>::from_terms(cring, std::move(terms));
}

// Reduces modulo y^2 - g2d: rewrites every y^e, e >= 2, as g2d^{e/2} y^{e mod 2}.
template <class F>
PolyT<F> reduce_mod_cover(const PolyT<F>& p, const DoubleCover<F>& cover, const RingCtx& cring) {
    PolyT<F> g2d_c = embed_in_cover_ring(cover.g2d, cring);
    int yi = cring.nvars - 1;
    PolyT<F> acc = PolyT<F>::zero(cring);
    for (const auto& t : p.terms()) {
        int ey = t.e[size_t(yi)];
        ExpVec e = t.e;
        e[size_t(yi)] = ey % 2;
        PolyT<F> m = PolyT<F>::monomial(cring, std::move(e), t.c);
        for (int i = 0; i < ey / 2; ++i) m = m * g2d_c;
        acc = acc + m;
    }
    return acc;
}

// Weighted-ring identity (f_k - y f_{k-d})(f_k + y f_{k-d}) == g modulo
// y^2 - g2d: the pull-back of the image splits as W + i(W).
template <class F>
bool pullback_splits(const CoverDivisor<F>& w) {
    auto img = divisor_image(w);
    RingCtx cring = cover_ring(w.cover.n, w.cover.d, w.cover.ring().field);
    PolyT<F> y = PolyT<F>::variable(cring, cring.nvars - 1);
    PolyT<F> fk = embed_in_cover_ring(w.fk, cring);
    PolyT<F> fkd = embed_in_cover_ring(w.fkd, cring);
    PolyT<F> lhs = (fk - y * fkd) * (fk + y * fkd);
    return reduce_mod_cover(lhs, w.cover, cring) == embed_in_cover_ring(img.g, cring);
}

} // namespace dcov

#endif
