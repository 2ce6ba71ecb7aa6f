#ifndef DCOV_LIFT_HPP
#define DCOV_LIFT_HPP

#include <optional>
#include <set>
#include <vector>

#include "dcov/ci.hpp"
#include "dcov/cover.hpp"
#include "dcov/points.hpp"
#include "dcov/poly.hpp"
#include "dcov/rng.hpp"

namespace dcov {

constexpr unsigned long long default_point_cap = 1'000'000;

// Completed-square data of an image equation g over Z = V(f_{k-d}, f_k):
// scalar * g = f_tilde^2 + f_{k-d}^2 * g_tilde, with the degree-(2d-k)
// parameter space describing every branch locus over the same image.
template <class F>
struct LiftFamily {
    CompleteIntersection<F> ci; // (f_{k-d}, f_k)
    PolyT<F> f_tilde;           // degree k
    PolyT<F> g_tilde;           // degree 2d
    std::vector<PolyT<F>> param_basis;
    PolyT<F> g;
    typename F::Elem scalar;
    int k = 0, d = 0;
};

template <class F>
struct FamilyMember {
    PolyT<F> f_hat; // degree k
    PolyT<F> g_hat; // degree 2d
    PolyT<F> a;     // degree 2d-k parameter (zero polynomial allowed)
};

// The completed-square form of g: decompose in I_Z^2, then absorb the cross
// term. Raises zero_branch when the branch equation degenerates to zero.
template <class F>
LiftFamily<F> lift_branch(const PolyT<F>& g, const CompleteIntersection<F>& ci) {
    const F f = field_from_desc<F>(ci.ring.field);
    int k = ci.b, d = ci.b - ci.a;
    if (d < 1)
        fail(ErrorCode::bad_argument, "lift needs generator degrees (k-d, k) with k >= d >= 1");

    auto dec = decompose_in_i2(g, ci);
    auto scalar = f.inv(dec.C);
    PolyT<F> a_norm = scalar * dec.A; // the degree-2d part
    PolyT<F> b_norm = scalar * dec.B; // the degree-d part
    PolyT<F> f_tilde = ci.fb + ci.fa * b_norm;
    PolyT<F> g_tilde = a_norm - b_norm * b_norm;
    if (g_tilde.is_zero())
        fail(ErrorCode::zero_branch, "branch equation degenerates to zero; no double cover exists");
    if (f_tilde.is_zero())
        fail(ErrorCode::degenerate_decomposition, "contact hypersurface vanishes identically");
    return LiftFamily<F>{ci,
                         std::move(f_tilde),
                         std::move(g_tilde),
                         monomial_basis<F>(ci.ring, 2L * d - k),
                         g,
                         scalar,
                         k,
                         d};
}

// Member at parameter a: shifts the completed square along the linear syzygy
// between f_{k-d}^2 and f_{k-d} f_k.
template <class F>
FamilyMember<F> family_member(const LiftFamily<F>& fam, const PolyT<F>& a) {
    const F f = field_from_desc<F>(fam.ci.ring.field);
    if (!a.is_zero()) {
        require_same_ring(a.ring(), fam.ci.ring, "family_member");
        if (a.degree() != 2L * fam.d - fam.k)
            fail(ErrorCode::degree_mismatch, "family parameter has wrong degree");
    }
    if (a.is_zero()) return FamilyMember<F>{fam.f_tilde, fam.g_tilde, a};
    PolyT<F> fa2 = fam.ci.fa * fam.ci.fa;
    PolyT<F> f_hat = fam.f_tilde - a * fa2;
    PolyT<F> g_hat = fam.g_tilde + f.from_int(2) * (a * fam.f_tilde) - (a * a) * fa2;
    return FamilyMember<F>{std::move(f_hat), std::move(g_hat), a};
}

// Exact certificate: scalar * g - f_hat^2 - f_{k-d}^2 * g_hat == 0. This is
// simultaneously the everywhere-tangency statement, since it exhibits g as a
// square modulo g_hat.
template <class F>
bool verify_lift(const PolyT<F>& g, const CompleteIntersection<F>& ci, const FamilyMember<F>& member,
                 const typename F::Elem& scalar) {
    PolyT<F> lhs = scalar * g - member.f_hat * member.f_hat;
    if (!member.g_hat.is_zero()) lhs = lhs - (ci.fa * ci.fa) * member.g_hat;
    return lhs.is_zero();
}

// f_hat = alpha f_k + beta f_{k-d} solvable: the contact hypersurface
// contains Z.
template <class F>
bool contact_contains_ci(const CompleteIntersection<F>& ci, const PolyT<F>& f_hat) {
    if (f_hat.is_zero() || f_hat.degree() != ci.b) return false;
    const F f = field_from_desc<F>(ci.ring.field);
    std::vector<PolyT<F>> cols;
    cols.push_back(ci.fb);
    for (const auto& mu : monomial_basis<F>(ci.ring, ci.b - ci.a)) cols.push_back(ci.fa * mu);
    auto m = coefficient_matrix(ci.ring, ci.b, cols);
    return solve(m, coeff_vector(f_hat, degree_basis(ci.ring, ci.b))).has_value();
}

// Solves f_tilde - a f_{k-d}^2 = f_k for the parameter a; when solvable the
// returned member has contact hypersurface exactly f_k, which is the member
// matching the source divisor.
template <class F>
std::optional<FamilyMember<F>> member_matching_generator(const LiftFamily<F>& fam) {
    const F f = field_from_desc<F>(fam.ci.ring.field);
    PolyT<F> rhs = fam.f_tilde - fam.ci.fb;
    if (rhs.is_zero()) return family_member(fam, PolyT<F>::zero(fam.ci.ring));
    if (fam.param_basis.empty()) return std::nullopt;
    PolyT<F> fa2 = fam.ci.fa * fam.ci.fa;
    std::vector<PolyT<F>> cols;
    for (const auto& mu : fam.param_basis) cols.push_back(fa2 * mu);
    auto m = coefficient_matrix(fam.ci.ring, fam.k, cols);
    auto x = solve(m, coeff_vector(rhs, degree_basis(fam.ci.ring, fam.k)));
    if (!x) return std::nullopt;
    std::vector<typename PolyT<F>::Term> terms;
    for (size_t i = 0; i < fam.param_basis.size(); ++i)
        if (!f.is_zero((*x)[i]))
            terms.push_back({fam.param_basis[i].terms().front().e, (*x)[i]});
    return family_member(fam, PolyT<F>::from_terms(fam.ci.ring, std::move(terms)));
}

// Projective round-trip: the family over the image of a divisor must contain
// the class of the original branch equation.
template <class F>
bool recovers_branch_class(const LiftFamily<F>& fam, const PolyT<F>& g2d_original) {
    auto member = member_matching_generator(fam);
    if (!member) return false;
    return proportional(member->g_hat, g2d_original) || proportional(member->g_hat, -g2d_original);
}

// Distinct parameters give non-proportional branch equations, sampled.
template <class F>
bool family_injectivity_check(const LiftFamily<F>& fam, int samples, std::uint64_t seed,
                              long coeff_bound = 10) {
    if (fam.param_basis.empty()) return true; // vacuous: the family is a single point
    SplitMix64 rng(seed);
    long deg = 2L * fam.d - fam.k;
    for (int s = 0; s < samples; ++s) {
        PolyT<F> a1 = random_poly<F>(fam.ci.ring, deg, rng, coeff_bound);
        PolyT<F> a2 = random_poly<F>(fam.ci.ring, deg, rng, coeff_bound);
        if (a1 == a2) continue;
        auto m1 = family_member(fam, a1);
        auto m2 = family_member(fam, a2);
        if (proportional(m1.g_hat, m2.g_hat)) return false;
    }
    return true;
}

// --- Finite-field smoothness sampling -------------------------------------

enum class SmoothnessVerdict { no_singular_point_found, singular_point_found, no_rational_point_found };

inline const char* verdict_name(SmoothnessVerdict v) {
    switch (v) {
        case SmoothnessVerdict::no_singular_point_found: return "no-singular-point-found";
        case SmoothnessVerdict::singular_point_found: return "singular-point-found";
        case SmoothnessVerdict::no_rational_point_found: return "no-rational-point-found";
    }
    return "?";
}

struct SmoothnessReport {
    SmoothnessVerdict verdict = SmoothnessVerdict::no_rational_point_found;
    std::optional<ZpPoint> witness;
    unsigned long long points_on_variety = 0;
    bool exhaustive = false;
};

// Reduction mod p of a rational polynomial; rejects primes dividing any
// denominator.
inline PolyT<ZpField> reduce_mod_p(const PolyT<QField>& p, std::uint64_t prime) {
    FieldDesc fd = prime_field(prime);
    ZpField f(prime);
    RingCtx ring(p.ring().weights, fd);
    std::vector<PolyT<ZpField>::Term> terms;
    for (const auto& t : p.terms()) {
        mpz_class den = t.c.get_den();
        if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(prime)))
            fail(ErrorCode::bad_prime, "prime divides a coefficient denominator");
        mpz_class num = t.c.get_num();
        mpz_class nr = num % static_cast<unsigned long>(prime);
        if (nr < 0) nr += static_cast<unsigned long>(prime);
        mpz_class dr = den % static_cast<unsigned long>(prime);
        std::uint64_t c = f.mul(nr.get_ui(), f.inv(dr.get_ui()));
        if (c != 0) terms.push_back({t.e, c});
    }
    return PolyT<ZpField>::from_terms(ring, std::move(terms));
}

template <class F>
PolyT<ZpField> to_prime_field(const PolyT<F>& p, std::uint64_t prime) {
    if constexpr (std::is_same_v<F, ZpField>) {
        if (p.ring().field.p != prime)
            fail(ErrorCode::bad_prime, "polynomial already lives over a different prime field");
        return p;
    } else {
        return reduce_mod_p(p, prime);
    }
}

namespace detail {

inline bool jacobian_vanishes_at(const std::vector<PolyT<ZpField>>& jac, const ZpPoint& x) {
    for (const auto& d : jac)
        if (d.evaluate(x) != 0) return false;
    return true;
}

} // namespace detail

// Samples points of the hypersurface V(p) over F_prime (exhaustively when
// P^n(F_prime) fits within the cap, otherwise `trials` random points) and
// checks the Jacobian criterion at every point found.
template <class F>
SmoothnessReport smoothness_sample(const PolyT<F>& p, std::uint64_t prime, long trials,
                                   std::uint64_t seed, unsigned long long cap = default_point_cap) {
    if (p.is_zero()) fail(ErrorCode::bad_argument, "smoothness sampling needs a nonzero polynomial");
    PolyT<ZpField> q = to_prime_field(p, prime);
    if (q.is_zero()) fail(ErrorCode::bad_prime, "polynomial vanishes identically mod the prime");
    ZpField f(prime);
    int n = q.ring().nvars - 1;
    auto jac = q.jacobian();

    SmoothnessReport rep;
    auto visit = [&](const ZpPoint& x) -> bool {
        if (q.evaluate(x) != 0) return false;
        ++rep.points_on_variety;
        if (detail::jacobian_vanishes_at(jac, x)) {
            rep.verdict = SmoothnessVerdict::singular_point_found;
            rep.witness = x;
            return true;
        }
        return false;
    };

    if (projective_point_count(n, prime) <= cap) {
        rep.exhaustive = true;
        for (const auto& x : enumerate_projective_points(n, prime, cap))
            if (visit(x)) return rep;
    } else {
        SplitMix64 rng(seed);
        for (long t = 0; t < trials; ++t)
            if (visit(random_projective_point(n, f, rng))) return rep;
    }
    rep.verdict = rep.points_on_variety > 0 ? SmoothnessVerdict::no_singular_point_found
                                            : SmoothnessVerdict::no_rational_point_found;
    return rep;
}

// Smoothness sampling for the pair (f_a, f_b): rank-2 Jacobian at every point
// of V(f_a, f_b) found. When the ambient space is too large to enumerate, the
// pair is pulled back to random hyperplane slices (exhaustive over each
// slice), which actually produces points of a codimension-2 locus; rejection
// from random ambient points would essentially never hit it.
template <class F>
SmoothnessReport smoothness_sample_pair(const PolyT<F>& pa, const PolyT<F>& pb, std::uint64_t prime,
                                        long trials, std::uint64_t seed,
                                        unsigned long long cap = default_point_cap) {
    PolyT<ZpField> qa = to_prime_field(pa, prime);
    PolyT<ZpField> qb = to_prime_field(pb, prime);
    if (qa.is_zero() || qb.is_zero())
        fail(ErrorCode::bad_prime, "generator vanishes identically mod the prime");
    ZpField f(prime);
    const RingCtx& ring = qa.ring();
    int n = ring.nvars - 1;
    auto jac_a = qa.jacobian();
    auto jac_b = qb.jacobian();

    SmoothnessReport rep;
    auto visit = [&](const ZpPoint& x) -> bool {
        if (qa.evaluate(x) != 0 || qb.evaluate(x) != 0) return false;
        ++rep.points_on_variety;
        MatrixT<ZpField> jmat(f, 2, n + 1);
        for (int j = 0; j <= n; ++j) {
            jmat.at(0, j) = jac_a[size_t(j)].evaluate(x);
            jmat.at(1, j) = jac_b[size_t(j)].evaluate(x);
        }
        if (rank(jmat) < 2) {
            rep.verdict = SmoothnessVerdict::singular_point_found;
            rep.witness = x;
            return true;
        }
        return false;
    };

    if (projective_point_count(n, prime) <= cap) {
        rep.exhaustive = true;
        for (const auto& x : enumerate_projective_points(n, prime, cap))
            if (visit(x)) return rep;
    } else {
        if (projective_point_count(n - 1, prime) > cap)
            fail(ErrorCode::cap_exceeded, "hyperplane slice still exceeds the enumeration cap");
        SplitMix64 rng(seed);
        RingCtx slice_ring(std::vector<int>(size_t(n), 1), ring.field);
        std::set<ZpPoint> seen;
        for (long t = 0; t < trials; ++t) {
            // random hyperplane v.x = 0, parameterized by a kernel basis
            MatrixT<ZpField> vrow(f, 1, n + 1);
            bool nonzero = false;
            for (int j = 0; j <= n; ++j) {
                vrow.at(0, j) = rng.below(prime);
                nonzero = nonzero || vrow.at(0, j) != 0;
            }
            if (!nonzero) continue;
            auto basis = nullspace(vrow); // n independent ambient vectors
            std::vector<PolyT<ZpField>> args;
            for (int i = 0; i <= n; ++i) {
                std::vector<PolyT<ZpField>::Term> lin;
                for (int j = 0; j < n; ++j) {
                    if (basis[size_t(j)][size_t(i)] == 0) continue;
                    ExpVec e(size_t(n), 0);
                    e[size_t(j)] = 1;
                    lin.push_back({std::move(e), basis[size_t(j)][size_t(i)]});
                }
                args.push_back(PolyT<ZpField>::from_terms(slice_ring, std::move(lin)));
            }
            PolyT<ZpField> sa = substitute(qa, args);
            PolyT<ZpField> sb = substitute(qb, args);
            if (sa.is_zero() || sb.is_zero()) continue; // slice inside a generator
            for (const auto& u : enumerate_variety_points({sa, sb}, prime, cap)) {
                ZpPoint x(size_t(n) + 1, 0);
                for (int i = 0; i <= n; ++i)
                    for (int j = 0; j < n; ++j)
                        x[size_t(i)] = f.add(x[size_t(i)], f.mul(u[size_t(j)], basis[size_t(j)][size_t(i)]));
                auto cx = canonicalize_point(std::move(x), f);
                if (!seen.insert(cx).second) continue;
                if (visit(cx)) return rep;
            }
        }
    }
    rep.verdict = rep.points_on_variety > 0 ? SmoothnessVerdict::no_singular_point_found
                                            : SmoothnessVerdict::no_rational_point_found;
    return rep;
}

} // namespace dcov

#endif
