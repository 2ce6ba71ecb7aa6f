#ifndef DCOV_GEN_HPP
#define DCOV_GEN_HPP

#include <string>
#include <vector>

#include "dcov/bundle.hpp"
#include "dcov/ci.hpp"
#include "dcov/lift.hpp"
#include "dcov/points.hpp"
#include "dcov/rng.hpp"

namespace dcov {

// Seeded generation parameters. Identical configs produce identical output,
// across runs and platforms (splitmix64 streams, no library distributions).
struct GenConfig {
    std::uint64_t seed = 0;
    FieldDesc field = prime_field(101);
    long coeff_bound = 10;       // rational generation draws integers in [-bound, bound]
    std::uint64_t smooth_prime = 101;
    long trials = 24;            // sampling budget (points or slices)
    int retry_cap = 64;
    unsigned long long point_cap = default_point_cap;
};

template <class F>
PolyT<F> random_poly(const RingCtx& ring, long degree, const GenConfig& cfg) {
    SplitMix64 rng(cfg.seed);
    return random_poly<F>(ring, degree, rng, cfg.coeff_bound);
}

// Draws generator pairs until the sampled smoothness check accepts one:
// every point of V(f_a, f_b) found over F_p has a rank-2 Jacobian. The
// a = 0 convention returns (1, f_b) directly (Z empty).
template <class F>
CompleteIntersection<F> random_smooth_ci(int n, int a, int b, const GenConfig& cfg,
                                         SplitMix64& rng) {
    if (a < 0 || a > b || b < 1)
        fail(ErrorCode::bad_argument, "random_smooth_ci: need 0 <= a <= b, b >= 1");
    RingCtx ring = projective_ring(n, cfg.field);
    F f = field_from_desc<F>(cfg.field);
    if (a == 0)
        return CompleteIntersection<F>(PolyT<F>::constant(ring, f.one()),
                                       random_poly<F>(ring, b, rng, cfg.coeff_bound));
    for (int attempt = 0; attempt < cfg.retry_cap; ++attempt) {
        PolyT<F> fa = random_poly<F>(ring, a, rng, cfg.coeff_bound);
        PolyT<F> fb = random_poly<F>(ring, b, rng, cfg.coeff_bound);
        if (divides(fa, fb)) continue;
        auto rep = smoothness_sample_pair(fa, fb, cfg.smooth_prime, cfg.trials, rng.next(),
                                          cfg.point_cap);
        if (rep.verdict == SmoothnessVerdict::no_singular_point_found)
            return CompleteIntersection<F>(std::move(fa), std::move(fb));
    }
    fail(ErrorCode::retry_exceeded,
         "no smooth-sampled complete intersection found within the retry cap");
}

template <class F>
CompleteIntersection<F> random_smooth_ci(int n, int a, int b, const GenConfig& cfg) {
    SplitMix64 rng(cfg.seed);
    return random_smooth_ci<F>(n, a, b, cfg, rng);
}

// All projective points where the system vanishes; errors when P^n(F_p)
// exceeds the cap.
inline std::vector<ZpPoint> enumerate_points(const std::vector<PolyT<ZpField>>& polys,
                                             std::uint64_t prime,
                                             unsigned long long cap = default_point_cap) {
    return enumerate_variety_points(polys, prime, cap);
}

// Random cover-plus-divisor instance: branch g2d, divisor data (f_k, f_{k-d}),
// with (f_{k-d}, f_k) a valid generator pair. Smoothness is reported by the
// pipelines, not enforced here.
template <class F>
Bundle<F> random_divisor_bundle(int n, int d, int k, const GenConfig& cfg, SplitMix64& rng) {
    if (n < 1 || d < 1 || k < d) fail(ErrorCode::bad_argument, "need n >= 1 and k >= d >= 1");
    RingCtx ring = projective_ring(n, cfg.field);
    F f = field_from_desc<F>(cfg.field);
    for (int attempt = 0; attempt < cfg.retry_cap; ++attempt) {
        PolyT<F> g2d = random_poly<F>(ring, 2L * d, rng, cfg.coeff_bound);
        PolyT<F> fk = random_poly<F>(ring, k, rng, cfg.coeff_bound);
        PolyT<F> fkd = k == d ? PolyT<F>::constant(ring, f.one())
                              : random_poly<F>(ring, long(k) - d, rng, cfg.coeff_bound);
        if (k > d && divides(fkd, fk)) continue;
        Bundle<F> b;
        b.name = "random";
        b.n = n;
        b.d = d;
        b.k = k;
        b.polys.emplace("g2d", std::move(g2d));
        b.polys.emplace("fk", std::move(fk));
        b.polys.emplace("fkd", std::move(fkd));
        return b;
    }
    fail(ErrorCode::retry_exceeded, "no valid divisor bundle found within the retry cap");
}

template <class F>
Bundle<F> random_divisor_bundle(int n, int d, int k, const GenConfig& cfg) {
    SplitMix64 rng(cfg.seed);
    return random_divisor_bundle<F>(n, d, k, cfg, rng);
}

// --- Canned instances ------------------------------------------------------

namespace detail {

inline PolyT<QField> qpoly(const RingCtx& ring, std::vector<std::pair<ExpVec, long>> data) {
    QField f;
    std::vector<PolyT<QField>::Term> terms;
    for (auto& [e, c] : data) terms.push_back({std::move(e), f.from_int(c)});
    return PolyT<QField>::from_terms(ring, std::move(terms));
}

} // namespace detail

inline std::vector<std::string> canned_names() {
    return {"quadric-surface", "del-pezzo-2",  "sextic-double-plane",
            "quartic-double-solid", "totaro-k4", "totaro-k5"};
}

// Fixed, documented example data. The geometric bundles carry branch and
// divisor data over Q; the totaro-* bundles carry a single weighted equation
// whose construction certifies weighted homogeneity of degree 6.
inline AnyBundle canned(const std::string& name) {
    using detail::qpoly;
    if (name == "quadric-surface") {
        // quadric in P^3 as a double plane: conic branch, k = 2 divisor
        RingCtx r = projective_ring(2, rational_field());
        Bundle<QField> b;
        b.name = name;
        b.n = 2, b.d = 1, b.k = 2;
        b.polys.emplace("g2d", qpoly(r, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1}}));
        b.polys.emplace("fk", qpoly(r, {{{1, 1, 0}, 1}}));
        b.polys.emplace("fkd", qpoly(r, {{{0, 0, 1}, 1}}));
        return b;
    }
    if (name == "del-pezzo-2") {
        // degree-2 del Pezzo: quartic branch, k = 3 divisor
        RingCtx r = projective_ring(2, rational_field());
        Bundle<QField> b;
        b.name = name;
        b.n = 2, b.d = 2, b.k = 3;
        b.polys.emplace("g2d", qpoly(r, {{{4, 0, 0}, 1}, {{0, 4, 0}, 1}, {{0, 0, 4}, 1}}));
        b.polys.emplace("fk", qpoly(r, {{{3, 0, 0}, 1}, {{0, 3, 0}, 2}, {{0, 0, 3}, 3}, {{1, 1, 1}, 1}}));
        b.polys.emplace("fkd", qpoly(r, {{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}}));
        return b;
    }
    if (name == "sextic-double-plane") {
        // genus-2 case: sextic branch, k = 6 divisor
        RingCtx r = projective_ring(2, rational_field());
        Bundle<QField> b;
        b.name = name;
        b.n = 2, b.d = 3, b.k = 6;
        b.polys.emplace("g2d", qpoly(r, {{{6, 0, 0}, 1}, {{0, 6, 0}, 1}, {{0, 0, 6}, 1}}));
        b.polys.emplace("fk", qpoly(r, {{{6, 0, 0}, 1},
                                        {{0, 6, 0}, -1},
                                        {{2, 2, 2}, 1},
                                        {{1, 4, 1}, 2},
                                        {{0, 0, 6}, 3}}));
        b.polys.emplace("fkd", qpoly(r, {{{3, 0, 0}, 1}, {{0, 3, 0}, 1}, {{0, 0, 3}, 1}, {{1, 1, 1}, -1}}));
        return b;
    }
    if (name == "quartic-double-solid") {
        // quartic branch in P^3, anticanonical k = 2 divisor (k = d, Z empty)
        RingCtx r = projective_ring(3, rational_field());
        Bundle<QField> b;
        b.name = name;
        b.n = 3, b.d = 2, b.k = 2;
        b.polys.emplace("g2d", qpoly(r, {{{4, 0, 0, 0}, 1}, {{0, 4, 0, 0}, 1}, {{0, 0, 4, 0}, 1}, {{0, 0, 0, 4}, 1}}));
        b.polys.emplace("fk", qpoly(r, {{{2, 0, 0, 0}, 1}, {{0, 2, 0, 0}, 1}, {{0, 0, 1, 1}, 1}}));
        b.polys.emplace("fkd", qpoly(r, {{{0, 0, 0, 0}, 1}}));
        return b;
    }
    if (name == "totaro-k4") {
        // sextic in P(1^3, 3, 4^6): variables (x0, x1, x2, y, z0..z5)
        RingCtx r({1, 1, 1, 3, 4, 4, 4, 4, 4, 4}, rational_field());
        Bundle<QField> b;
        b.name = name;
        b.polys.emplace("equation",
                        qpoly(r, {{{0, 0, 0, 2, 0, 0, 0, 0, 0, 0}, 1},
                                  {{2, 0, 0, 0, 1, 0, 0, 0, 0, 0}, 1},
                                  {{1, 1, 0, 0, 0, 1, 0, 0, 0, 0}, 1},
                                  {{1, 0, 1, 0, 0, 0, 1, 0, 0, 0}, 1},
                                  {{0, 2, 0, 0, 0, 0, 0, 1, 0, 0}, 1},
                                  {{0, 1, 1, 0, 0, 0, 0, 0, 1, 0}, 1},
                                  {{0, 0, 2, 0, 0, 0, 0, 0, 0, 1}, 1}}));
        return b;
    }
    if (name == "totaro-k5") {
        // sextic in P(1^3, 3, 5^3): variables (x0, x1, x2, y, z0, z1, z2)
        RingCtx r({1, 1, 1, 3, 5, 5, 5}, rational_field());
        Bundle<QField> b;
        b.name = name;
        b.polys.emplace("equation", qpoly(r, {{{0, 0, 0, 2, 0, 0, 0}, 1},
                                              {{1, 0, 0, 0, 1, 0, 0}, 1},
                                              {{0, 1, 0, 0, 0, 1, 0}, 1},
                                              {{0, 0, 1, 0, 0, 0, 1}, 1}}));
        return b;
    }
    fail(ErrorCode::unknown_name, "unknown canned bundle: " + name);
}

} // namespace dcov

#endif
