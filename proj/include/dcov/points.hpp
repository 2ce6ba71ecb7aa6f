#ifndef DCOV_POINTS_HPP
#define DCOV_POINTS_HPP

#include <cstdint>
#include <vector>

#include "dcov/poly.hpp"
#include "dcov/rng.hpp"

namespace dcov {

using ZpPoint = std::vector<std::uint64_t>;

inline unsigned long long projective_point_count(int n, std::uint64_t p) {
    unsigned long long total = 0, power = 1;
    for (int i = 0; i <= n; ++i) {
        total += power;
        power *= p;
    }
    return total; // (p^{n+1} - 1) / (p - 1)
}

// Canonical representative: first nonzero coordinate scaled to 1.
inline ZpPoint canonicalize_point(ZpPoint x, const ZpField& f) {
    for (auto& c : x) c %= f.p;
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] != 0) {
            auto s = f.inv(x[i]);
            for (auto& c : x) c = f.mul(s, c);
            return x;
        }
    }
    fail(ErrorCode::bad_argument, "cannot canonicalize the zero vector");
}

// All canonical points of P^n(F_p): leading coordinates zero, then a 1, then
// free coordinates enumerated in base p.
inline std::vector<ZpPoint> enumerate_projective_points(int n, std::uint64_t p,
                                                        unsigned long long cap) {
    if (projective_point_count(n, p) > cap)
        fail(ErrorCode::cap_exceeded, "projective point enumeration exceeds the configured cap");
    std::vector<ZpPoint> pts;
    pts.reserve(size_t(projective_point_count(n, p)));
    for (int lead = 0; lead <= n; ++lead) {
        int free_coords = n - lead;
        unsigned long long combos = 1;
        for (int i = 0; i < free_coords; ++i) combos *= p;
        for (unsigned long long idx = 0; idx < combos; ++idx) {
            ZpPoint x(size_t(n) + 1, 0);
            x[size_t(lead)] = 1;
            unsigned long long rest = idx;
            for (int i = lead + 1; i <= n; ++i) {
                x[size_t(i)] = rest % p;
                rest /= p;
            }
            pts.push_back(std::move(x));
        }
    }
    return pts;
}

inline ZpPoint random_projective_point(int n, const ZpField& f, SplitMix64& rng) {
    for (;;) {
        ZpPoint x(size_t(n) + 1);
        bool nonzero = false;
        for (auto& c : x) {
            c = rng.below(f.p);
            nonzero = nonzero || c != 0;
        }
        if (nonzero) return canonicalize_point(std::move(x), f);
    }
}

// All projective points where every polynomial in the system vanishes.
inline std::vector<ZpPoint> enumerate_variety_points(const std::vector<PolyT<ZpField>>& polys,
                                                     std::uint64_t p, unsigned long long cap) {
    if (polys.empty()) fail(ErrorCode::bad_argument, "empty polynomial system");
    const RingCtx& ring = polys.front().ring();
    for (const auto& q : polys) require_same_ring(ring, q.ring(), "variety point enumeration");
    if (ring.field != FieldDesc{FieldKind::prime, p})
        fail(ErrorCode::ring_mismatch, "system is not defined over F_p for the requested p");
    int n = ring.nvars - 1;
    std::vector<ZpPoint> hits;
    for (auto& x : enumerate_projective_points(n, p, cap)) {
        bool all_zero = true;
        for (const auto& q : polys)
            if (q.evaluate(x) != 0) {
                all_zero = false;
                break;
            }
        if (all_zero) hits.push_back(std::move(x));
    }
    return hits;
}

} // namespace dcov

#endif
