#ifndef DCOV_RING_HPP
#define DCOV_RING_HPP

#include <numeric>
#include <string>
#include <vector>

#include "dcov/error.hpp"
#include "dcov/field.hpp"

namespace dcov {

using ExpVec = std::vector<int>;

// Graded polynomial ring context: number of variables, positive integer
// weights (all 1 for P^n; (1,...,1,d) for the cover ring), coefficient field.
struct RingCtx {
    int nvars = 0;
    std::vector<int> weights;
    FieldDesc field;

    RingCtx() = default;
    RingCtx(std::vector<int> w, FieldDesc f) : nvars(int(w.size())), weights(std::move(w)), field(f) {
        if (nvars < 2) fail(ErrorCode::bad_argument, "ring needs at least 2 variables");
        for (int wi : weights)
            if (wi < 1) fail(ErrorCode::bad_argument, "ring weights must be positive");
    }

    bool unit_weights() const {
        for (int w : weights)
            if (w != 1) return false;
        return true;
    }

    long weighted_degree(const ExpVec& e) const {
        long m = 0;
        for (int i = 0; i < nvars; ++i) m += long(e[i]) * weights[i];
        return m;
    }

    bool operator==(const RingCtx&) const = default;
};

// Coordinate ring of P^n (unit weights, n+1 variables).
inline RingCtx projective_ring(int n, FieldDesc field) {
    if (n < 1) fail(ErrorCode::bad_argument, "projective ring needs n >= 1");
    return RingCtx(std::vector<int>(size_t(n) + 1, 1), field);
}

// Coordinate ring of P(1^{n+1}, d): the cover variable comes last.
inline RingCtx cover_ring(int n, int d, FieldDesc field) {
    if (n < 1 || d < 1) fail(ErrorCode::bad_argument, "cover ring needs n >= 1, d >= 1");
    std::vector<int> w(size_t(n) + 2, 1);
    w.back() = d;
    return RingCtx(std::move(w), field);
}

inline void require_same_ring(const RingCtx& a, const RingCtx& b, const char* where) {
    if (!(a == b)) fail(ErrorCode::ring_mismatch, std::string(where) + ": ring contexts differ");
}

// Descending lexicographic order on exponent vectors; within a fixed weighted
// degree this is the canonical (graded-lex) term order used everywhere.
inline bool exp_lex_greater(const ExpVec& a, const ExpVec& b) {
    return a > b;
}

} // namespace dcov

#endif
