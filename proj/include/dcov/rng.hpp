#ifndef DCOV_RNG_HPP
#define DCOV_RNG_HPP

#include <cstdint>
#include <string>

#include "dcov/poly.hpp"

namespace dcov {

// splitmix64: the versioned generator named in report metadata. Fully
// specified, so test vectors are stable across platforms and standard
// libraries.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection; bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) fail(ErrorCode::bad_argument, "rng bound must be positive");
        std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % bound);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    static constexpr const char* name() { return "splitmix64"; }

  private:
    std::uint64_t state_;
};

// Uniform field element: residues in [0, p) over F_p, integers in
// [-bound, bound] over Q.
template <class F>
typename F::Elem random_elem(const F& f, SplitMix64& rng, long coeff_bound) {
    if constexpr (std::is_same_v<F, ZpField>) {
        (void)coeff_bound;
        return rng.below(f.p);
    } else {
        long span = 2 * coeff_bound + 1;
        return f.from_int(long(rng.below(std::uint64_t(span))) - coeff_bound);
    }
}

// Dense random homogeneous polynomial: one draw per monomial of the degree,
// in canonical order; redrawn whole if all coefficients came out zero, so
// the result is never the zero polynomial.
template <class F>
PolyT<F> random_poly(const RingCtx& ring, long degree, SplitMix64& rng, long coeff_bound) {
    if (degree < 0) fail(ErrorCode::bad_argument, "random_poly: degree must be >= 0");
    F f = field_from_desc<F>(ring.field);
    auto exps = exponents_of_degree(ring, degree);
    if (exps.empty()) fail(ErrorCode::bad_argument, "random_poly: empty monomial basis");
    for (;;) {
        std::vector<typename PolyT<F>::Term> terms;
        for (const auto& e : exps) {
            auto c = random_elem(f, rng, coeff_bound);
            if (!f.is_zero(c)) terms.push_back({e, c});
        }
        if (!terms.empty()) return PolyT<F>::from_terms(ring, std::move(terms));
    }
}

} // namespace dcov

#endif
