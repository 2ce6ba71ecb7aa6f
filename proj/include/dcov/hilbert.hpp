#ifndef DCOV_HILBERT_HPP
#define DCOV_HILBERT_HPP

#include "dcov/error.hpp"

namespace dcov {

inline long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// h(m) = h^0(P^n, O(m)) = binomial(n+m, n) for m >= 0, else 0.
inline long long h(int n, long long m) {
    if (n < 1) fail(ErrorCode::bad_argument, "h(n, m) needs n >= 1");
    return m < 0 ? 0 : binomial(n + m, n);
}

} // namespace dcov

#endif
