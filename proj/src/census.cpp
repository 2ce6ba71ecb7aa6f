#include "dcov/census.hpp"

namespace dcov {

DimReport dim_report(int n, int k, int d) {
    if (d < 1 || k < d) fail(ErrorCode::bad_argument, "dim_report: needs k >= d >= 1");
    DimReport r;
    r.n = n, r.k = k, r.d = d;
    r.dim_Vd = h(n, 2 * d) - 1;
    r.dim_VW = h(n, 2 * d) + h(n, k) + h(n, k - d) - 2;
    if (k > d) {
        r.dim_Z = h(n, k - d) + h(n, k) - h(n, d) - 2;
        r.dim_W = h(n, k - d) + h(n, k) + h(n, 2 * d) - h(n, 2 * d - k) - 2;
        r.fiber_dim = h(n, 2 * d - k);
    } else {
        r.dim_Z = -1; // single point: Z is empty
        r.dim_W = h(n, 2 * d) - 1;
        r.fiber_dim = h(n, d); // the 1-dimensional rescaling group eats one dimension
    }
    return r;
}

SeveriReport severi_report(int k, int d) {
    if (d < 1 || k < d) fail(ErrorCode::bad_argument, "severi_report: needs k >= d >= 1");
    SeveriReport r;
    r.k = k, r.d = d;
    r.genus = (2LL * k - 1) * (2LL * k - 2) / 2 - 1LL * k * (k - d);
    r.contact_points = 2LL * k * d;
    r.family_dim = h(2, k) + h(2, k - d) - 1;
    r.expected_dim = 1LL * k * (k + 3 - d);
    r.excess = r.family_dim - r.expected_dim;
    return r;
}

CorankReport corank_report(int k) {
    if (k < 1) fail(ErrorCode::bad_argument, "corank_report: needs k >= 1");
    CorankReport r;
    r.k = k;
    r.genus = 1LL * k * k + 1;
    if (k >= 4) {
        r.cork_phi = h(2, 6 - k) + 1;
        r.nu2 = 0;
        r.fiber_dim_reported = h(2, 6 - k);
    } else if (k == 3) {
        r.cork_phi = 10; // plane sextic constant
        r.nu2 = 1;
        r.fiber_dim_reported = h(2, 3);
        r.tabulated = true;
    } else {
        // hyperelliptic constants: cork = 3g - 2; fibers 18 (k=1) and 15 (k=2)
        r.cork_phi = 3 * r.genus - 2;
        r.nu2 = -1;
        r.fiber_dim_reported = k == 1 ? 18 : 15;
        r.tabulated = true;
    }
    return r;
}

std::pair<long long, long long> quartic_extension_counts() {
    return {h(3, 0) + h(3, 2) - 1, h(3, 0) + h(3, 0) - 1};
}

NormalBundleLedger normal_bundle_ledger() {
    auto row_y = [](int k) { return 10 * h(3, 2 - 2 * k) - 4 * h(3, 1 - 2 * k); };
    auto row_ys = [&](int k) { return row_y(k) - row_y(k + 2); };
    auto sections_s = [](int m) { return h(3, 2 * m) - h(3, 2 * m - 4); };
    auto row_s = [&](int k) { return row_ys(k) + sections_s(2 - k); };
    auto row_c = [&](int k) { return row_s(k) - row_s(k + 1); };

    NormalBundleLedger l;
    for (int k = 1; k <= 3; ++k) {
        l.row_y[size_t(k - 1)] = row_y(k);
        l.row_s[size_t(k - 1)] = row_s(k);
        l.row_c[size_t(k - 1)] = row_c(k);
    }
    l.consistent = l.row_y == std::array<long long, 3>{10, 0, 0} &&
                   l.row_s == std::array<long long, 3>{20, 1, 0} &&
                   l.row_c == std::array<long long, 3>{19, 1, 0};
    return l;
}

} // namespace dcov
