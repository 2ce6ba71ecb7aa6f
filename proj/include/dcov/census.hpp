#ifndef DCOV_CENSUS_HPP
#define DCOV_CENSUS_HPP

#include <array>
#include <utility>

#include "dcov/ci.hpp"
#include "dcov/hilbert.hpp"

namespace dcov {

// Dimension count for the parameter spaces of (cover, divisor) pairs and of
// double-structure images, and the fiber dimension of the forgetful map
// between them. -1 encodes an empty/unused entry (dim_Z at k = d).
struct DimReport {
    int n = 0, k = 0, d = 0;
    long long dim_Vd = 0;
    long long dim_VW = 0;
    long long dim_Z = 0;
    long long dim_W = 0;
    long long fiber_dim = 0;
};

DimReport dim_report(int n, int k, int d);

// Plane-curve family data for the image of |kL| on a double plane branched
// over a degree-2d curve: geometric genus, contact count with the branch
// curve, actual and expected family dimensions, and their difference.
struct SeveriReport {
    int k = 0, d = 0;
    long long genus = 0;
    long long contact_points = 0;
    long long family_dim = 0;
    long long expected_dim = 0;
    long long excess = 0;
};

SeveriReport severi_report(int k, int d);

// Corank of the Gauss-Wahl map for a general smooth member of |kL| on a
// genus-2 polarized double plane (genus k^2 + 1). Values for k <= 2 are
// tabulated hyperelliptic constants; k = 3 is the plane-sextic value; for
// k >= 4 the corank is h^0(P^2, O(6-k)) + 1.
struct CorankReport {
    int k = 0;
    long long genus = 0;
    long long cork_phi = 0;
    long long nu2 = 0; // -1 when not reported (k <= 2)
    long long fiber_dim_reported = 0;
    bool tabulated = false;
};

CorankReport corank_report(int k);

// Dimensions of the spaces of quartics in P^3 through the divisor kC cut by
// the k-th power of a quadric on a quartic surface, k = 1, 2.
std::pair<long long, long long> quartic_extension_counts();

// h^0 of twisted normal bundles N(-k), k = 1..3, for the 2-Veronese
// threefold in P^9, a quadric section of it (a K3 quartic model), and a
// hyperplane section of that (a curve), computed by exact-sequence
// arithmetic with the proven vanishing.
struct NormalBundleLedger {
    std::array<long long, 3> row_y{};
    std::array<long long, 3> row_s{};
    std::array<long long, 3> row_c{};
    bool consistent = false; // rows equal (10,0,0), (20,1,0), (19,1,0)
};

NormalBundleLedger normal_bundle_ledger();

// Dimension of the space of plane cubics through the double locus of a
// degree-(k-3, k) pair: rank of multiplication by f_{k-3} into degree 3.
// Equals h(2, 6-k) for nonzero f_{k-3}.
template <class F>
long long cubics_through_nodes(const CompleteIntersection<F>& ci) {
    if (ci.ring.nvars != 3)
        fail(ErrorCode::bad_argument, "cubics_through_nodes: plane curves only (n = 2)");
    int k = ci.b;
    if (k < 4) fail(ErrorCode::bad_argument, "cubics_through_nodes: needs k >= 4");
    if (ci.a != k - 3)
        fail(ErrorCode::bad_argument, "cubics_through_nodes: pair must have degrees (k-3, k)");
    const F f = field_from_desc<F>(ci.ring.field);
    std::vector<PolyT<F>> cols;
    for (const auto& mu : monomial_basis<F>(ci.ring, 6L - k)) cols.push_back(ci.fa * mu);
    if (cols.empty()) return 0;
    return rank(coefficient_matrix(ci.ring, 3, cols));
}

// Rank oracle for the quartic extension counts: projective dimensions of the
// degree-4 pieces of (q, s) and (q^2, s) for a quadric q and quartic s in P^3.
template <class F>
std::pair<long long, long long> quartic_extension_oracle(const PolyT<F>& quadric,
                                                         const PolyT<F>& quartic) {
    const RingCtx& ring = quadric.ring();
    if (ring.nvars != 4 || quadric.degree() != 2 || quartic.degree() != 4)
        fail(ErrorCode::bad_argument, "oracle needs a quadric and a quartic in P^3");
    const F f = field_from_desc<F>(ring.field);
    std::vector<PolyT<F>> cols1;
    for (const auto& mu : monomial_basis<F>(ring, 2)) cols1.push_back(quadric * mu);
    cols1.push_back(quartic);
    long long r1 = rank(coefficient_matrix(ring, 4, cols1));
    std::vector<PolyT<F>> cols2{quadric * quadric, quartic};
    long long r2 = rank(coefficient_matrix(ring, 4, cols2));
    return {r1 - 1, r2 - 1};
}

} // namespace dcov

#endif
