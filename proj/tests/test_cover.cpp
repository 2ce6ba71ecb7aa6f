#include <doctest.h>

#include "dcov/cover.hpp"
#include "dcov/gen.hpp"
#include "dcov/hilbert.hpp"

using namespace dcov;

using QP = PolyT<QField>;
using ZP = PolyT<ZpField>;

namespace {
const RingCtx q3 = projective_ring(2, rational_field());
QP qvar(int i) { return QP::variable(q3, i); }
QP conic() { return qvar(0) * qvar(0) + qvar(1) * qvar(1) + qvar(2) * qvar(2); }
} // namespace

TEST_CASE("isotypic basis sizes") {
    DoubleCover<QField> s(2, 3, conic() * conic() * conic()); // a smooth-ish sextic stand-in
    auto [plus3, minus3] = isotypic_basis(s, 3);
    CHECK(plus3.size() == 10);
    CHECK(minus3.size() == 1);
    // dim |3L| = 10; genus 10 = k^2 + 1 means h^0 = 11
    CHECK(plus3.size() + minus3.size() == 11);

    auto [plus2, minus2] = isotypic_basis(s, 2);
    CHECK(minus2.empty()); // k < d

    auto [plus6, minus6] = isotypic_basis(s, 6);
    CHECK(plus6.size() == 28);
    CHECK(minus6.size() == 10);
    CHECK(plus6.size() + minus6.size() - 1 == 37); // dim |6L|

    for (int n = 2; n <= 3; ++n) {
        RingCtx ring = projective_ring(n, rational_field());
        for (int d = 1; d <= 3; ++d) {
            GenConfig cfg;
            cfg.seed = 5;
            cfg.field = rational_field();
            DoubleCover<QField> cv(n, d, random_poly<QField>(ring, 2L * d, cfg));
            for (long k = 0; k <= 12; ++k) {
                auto [p, m] = isotypic_basis(cv, k);
                CHECK(long(p.size()) == h(n, k));
                CHECK(long(m.size()) == h(n, k - d));
            }
        }
    }
}

TEST_CASE("divisor image, worked plane example") {
    DoubleCover<QField> cover(2, 1, conic());
    QP fk = qvar(0) * qvar(1);
    QP fkd = qvar(2);
    CoverDivisor<QField> w(cover, fk, fkd, 2);
    auto img = divisor_image(w);

    // frozen hand expansion of (x0 x1)^2 - (x0^2+x1^2+x2^2) x2^2
    QField f;
    QP expected = QP::from_terms(
        q3, {{{2, 2, 0}, f.from_int(1)},
             {{2, 0, 2}, f.from_int(-1)},
             {{0, 2, 2}, f.from_int(-1)},
             {{0, 0, 4}, f.from_int(-1)}});
    CHECK(img.g == expected);
    CHECK(img.g.degree() == 4);
    CHECK(img.ci.a == 1);
    CHECK(img.ci.b == 2);
    CHECK(img.ci.fa == fkd);
    CHECK(img.ci.fb == fk);
}

TEST_CASE("k = d pushes forward to f_d^2 - g_2d") {
    DoubleCover<QField> cover(2, 1, conic());
    QP fd = qvar(0) + qvar(1) - qvar(2);
    QP one = QP::constant(q3, QField{}.one());
    CoverDivisor<QField> w(cover, fd, one, 1);
    auto img = divisor_image(w);
    CHECK(img.g == fd * fd - conic());
    CHECK(img.ci.a == 0);
}

TEST_CASE("component divisors are rejected") {
    DoubleCover<QField> cover(2, 1, conic());
    QP zero = QP::zero(q3);
    CoverDivisor<QField> pullback(cover, qvar(0) * qvar(0), zero, 2);
    CHECK_THROWS_AS(divisor_image(pullback), Error);
    CoverDivisor<QField> ram(cover, zero, qvar(0), 2);
    CHECK_THROWS_AS(divisor_image(ram), Error);
}

TEST_CASE("involution conjugate") {
    DoubleCover<QField> cover(2, 1, conic());
    CoverDivisor<QField> w(cover, qvar(0) * qvar(1), qvar(2), 2);
    auto c = involution_conjugate(w);
    CHECK(c.fkd == -w.fkd);
    auto cc = involution_conjugate(c);
    CHECK(cc.fk == w.fk);
    CHECK(cc.fkd == w.fkd);
    // the image is involution-invariant
    CHECK(divisor_image(w).g == divisor_image(c).g);
}

TEST_CASE("pull-back of the image splits in the weighted ring") {
    DoubleCover<QField> cover(2, 1, conic());
    CoverDivisor<QField> w(cover, qvar(0) * qvar(1), qvar(2), 2);
    CHECK(pullback_splits(w));

    GenConfig cfg;
    cfg.seed = 17;
    SplitMix64 rng(cfg.seed);
    RingCtx rp = projective_ring(2, prime_field(101));
    for (int trial = 0; trial < 8; ++trial) {
        int d = 1 + int(rng.below(3));
        int k = d + int(rng.below(3));
        ZP g2d = random_poly<ZpField>(rp, 2L * d, rng, 0);
        ZP fk = random_poly<ZpField>(rp, k, rng, 0);
        ZP fkd = k == d ? ZP::constant(rp, 1) : random_poly<ZpField>(rp, long(k) - d, rng, 0);
        DoubleCover<ZpField> cv(2, d, g2d);
        CoverDivisor<ZpField> wd(cv, fk, fkd, k);
        try {
            CHECK(pullback_splits(wd));
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::component_divisor);
        }
    }
}

TEST_CASE("image lies in the square of the double-locus ideal") {
    DoubleCover<QField> cover(2, 2, conic() * conic());
    QP fk = qvar(0) * qvar(0) * qvar(0) + qvar(1) * qvar(2) * qvar(2);
    QP fkd = qvar(0) + qvar(1);
    CoverDivisor<QField> w(cover, fk, fkd, 3);
    auto img = divisor_image(w);
    auto dec = decompose_in_i2(img.g, img.ci);
    CHECK(dec.C == 1);
    CHECK(reconstruct_decomposition(dec, img.ci) == img.g);
}
