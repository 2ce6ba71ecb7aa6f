#include <doctest.h>

#include "dcov/cover.hpp"
#include "dcov/gen.hpp"
#include "dcov/lift.hpp"

using namespace dcov;

using QP = PolyT<QField>;
using ZP = PolyT<ZpField>;

namespace {
const RingCtx q3 = projective_ring(2, rational_field());
QP qvar(int i) { return QP::variable(q3, i); }
QP conic() { return qvar(0) * qvar(0) + qvar(1) * qvar(1) + qvar(2) * qvar(2); }
} // namespace

TEST_CASE("lift of the worked quadric-surface example") {
    DoubleCover<QField> cover(2, 1, conic());
    CoverDivisor<QField> w(cover, qvar(0) * qvar(1), qvar(2), 2);
    auto img = divisor_image(w);
    auto fam = lift_branch(img.g, img.ci);

    CHECK(fam.k == 2);
    CHECK(fam.d == 1);
    CHECK(fam.scalar == 1);
    CHECK(fam.f_tilde == qvar(0) * qvar(1));
    CHECK(fam.g_tilde == -conic());
    CHECK(fam.param_basis.size() == 1); // h(0), the 2d - k = 0 parameter line

    // projectively the original branch conic
    CHECK(recovers_branch_class(fam, cover.g2d));
    CHECK(verify_lift(img.g, img.ci, family_member(fam, QP::zero(q3)), fam.scalar));
}

TEST_CASE("family member at a scalar parameter") {
    DoubleCover<QField> cover(2, 1, conic());
    CoverDivisor<QField> w(cover, qvar(0) * qvar(1), qvar(2), 2);
    auto img = divisor_image(w);
    auto fam = lift_branch(img.g, img.ci);

    QField f;
    auto m = family_member(fam, QP::constant(q3, f.one()));
    CHECK(m.f_hat == qvar(0) * qvar(1) - qvar(2) * qvar(2));
    QP expected_ghat = QP::from_terms(q3, {{{2, 0, 0}, f.from_int(-1)},
                                           {{1, 1, 0}, f.from_int(2)},
                                           {{0, 2, 0}, f.from_int(-1)},
                                           {{0, 0, 2}, f.from_int(-2)}});
    CHECK(m.g_hat == expected_ghat);
    CHECK(verify_lift(img.g, img.ci, m, fam.scalar));
    CHECK(contact_contains_ci(img.ci, m.f_hat));

    // a = 0 returns the completed-square data itself
    auto m0 = family_member(fam, QP::zero(q3));
    CHECK(m0.f_hat == fam.f_tilde);
    CHECK(m0.g_hat == fam.g_tilde);

    CHECK_THROWS_AS(family_member(fam, qvar(0)), Error); // wrong parameter degree
}

TEST_CASE("square images degenerate to zero branch") {
    QP fk = qvar(0) * qvar(1);
    CompleteIntersection<QField> ci(qvar(2), fk);
    try {
        lift_branch(fk * fk, ci);
        FAIL("expected zero-branch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::zero_branch);
    }
}

TEST_CASE("k = d lift with the empty double locus") {
    SplitMix64 rng(88);
    RingCtx rp = projective_ring(2, prime_field(101));
    ZpField f(101);
    for (int trial = 0; trial < 5; ++trial) {
        ZP g4 = random_poly<ZpField>(rp, 4, rng, 0);
        ZP g2 = random_poly<ZpField>(rp, 2, rng, 0);
        ZP f2 = random_poly<ZpField>(rp, 2, rng, 0);
        ZP one = ZP::constant(rp, 1);
        ZP g = g4 + f.from_int(2) * (f2 * g2) + f2 * f2;
        CompleteIntersection<ZpField> ci(one, f2);
        auto fam = lift_branch(g, ci);
        CHECK(fam.d == 2);
        CHECK(fam.k == 2);
        CHECK(fam.param_basis.size() == 6); // h(2d - k) = h(2)
        CHECK(verify_lift(g, ci, family_member(fam, ZP::zero(rp)), fam.scalar));
        ZP a = random_poly<ZpField>(rp, 2, rng, 0);
        CHECK(verify_lift(g, ci, family_member(fam, a), fam.scalar));
    }
}

TEST_CASE("verify_lift rejects a perturbed branch") {
    DoubleCover<QField> cover(2, 1, conic());
    CoverDivisor<QField> w(cover, qvar(0) * qvar(1), qvar(2), 2);
    auto img = divisor_image(w);
    auto fam = lift_branch(img.g, img.ci);
    auto m = family_member(fam, QP::zero(q3));
    m.g_hat = m.g_hat + qvar(0) * qvar(0);
    CHECK(!verify_lift(img.g, img.ci, m, fam.scalar));
}

TEST_CASE("random members over F_101 satisfy the identity") {
    GenConfig cfg;
    cfg.seed = 4;
    SplitMix64 rng(cfg.seed);
    RingCtx rp = projective_ring(2, prime_field(101));
    for (int trial = 0; trial < 5; ++trial) {
        auto bundle = random_divisor_bundle<ZpField>(2, 3, 4, cfg, rng);
        DoubleCover<ZpField> cover(2, 3, bundle.at("g2d"));
        CoverDivisor<ZpField> w(cover, bundle.at("fk"), bundle.at("fkd"), 4);
        auto img = divisor_image(w);
        auto fam = lift_branch(img.g, img.ci);
        for (int s = 0; s < 50; ++s) {
            ZP a = random_poly<ZpField>(rp, 2, rng, 0);
            auto m = family_member(fam, a);
            CHECK(verify_lift(img.g, img.ci, m, fam.scalar));
            CHECK(contact_contains_ci(img.ci, m.f_hat));
        }
        CHECK(recovers_branch_class(fam, cover.g2d));
        CHECK(family_injectivity_check(fam, 20, 999));
    }
}

TEST_CASE("injectivity is vacuous when the parameter space is empty") {
    GenConfig cfg;
    cfg.seed = 10;
    SplitMix64 rng(cfg.seed);
    auto bundle = random_divisor_bundle<ZpField>(2, 1, 3, cfg, rng); // 2d - k < 0
    DoubleCover<ZpField> cover(2, 1, bundle.at("g2d"));
    CoverDivisor<ZpField> w(cover, bundle.at("fk"), bundle.at("fkd"), 3);
    auto img = divisor_image(w);
    auto fam = lift_branch(img.g, img.ci);
    CHECK(fam.param_basis.empty());
    CHECK(family_injectivity_check(fam, 50, 1));
    CHECK(recovers_branch_class(fam, cover.g2d));
}

TEST_CASE("smoothness sampling verdicts") {
    // smooth conic over F_5, exhaustive
    auto rep = smoothness_sample(conic(), 5, 0, 0);
    CHECK(rep.verdict == SmoothnessVerdict::no_singular_point_found);
    CHECK(rep.exhaustive);
    CHECK(rep.points_on_variety == 6); // a conic over F_5 has q + 1 points

    // two lines meet in a node at (0 : 0 : 1)
    auto bad = smoothness_sample(qvar(0) * qvar(1), 5, 0, 0);
    CHECK(bad.verdict == SmoothnessVerdict::singular_point_found);
    REQUIRE(bad.witness.has_value());
    CHECK(*bad.witness == ZpPoint{0, 0, 1});

    // a pointless conic in P^1 over F_3 is inconclusive
    RingCtx p1 = projective_ring(1, rational_field());
    QP c = QP::variable(p1, 0) * QP::variable(p1, 0) + QP::variable(p1, 1) * QP::variable(p1, 1);
    auto none = smoothness_sample(c, 3, 0, 0);
    CHECK(none.verdict == SmoothnessVerdict::no_rational_point_found);

    CHECK_THROWS_AS(smoothness_sample(QP::zero(q3), 5, 0, 0), Error);
}

TEST_CASE("reduction mod p rejects bad primes") {
    QField f;
    QP p = QP::monomial(q3, {2, 0, 0}, mpq_class(1, 5)) + qvar(1) * qvar(1);
    CHECK_THROWS_AS(reduce_mod_p(p, 5), Error);
    auto ok = reduce_mod_p(p, 7);
    CHECK(ok.ring().field.p == 7);

    // 5 | 5 x0^2 : vanishes identically mod 5
    QP q = f.from_int(5) * (qvar(0) * qvar(0));
    CHECK(reduce_mod_p(q, 5).is_zero());
    CHECK_THROWS_AS(smoothness_sample(q, 5, 0, 0), Error);
}

TEST_CASE("pair sampling by hyperplane slices finds points beyond the cap") {
    GenConfig cfg;
    cfg.seed = 3;
    SplitMix64 rng(cfg.seed);
    RingCtx p3 = projective_ring(3, prime_field(101));
    // two hyperplanes: a line in P^3, smooth everywhere
    ZP la = ZP::variable(p3, 0);
    ZP lb = ZP::variable(p3, 1);
    auto rep = smoothness_sample_pair(la, lb, 101, 6, 42, 50'000); // forces the slice path
    CHECK(!rep.exhaustive);
    CHECK(rep.verdict == SmoothnessVerdict::no_singular_point_found);
    CHECK(rep.points_on_variety > 0);

    // exhaustive path on a singular pair: conic and tangent line
    RingCtx p2 = projective_ring(2, prime_field(5));
    ZP x0 = ZP::variable(p2, 0), x1 = ZP::variable(p2, 1), x2 = ZP::variable(p2, 2);
    auto tangent = smoothness_sample_pair(x0 * x2 - x1 * x1, x0, 5, 0, 0);
    // V(x0, x1^2): the double point (0 : 0 : 1) has a rank-1 Jacobian
    CHECK(tangent.verdict == SmoothnessVerdict::singular_point_found);
}
