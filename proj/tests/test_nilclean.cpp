#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "nilclean/nilclean.hpp"

using namespace nilclean;

namespace {

RingPtr zn(std::uint64_t n) { return construct_ring(RingSpec::zn(n)); }

RingPtr m2(std::uint64_t n) {
    return construct_ring(RingSpec::matrix(2, RingSpec::zn(n)));
}

}  // namespace

// =============================================================================
// decomposition search
// =============================================================================

TEST_CASE("decompositions of 7 in Z_12, plus sign only") {
    auto r = zn(12);
    auto d = decompositions(r->elem(7), DecompSigns::PlusOnly);
    REQUIRE(d.size() == 1);
    CHECK(d[0].e.index() == 1);
    CHECK(d[0].q.index() == 6);
    CHECK(d[0].sign == Sign::Plus);
}

TEST_CASE("zero decomposes only as 0 + 0") {
    for (auto& r : {zn(12), m2(2), zn(1)}) {
        auto d = decompositions(r->elem(r->zero()), DecompSigns::PlusOnly);
        REQUIRE(d.size() == 1);  // q = -e nilpotent forces e = 0
        CHECK(d[0].e.index() == r->zero());
        CHECK(d[0].q.index() == r->zero());
    }
}

TEST_CASE("2 in Z_3 decomposes only as 0 - 1") {
    auto r = zn(3);
    auto d = decompositions(r->elem(2), DecompSigns::Both);
    REQUIRE(d.size() == 1);
    CHECK(d[0].e.index() == 1);
    CHECK(d[0].q.index() == 0);
    CHECK(d[0].sign == Sign::Minus);
}

TEST_CASE("decompositions are enumerated plus first, then ascending e") {
    auto r = zn(12);
    for (std::uint32_t a = 0; a < r->order(); ++a) {
        auto d = decompositions(r->elem(a), DecompSigns::Both);
        for (std::size_t i = 1; i < d.size(); ++i) {
            const bool prev_plus = d[i - 1].sign == Sign::Plus;
            const bool cur_plus = d[i].sign == Sign::Plus;
            CHECK((prev_plus || !cur_plus));  // never minus before plus
            if (prev_plus == cur_plus) CHECK(d[i - 1].e.index() < d[i].e.index());
        }
        for (const auto& w : d) {
            CHECK(is_idempotent(w.e));
            CHECK(nilpotency_index(w.q).has_value());
            const Elem signed_e = w.sign == Sign::Plus ? w.e : neg(w.e);
            CHECK(add(w.q, signed_e) == w.a);
        }
    }
}

// =============================================================================
// ring-level oracles
// =============================================================================

TEST_CASE("nil clean oracle") {
    CHECK(is_nil_clean_ring(zn(4)).holds);
    CHECK(is_nil_clean_ring(m2(2)).holds);
    auto z3 = is_nil_clean_ring(zn(3));
    CHECK(!z3.holds);
    CHECK(z3.witness == 2);
}

TEST_CASE("weakly nil clean oracle") {
    CHECK(is_weakly_nil_clean_ring(zn(6)).holds);
    auto z5 = is_weakly_nil_clean_ring(zn(5));
    CHECK(!z5.holds);
    CHECK(z5.witness == 2);  // {e+q} u {q-e} only reaches {0,1,4}
    auto z3z3 = is_weakly_nil_clean_ring(
        construct_ring(RingSpec::product(RingSpec::zn(3), RingSpec::zn(3))));
    CHECK(!z3z3.holds);
    CHECK(z3z3.witness == 5);  // (1,2): only nilpotent is (0,0)
}

TEST_CASE("minus one is always weakly nil clean") {
    for (auto& r : {zn(5), zn(7), zn(12), m2(3)}) {
        auto d = decompositions(of_int(*r, -1), DecompSigns::Both);
        CHECK(!d.empty());  // -1 = 0 - 1
    }
}

// =============================================================================
// structural classification
// =============================================================================

TEST_CASE("classification frozen examples") {
    auto c12 = classify_structural(zn(12));
    CHECK(c12.verdict == Classification::Verdict::WeaklyNilCleanOnly);
    CHECK(c12.e_nil == 9);  // 9*Z_12 is a copy of Z_4
    CHECK(c12.e_z3 == 4);   // 4*Z_12 has order 3

    CHECK(classify_structural(zn(8)).verdict == Classification::Verdict::NilClean);

    auto c9 = classify_structural(zn(9));
    CHECK(c9.verdict == Classification::Verdict::WeaklyNilCleanOnly);
    CHECK(c9.e_nil == 0);  // zero-ring factor
    CHECK(c9.e_z3 == 1);

    auto c5 = classify_structural(zn(5));
    CHECK(c5.verdict == Classification::Verdict::NotWeaklyNilClean);
    CHECK(c5.witness == 2);

    auto c6 = classify_structural(zn(6));
    CHECK(c6.verdict == Classification::Verdict::WeaklyNilCleanOnly);
    CHECK(c6.e_nil == 3);
    CHECK(c6.e_z3 == 4);
}

TEST_CASE("factorization idempotents are a complementary central pair") {
    for (auto& r : {zn(6), zn(9), zn(12), zn(18), zn(36)}) {
        auto c = classify_structural(r);
        if (c.verdict != Classification::Verdict::WeaklyNilCleanOnly) continue;
        const std::uint32_t e1 = *c.e_nil, e2 = *c.e_z3;
        CHECK(is_idempotent(r->elem(e1)));
        CHECK(is_idempotent(r->elem(e2)));
        CHECK(is_central(r->elem(e1)));
        CHECK(r->add(e1, e2) == r->one());
        CHECK(r->mul(e1, e2) == r->zero());
    }
}

TEST_CASE("oracle and structural classification agree") {
    std::vector<RingPtr> rings = {zn(5), zn(6), zn(12), zn(16), zn(27), m2(2), m2(3),
                                  construct_ring(RingSpec::product(RingSpec::zn(3),
                                                                   RingSpec::zn(3)))};
    for (auto& r : rings) {
        auto report = verify_theorem(r);
        CHECK(report.agree);
    }
    auto m2z3 = verify_theorem(m2(3));
    CHECK(!m2z3.oracle.holds);
    CHECK(m2z3.structural.verdict == Classification::Verdict::NotWeaklyNilClean);
}

TEST_CASE("a product is nil clean exactly when both factors are") {
    struct Case {
        RingSpec left, right;
    };
    std::vector<Case> cases = {{RingSpec::zn(4), RingSpec::zn(3)},
                               {RingSpec::zn(4), RingSpec::zn(8)},
                               {RingSpec::matrix(2, RingSpec::zn(2)), RingSpec::zn(3)},
                               {RingSpec::matrix(2, RingSpec::zn(2)), RingSpec::zn(4)}};
    for (const auto& c : cases) {
        const bool left_nc = is_nil_clean_ring(construct_ring(c.left)).holds;
        const bool right_nc = is_nil_clean_ring(construct_ring(c.right)).holds;
        const bool product_nc =
            is_nil_clean_ring(construct_ring(RingSpec::product(c.left, c.right))).holds;
        CHECK(product_nc == (left_nc && right_nc));
    }
}

// =============================================================================
// involution decompositions
// =============================================================================

TEST_CASE("verify_prop1 on Z_8") {
    auto report = verify_prop1(zn(8));
    REQUIRE(report.involutions.size() == 4);  // {1,3,5,7}
    for (const auto& stat : report.involutions) CHECK(stat.decomposition_count == 1);
    CHECK(report.decomposition_count == 4);
    CHECK(report.violations.empty());
}

TEST_CASE("verify_prop1 on Z_12") {
    auto report = verify_prop1(zn(12));
    REQUIRE(report.involutions.size() == 4);
    // 1 and 7 decompose (with e = 1); 5 and 11 have no decomposition
    for (const auto& stat : report.involutions) {
        const bool decomposes = (stat.a == 1 || stat.a == 7);
        CHECK(stat.decomposition_count == (decomposes ? 1u : 0u));
    }
    CHECK(report.violations.empty());
}

TEST_CASE("verify_prop1 on M_2(Z_2)") {
    auto m = m2(2);
    auto report = verify_prop1(m);
    CHECK(report.violations.empty());
    // the involution I + E12 decomposes only as e = I, q = E12
    const std::uint32_t a = 13, identity = 9, e12 = 4;
    CHECK(m->mul(a, a) == m->one());
    auto d = decompositions(m->elem(a), DecompSigns::PlusOnly);
    REQUIRE(d.size() == 1);
    CHECK(d[0].e.index() == identity);
    CHECK(d[0].q.index() == e12);
}

// =============================================================================
// proof traces
// =============================================================================

TEST_CASE("proof trace on a non-involution triple in Z_12") {
    auto r = zn(12);
    auto t = proof_trace(r->elem(10), r->elem(4), r->elem(6));
    CHECK(t.f.index() == 9);
    CHECK(t.r.index() == 6);  // 6 * 7 = 42 = 6 (mod 12)
    CHECK(!t.a_is_involution);
    CHECK(t.fq_eq_fa);   // fq = fa = 6
    CHECK(t.fr_formula);  // fr = 6 = faf + f a^2 with faf = 6, f a^2 = 0
    CHECK(t.rf_formula);
    CHECK(t.general_identities());
}

TEST_CASE("proof trace on the involution 3 = 1 + 2 in Z_8") {
    auto r = zn(8);
    auto t = proof_trace(r->elem(3), r->elem(1), r->elem(2));
    CHECK(t.a_is_involution);
    CHECK(t.f.index() == 0);
    CHECK(t.r.index() == 6);  // 2 * 3
    CHECK(t.general_identities());
    CHECK(t.involution_identities());
    CHECK(t.f_is_zero);
    CHECK(t.f_nilpotency_index == 1);
}

TEST_CASE("proof trace on the trivial triple 1 = 1 + 0") {
    auto r = zn(12);
    auto t = proof_trace(r->elem(1), r->elem(1), r->elem(0));
    CHECK(t.f.index() == 0);
    CHECK(t.r.index() == 0);
    CHECK(t.general_identities());
    CHECK(t.involution_identities());
}

TEST_CASE("proof trace preconditions") {
    auto r = zn(12);
    // e not idempotent
    CHECK_THROWS_AS(proof_trace(r->elem(8), r->elem(2), r->elem(6)),
                    PreconditionViolated);
    // q not nilpotent
    CHECK_THROWS_AS(proof_trace(r->elem(5), r->elem(4), r->elem(1)),
                    PreconditionViolated);
    // a != e + q
    CHECK_THROWS_AS(proof_trace(r->elem(11), r->elem(4), r->elem(6)),
                    PreconditionViolated);
}

TEST_CASE("proof-chain identities hold exhaustively on small rings") {
    for (auto& r : {zn(8), zn(12), zn(16), m2(2)}) {
        auto idem = special_subset(*r, SubsetKind::Idempotents);
        auto nil = special_subset(*r, SubsetKind::Nilpotents);
        for (Elem e : idem) {
            for (Elem q : nil) {
                auto t = proof_trace(add(e, q), e, q);
                CHECK(t.general_identities());
                if (t.a_is_involution) {
                    CHECK(t.involution_identities());
                    CHECK(t.f_is_zero);
                }
            }
        }
    }
}

// =============================================================================
// lemma 2
// =============================================================================

TEST_CASE("verify_lemma2 passes on Z_3, Z_9, Z_27") {
    for (std::uint64_t n : {3, 9, 27}) {
        auto r = zn(n);
        REQUIRE(!lemma2_precondition_failure(r).has_value());
        auto report = verify_lemma2(r);
        CHECK(report.trivial_idempotents);
        CHECK(report.nil_shift_cover);
        CHECK(report.nil_is_ideal);
        CHECK(report.quotient_is_z3);
        CHECK(report.quotient_order == 3);
    }
}

TEST_CASE("verify_lemma2 preconditions") {
    CHECK(lemma2_precondition_failure(zn(4)) == "2 is not a unit");
    CHECK(lemma2_precondition_failure(zn(5)) == "ring is not weakly nil clean");
    CHECK(lemma2_precondition_failure(zn(1)) == "the zero ring is excluded");
    CHECK_THROWS_AS(verify_lemma2(zn(4)), PreconditionViolated);
}

// =============================================================================
// the generalized identity
// =============================================================================

TEST_CASE("verify_remark reproduces the quadratic reduction in Z_8") {
    auto r = zn(8);
    // a = 3 satisfies a^2 - 1 = 0; a = 1 + 2 with 2^3 = 0
    auto report = verify_remark(r->elem(3), r->elem(1), r->elem(2), 1, 0, -1);
    CHECK(report.instance.n == 3);
    CHECK(report.instance.r == 6);
    CHECK(report.instance.conclusion == 0);  // 1*e + 1*(-1) = e - 1 = 0
    CHECK(report.all_passed());
}

TEST_CASE("verify_remark on a genuine quadratic in Z_9") {
    auto r = zn(9);
    // a = 4: a^2 + a + 7 = 16 + 4 + 7 = 27 = 0 (mod 9); a = 1 + 3, 3^2 = 0
    auto report = verify_remark(r->elem(4), r->elem(1), r->elem(3), 1, 1, 7);
    CHECK(report.instance.n == 2);
    CHECK(report.instance.r == 6);  // 3 * (3 + 2) = 15 = 6
    CHECK(report.instance.conclusion == 0);  // 4*1 + 2*7 = 18 = 0
    CHECK(report.all_passed());
}

TEST_CASE("verify_remark trivial instance in the zero ring") {
    auto r = zn(1);
    auto report = verify_remark(r->elem(0), r->elem(0), r->elem(0), 1, 0, 0);
    CHECK(report.instance.n == 1);
    CHECK(report.instance.conclusion == 0);
    CHECK(report.all_passed());
}

TEST_CASE("verify_remark rejects unsatisfied quadratics") {
    auto r = zn(8);
    CHECK_THROWS_AS(verify_remark(r->elem(3), r->elem(1), r->elem(2), 1, 0, 0),
                    PreconditionViolated);
}

TEST_CASE("remark scans are clean") {
    auto z8 = remark_scan(zn(8), 2);
    CHECK(z8.instances > 0);
    CHECK(z8.reduction_instances > 0);
    CHECK(z8.clean());

    auto z12 = remark_scan(zn(12), 2);
    CHECK(z12.clean());

    auto trivial = remark_scan(zn(1), 1);
    CHECK(trivial.clean());
    CHECK(trivial.instances == 27);  // every scalar triple satisfies 0 = 0
}
