#include <doctest.h>

#include "oracles.hpp"
#include "purecomp/decompose.hpp"

using namespace purecomp;
using namespace purecomp::testing;

namespace {

Value iv(i64 n) {
    Value v;
    v.num = n;
    return v;
}

Value pv(std::vector<i64> c) {
    Value v;
    v.poly = poly_trim(Poly{std::move(c)});
    return v;
}

Mat mat_of(const RingPtr& R, std::vector<std::vector<Value>> rows) {
    Mat m(R, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    return m;
}

void check_reduction(const Mat& A) {
    auto red = diagonal_reduce(A);
    CHECK(mat_mul(mat_mul(red.U, A), red.V) == red.D);
    CHECK(mat_is_diagonal(red.D));
    CHECK(mat_inverse_pair(red.U, red.Uinv));
    CHECK(mat_inverse_pair(red.V, red.Vinv));
    const Ring& R = *A.ring;
    for (std::size_t i = 0; i + 1 < std::min(A.rows, A.cols); ++i)
        CHECK(R.divides(red.D.at(i, i), red.D.at(i + 1, i + 1)));
    // d_1 ... d_k equals the k-th determinantal divisor up to units.
    if (R.kind() == RingKind::Integers || R.kind() == RingKind::PolynomialQuotient) {
        Value prod = R.one();
        for (std::size_t t = 0; t < std::min(A.rows, A.cols); ++t) {
            prod = R.normalize_gen(R.mul(prod, red.D.at(t, t)));
            CHECK(prod == determinantal_divisor_oracle(A, t + 1));
        }
    }
}

}  // namespace

TEST_CASE("diagonal_reduce of the identity is trivial") {
    auto Z = Ring::integers();
    Mat I = Mat::identity(Z, 3);
    auto red = diagonal_reduce(I);
    CHECK(red.D == I);
    CHECK(red.U == I);
    CHECK(red.V == I);
}

TEST_CASE("diagonal_reduce of [[2,4],[6,8]] over Z gives diag(2,4)") {
    auto Z = Ring::integers();
    Mat A = mat_of(Z, {{iv(2), iv(4)}, {iv(6), iv(8)}});
    auto red = diagonal_reduce(A);
    CHECK(red.D.at(0, 0) == iv(2));
    CHECK(red.D.at(1, 1) == iv(4));
    check_reduction(A);
    // Oracle: d1 = gcd of entries, d1*d2 = |det| = 8.
    CHECK(determinantal_divisor_oracle(A, 1) == iv(2));
    CHECK(determinantal_divisor_oracle(A, 2) == iv(8));
}

TEST_CASE("diagonal_reduce of [[t,t^2],[0,t]] over F_2[t] gives diag(t,t)") {
    auto F = Ring::polynomial_ring(2);
    Mat A = mat_of(F, {{pv({0, 1}), pv({0, 0, 1})}, {pv({}), pv({0, 1})}});
    // Oracle first: d1 = gcd of entries = t; d1*d2 = det = t^2, so d2 = t.
    CHECK(determinantal_divisor_oracle(A, 1) == pv({0, 1}));
    CHECK(determinantal_divisor_oracle(A, 2) == pv({0, 0, 1}));
    auto red = diagonal_reduce(A);
    CHECK(red.D.at(0, 0) == pv({0, 1}));
    CHECK(red.D.at(1, 1) == pv({0, 1}));
    check_reduction(A);
}

TEST_CASE("random reductions over Z and F_2[t] verify against minors") {
    Rng rng(2024);
    auto Z = Ring::integers();
    for (int iter = 0; iter < 60; ++iter) {
        std::size_t m = 1 + rng.below(4), k = 1 + rng.below(4);
        Mat A(Z, m, k);
        for (auto& v : A.a) v = iv(rng.range(-50, 50));
        check_reduction(A);
    }
    auto F = Ring::polynomial_ring(2);
    for (int iter = 0; iter < 60; ++iter) {
        std::size_t m = 1 + rng.below(4), k = 1 + rng.below(4);
        Mat A(F, m, k);
        for (auto& v : A.a) {
            Poly f;
            int d = int(rng.below(5));
            for (int i = 0; i <= d; ++i) f.c.push_back(i64(rng.below(2)));
            v.poly = poly_trim(std::move(f));
        }
        check_reduction(A);
    }
}

TEST_CASE("reductions over Z/n and quotient/product rings") {
    Rng rng(77);
    for (RingPtr R : {Ring::integers_mod(12), Ring::integers_mod(16),
                      Ring::polynomial_quotient(2, Poly{{0, 0, 0, 1}}),
                      Ring::product({Ring::integers_mod(4), Ring::integers_mod(9)})}) {
        for (int iter = 0; iter < 40; ++iter) {
            std::size_t m = 1 + rng.below(3), k = 1 + rng.below(3);
            Mat A(R, m, k);
            for (auto& v : A.a) v = R->element_at(rng.below(R->size()));
            check_reduction(A);
        }
    }
}

TEST_CASE("build_module examples") {
    auto Z = Ring::integers();
    auto m1 = build_module(Z, mat_of(Z, {{iv(2), iv(0)}, {iv(0), iv(4)}}));
    REQUIRE(m1->rank() == 2);
    CHECK(m1->normal_form[0].gen == iv(2));
    CHECK(m1->normal_form[1].gen == iv(4));

    auto m2 = build_module(Z, mat_of(Z, {{iv(2), iv(4)}, {iv(6), iv(8)}}));
    REQUIRE(m2->rank() == 2);
    CHECK(m2->normal_form[0].gen == iv(2));
    CHECK(m2->normal_form[1].gen == iv(4));

    // Z/12: diag(4,6) presents Z/12 (+) Z/2; invariant factors in divisibility
    // order are (2),(0), and the canonical chain reads ((0),(2)).
    auto R12 = Ring::integers_mod(12);
    auto m3 = build_module(R12, mat_of(R12, {{iv(4), iv(0)}, {iv(0), iv(6)}}));
    REQUIRE(m3->rank() == 2);
    CHECK(m3->normal_form[0].gen == iv(2));
    CHECK(m3->normal_form[1].gen == iv(0));
    CHECK(m3->size() == 24);
    auto cf = canonical_form(*m3);
    REQUIRE(cf.ideals.size() == 2);
    CHECK(cf.ideals[0].gen == iv(0));
    CHECK(cf.ideals[1].gen == iv(2));
}

TEST_CASE("annihilator examples") {
    auto R12 = Ring::integers_mod(12);
    auto m = module_from_ideals(R12, {iv(2), iv(0)});  // Z/2 (+) Z/12
    CHECK(ideal_is_zero(annihilator(*m)));
    // Exhaustion oracle: the set {r : r*M = 0} computed elementwise.
    for (i64 r = 1; r < 12; ++r) {
        bool kills = (mod_euclid(r, 2) == 0 && mod_euclid(r, 12) == 0);
        CHECK(kills == ideal_contains(annihilator(*m), iv(r)));
    }
    auto cyclic = module_from_ideals(R12, {iv(4)});
    CHECK(annihilator(*cyclic).gen == iv(4));
    auto Z = Ring::integers();
    auto forever = build_module(Z, Mat(Z, 2, 0));
    CHECK(ideal_is_zero(annihilator(*forever)));
    CHECK(forever->free_rank() == 2);
    CHECK(forever->size() == 0);
}

TEST_CASE("zero module edge cases") {
    auto R = Ring::integers_mod(12);
    auto z = build_module(R, Mat(R, 0, 0));
    CHECK(z->rank() == 0);
    CHECK(mu(*z) == 0);
    CHECK(canonical_form(*z).ideals.size() == 0);
    CHECK(ideal_is_whole(annihilator(*z)));
    auto killed = module_from_ideals(R, {iv(1), iv(1)});  // R/(1) summands vanish
    CHECK(killed->rank() == 0);
}

TEST_CASE("quotient examples") {
    auto Z = Ring::integers();
    auto free2 = build_module(Z, Mat(Z, 2, 0));
    auto n = submodule_generated(free2, {{iv(2), iv(0)}});
    auto q = quotient_module(*free2, n);
    REQUIRE(q->rank() == 2);
    CHECK(q->normal_form[0].gen == iv(2));
    CHECK(q->normal_form[1].gen == iv(0));

    auto R12 = Ring::integers_mod(12);
    auto m = module_from_ideals(R12, {iv(2), iv(0)});  // Z/2 (+) Z/12, |M| = 24
    auto d = submodule_generated(m, {{iv(1), iv(1)}});
    auto q2 = quotient_module(*m, d);
    CHECK(q2->size() == 2);
    REQUIRE(q2->rank() == 1);
    CHECK(q2->normal_form[0].gen == iv(2));

    // M/{0} = M
    auto q3 = quotient_module(*m, submodule_generated(m, {}));
    CHECK(q3->normal_form == m->normal_form);
}

TEST_CASE("submodule membership solves a linear system") {
    auto Z = Ring::integers();
    auto free2 = build_module(Z, Mat(Z, 2, 0));
    auto n = submodule_generated(free2, {{iv(2), iv(0)}, {iv(0), iv(3)}});
    CHECK(submodule_contains(n, {iv(4), iv(3)}));
    CHECK_FALSE(submodule_contains(n, {iv(1), iv(0)}));
    CHECK(submodule_contains(n, {iv(0), iv(0)}));

    auto R12 = Ring::integers_mod(12);
    auto m = module_from_ideals(R12, {iv(2), iv(0)});
    auto s = submodule_generated(m, {{iv(1), iv(1)}});
    // Exhaustion oracle over the 12 multiples of (1,1).
    for (i64 r = 0; r < 12; ++r) {
        std::vector<Value> x{iv(mod_euclid(r, 2)), iv(r)};
        CHECK(submodule_contains(s, x));
    }
    CHECK_FALSE(submodule_contains(s, {iv(1), iv(0)}));
}

TEST_CASE("unimodular invariance of the normal form") {
    Rng rng(5150);
    for (RingPtr R : {Ring::integers(), Ring::integers_mod(12), Ring::polynomial_ring(3)}) {
        Mat A(R, 3, 3);
        for (auto& v : A.a)
            v = R->is_finite() ? R->element_at(rng.below(R->size())) : iv(rng.range(-9, 9));
        auto base = build_module(R, A);
        for (int iter = 0; iter < 25; ++iter) {
            Mat U = random_unimodular(R, 3, rng);
            Mat V = random_unimodular(R, 3, rng);
            auto other = build_module(R, mat_mul(mat_mul(U, A), V));
            REQUIRE(other->rank() == base->rank());
            for (std::size_t i = 0; i < base->rank(); ++i)
                CHECK(other->normal_form[i] == base->normal_form[i]);
        }
    }
}

TEST_CASE("round trip: rebuilding from the normal form is stable") {
    Rng rng(99);
    auto R = Ring::integers_mod(24);
    for (int iter = 0; iter < 30; ++iter) {
        Mat A(R, 1 + rng.below(3), 1 + rng.below(4));
        for (auto& v : A.a) v = R->element_at(rng.below(R->size()));
        auto m = build_module(R, A);
        std::vector<Value> diag;
        for (auto& I : m->normal_form) diag.push_back(I.gen);
        auto again = module_from_ideals(R, diag);
        CHECK(again->normal_form == m->normal_form);
    }
}

TEST_CASE("mu examples") {
    auto R12 = Ring::integers_mod(12);
    CHECK(mu(*build_module(R12, Mat(R12, 0, 0))) == 0);
    CHECK(mu(*module_from_ideals(R12, {iv(2), iv(0)})) == 2);
    // Z/4 (+) Z/3 (+) Z/2 presented diagonally collapses to two generators.
    CHECK(mu(*module_from_ideals(R12, {iv(4), iv(3), iv(2)})) == 2);
}

TEST_CASE("indecomposable_refine over Z/12") {
    auto R12 = Ring::integers_mod(12);
    auto m = module_from_ideals(R12, {iv(4), iv(6)});  // Z/12 (+) Z/2
    auto dec = indecomposable_refine(*m);
    REQUIRE(dec.parts.size() == 3);
    // Tie-break order: (radical gen, size desc) -> (4),(2),(3).
    CHECK(dec.parts[0].ideal.gen == iv(4));
    CHECK(dec.parts[1].ideal.gen == iv(2));
    CHECK(dec.parts[2].ideal.gen == iv(3));
    CHECK(dec.parts[0].size == 4);
    CHECK(dec.parts[1].size == 2);
    CHECK(dec.parts[2].size == 3);

    // Primary ideal stays put.
    auto prim = module_from_ideals(R12, {iv(4)});
    auto dp = indecomposable_refine(*prim);
    REQUIRE(dp.parts.size() == 1);
    CHECK(dp.parts[0].ideal.gen == iv(4));

    // (6): Z/6 = Z/2 (+) Z/3 with quotient sizes 2 and 3.
    auto six = module_from_ideals(R12, {iv(6)});
    auto ds = indecomposable_refine(*six);
    REQUIRE(ds.parts.size() == 2);
    CHECK(ds.parts[0].ideal.gen == iv(2));
    CHECK(ds.parts[1].ideal.gen == iv(3));

    // Cofactors generate factors with the right annihilators.
    for (const auto& part : dec.parts) {
        std::size_t coord = m->rank() - 1 - part.cf_index;
        // ann(cofactor * e_coord) = part ideal, checked by exhaustion.
        for (i64 r = 0; r < 12; ++r) {
            Value prod = R12->mul(iv(r), part.cofactor);
            bool kills = R12->is_zero(R12->reduce_mod(prod, m->normal_form[coord].gen));
            CHECK(kills == ideal_contains(part.ideal, iv(r)));
        }
    }
}

TEST_CASE("overflow in Z arithmetic raises instead of wrapping") {
    auto Z = Ring::integers();
    Value big = iv(i64(1) << 62);
    CHECK_THROWS_AS((void)Z->mul(big, big), OverflowError);
}
