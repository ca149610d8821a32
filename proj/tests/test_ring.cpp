#include <doctest.h>

#include "oracles.hpp"
#include "purecomp/ring.hpp"

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

// F_2[x,y]/(x^2, xy, y^2): elements c0 + c1*x + c2*y, index c0 + 2*c1 + 4*c2.
RingPtr witness_table_ring() {
    const int n = 8;
    auto dec = [](int i) { return std::array<int, 3>{i & 1, (i >> 1) & 1, (i >> 2) & 1}; };
    auto enc = [](int c0, int c1, int c2) { return c0 + 2 * c1 + 4 * c2; };
    std::vector<std::vector<int>> add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto a = dec(i), b = dec(j);
            add[i][j] = enc((a[0] + b[0]) & 1, (a[1] + b[1]) & 1, (a[2] + b[2]) & 1);
            mul[i][j] = enc(a[0] & b[0], (a[0] & b[1]) ^ (a[1] & b[0]), (a[0] & b[2]) ^ (a[2] & b[0]));
        }
    return Ring::local_table(add, mul);
}

}  // namespace

TEST_CASE("gcd_bezout over Z matches the extended Euclid oracle") {
    auto Z = Ring::integers();
    i64 x, y;
    i64 g = euclid_oracle(4, 6, x, y);
    CHECK(g == 2);
    auto r = Z->gcd_bezout(iv(4), iv(6));
    CHECK(r.g.num == 2);
    CHECK(r.u.num * 4 + r.v.num * 6 == 2);

    Rng rng(42);
    for (int i = 0; i < 200; ++i) {
        i64 a = rng.range(-80, 80), b = rng.range(-80, 80);
        i64 go = euclid_oracle(a, b, x, y);
        auto rr = Z->gcd_bezout(iv(a), iv(b));
        CHECK(rr.g.num == go);
        CHECK(rr.u.num * a + rr.v.num * b == rr.g.num);
    }
}

TEST_CASE("gcd_bezout of (0,0) is the zero ideal") {
    for (RingPtr R : {Ring::integers(), Ring::integers_mod(12), Ring::polynomial_ring(2)}) {
        auto r = R->gcd_bezout(R->zero(), R->zero());
        CHECK(R->is_zero(r.g));
        CHECK(R->is_zero(r.u));
        CHECK(R->is_zero(r.v));
    }
}

TEST_CASE("gcd_bezout over Z/12 matches exhaustive ideal-sum enumeration") {
    auto R = Ring::integers_mod(12);
    // Oracle: the ideal (8) + (6) as an element set.
    auto span = ideal_span_oracle(R, {iv(8), iv(6)});
    std::set<u64> two = ideal_span_oracle(R, {iv(2)});
    CHECK(span == two);
    auto r = R->gcd_bezout(iv(8), iv(6));
    CHECK(r.g.num == 2);
    CHECK(mod_euclid(r.u.num * 8 + r.v.num * 6, 12) == 2);

    // The identity and ideal equality hold for every pair.
    for (i64 a = 0; a < 12; ++a)
        for (i64 b = 0; b < 12; ++b) {
            auto g = R->gcd_bezout(iv(a), iv(b));
            CHECK(mod_euclid(g.u.num * a + g.v.num * b, 12) == g.g.num);
            CHECK(ideal_span_oracle(R, {iv(a), iv(b)}) == ideal_span_oracle(R, {g.g}));
            CHECK(R->divides(g.g, iv(a)));
            CHECK(R->divides(g.g, iv(b)));
        }
}

TEST_CASE("normalization is idempotent and collapses associates") {
    auto R = Ring::integers_mod(12);
    for (i64 a = 0; a < 12; ++a) {
        Value n1 = R->normalize_gen(iv(a));
        CHECK(R->normalize_gen(n1) == n1);
        for (i64 u = 0; u < 12; ++u) {
            if (gcd64(u, 12) != 1) continue;
            CHECK(R->normalize_gen(R->mul(iv(u), iv(a))) == n1);
        }
    }
    auto F = Ring::polynomial_ring(3);
    CHECK(F->normalize_gen(pv({2, 1, 2})) == pv({1, 2, 1}));
    CHECK(F->is_one(F->normalize_gen(pv({2}))));
}

TEST_CASE("ideal_compare over Z/12") {
    auto R = Ring::integers_mod(12);
    auto I4 = make_ideal(R, iv(4));
    auto I2 = make_ideal(R, iv(2));
    auto I3 = make_ideal(R, iv(3));
    CHECK(ideal_compare(I4, I2) == Comparability::FirstInsideSecond);
    CHECK(ideal_compare(I2, I4) == Comparability::SecondInsideFirst);
    CHECK(ideal_compare(I3, I4) == Comparability::Comaximal);
    CHECK(ideal_compare(I4, I4) == Comparability::Equal);

    // Oracle for the containment: element enumeration.
    auto set4 = ideal_span_oracle(R, {iv(4)});
    auto set2 = ideal_span_oracle(R, {iv(2)});
    CHECK(std::includes(set2.begin(), set2.end(), set4.begin(), set4.end()));
}

TEST_CASE("ideal_compare finds incomparable pairs over Z/36") {
    auto R = Ring::integers_mod(36);
    CHECK(ideal_compare(make_ideal(R, iv(4)), make_ideal(R, iv(6))) == Comparability::Incomparable);
}

TEST_CASE("ideal intersection via the lcm formula agrees with enumeration") {
    auto R = Ring::integers_mod(12);
    for (i64 a = 0; a < 12; ++a)
        for (i64 b = 0; b < 12; ++b) {
            auto I = ideal_intersect(make_ideal(R, iv(a)), make_ideal(R, iv(b)));
            auto sa = ideal_span_oracle(R, {iv(a)});
            auto sb = ideal_span_oracle(R, {iv(b)});
            std::set<u64> expect;
            std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                                  std::inserter(expect, expect.begin()));
            CHECK(ideal_span_oracle(R, {I.gen}) == expect);
        }
}

TEST_CASE("radical and minimal primes over Z/12") {
    auto R = Ring::integers_mod(12);
    CHECK(radical(make_ideal(R, iv(4))).gen == iv(2));
    auto mp4 = minimal_primes_over(make_ideal(R, iv(4)));
    REQUIRE(mp4.size() == 1);
    CHECK(mp4[0].gen == iv(2));
    auto mp0 = minimal_primes_over(make_ideal(R, iv(0)));
    REQUIRE(mp0.size() == 2);
    CHECK(mp0[0].gen == iv(2));
    CHECK(mp0[1].gen == iv(3));
    CHECK(ideal_is_whole(radical(make_ideal(R, iv(1)))));
    CHECK(minimal_primes_over(make_ideal(R, iv(1))).size() == 0);
}

TEST_CASE("radical properties") {
    auto R = Ring::integers_mod(36);
    for (i64 a = 0; a < 36; ++a) {
        auto I = make_ideal(R, iv(a));
        auto rad = radical(I);
        CHECK(radical(rad) == rad);
        CHECK(ideal_subset(I, rad));
        auto primes = minimal_primes_over(I);
        for (std::size_t i = 0; i < primes.size(); ++i) {
            CHECK(ideal_subset(I, primes[i]));
            for (std::size_t j = 0; j < i; ++j) {
                auto c = ideal_compare(primes[i], primes[j]);
                CHECK(c != Comparability::Equal);
                CHECK(c != Comparability::FirstInsideSecond);
                CHECK(c != Comparability::SecondInsideFirst);
            }
        }
    }
}

TEST_CASE("decompose_finite_ring: Z/12 splits into sizes 4 and 3") {
    auto R = Ring::integers_mod(12);
    auto fs = decompose_finite_ring(R);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].size == 4);
    CHECK(fs[0].idempotent == iv(9));
    CHECK(fs[1].size == 3);
    CHECK(fs[1].idempotent == iv(4));

    // Idempotents sum to 1 and multiply to 0; CRT map is bijective.
    CHECK(R->add(fs[0].idempotent, fs[1].idempotent) == R->one());
    CHECK(R->is_zero(R->mul(fs[0].idempotent, fs[1].idempotent)));
    std::set<std::pair<u64, u64>> images;
    for (i64 x = 0; x < 12; ++x) {
        u64 a = fs[0].factor->index_of(fs[0].factor->from_int(x));
        u64 b = fs[1].factor->index_of(fs[1].factor->from_int(x));
        images.insert({a, b});
    }
    CHECK(images.size() == 12);
}

TEST_CASE("decompose_finite_ring: a field is a single factor") {
    auto R = Ring::integers_mod(7);
    auto fs = decompose_finite_ring(R);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].size == 7);
    CHECK(fs[0].idempotent == iv(1));
}

TEST_CASE("witness table ring: local, non-Bezout, size-8 single factor") {
    auto W = witness_table_ring();
    CHECK(W->size() == 8);
    CHECK(W->table().is_local);
    CHECK_FALSE(W->table().is_bezout);
    auto fs = decompose_finite_ring(W);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].size == 8);
    CHECK_THROWS_AS((void)W->gcd_bezout(iv(2), iv(4)), UnsupportedRingError);
}

TEST_CASE("pcs_diagnostics: Z/12 is arithmetic, witness ring is not") {
    auto d1 = pcs_diagnostics(Ring::integers_mod(12));
    CHECK(d1.arithmetic);
    CHECK(d1.is_pcs_candidate);
    for (auto& f : d1.factors) CHECK(f.chain_ring);

    auto d2 = pcs_diagnostics(witness_table_ring());
    REQUIRE(d2.factors.size() == 1);
    CHECK(d2.factors[0].minimal_prime_count == 1);
    CHECK_FALSE(d2.factors[0].minimal_prime_uniserial);
    CHECK_FALSE(d2.is_pcs_candidate);

    auto d3 = pcs_diagnostics(Ring::integers_mod(5));
    CHECK(d3.is_pcs_candidate);
}

TEST_CASE("finite arithmetic rings: local-factor ideals are pairwise comparable") {
    for (i64 n : {4, 8, 9, 12, 16, 24, 27, 36, 49}) {
        auto d = pcs_diagnostics(Ring::integers_mod(n));
        CHECK(d.arithmetic);
    }
}

TEST_CASE("polynomial quotient ring basics") {
    auto F4 = Ring::polynomial_quotient(2, Poly{{1, 1, 1}});
    CHECK(F4->size() == 4);
    CHECK(F4->is_unit(pv({0, 1})));  // in a field every nonzero element is a unit
    auto R = Ring::polynomial_quotient(2, Poly{{0, 0, 1}});  // F2[t]/(t^2)
    CHECK(R->size() == 4);
    CHECK_FALSE(R->is_unit(pv({0, 1})));
    CHECK(R->normalize_gen(pv({0, 1})) == pv({0, 1}));
    auto rad = radical(make_ideal(R, R->zero()));
    CHECK(rad.gen == pv({0, 1}));
}

TEST_CASE("product ring arithmetic is componentwise") {
    auto R = Ring::product({Ring::integers_mod(2), Ring::integers_mod(3)});
    CHECK(R->size() == 6);
    Value a = R->element_at(3), b = R->element_at(5);
    Value s = R->add(a, b);
    CHECK(s.comps[0].num == mod_euclid(a.comps[0].num + b.comps[0].num, 2));
    CHECK(s.comps[1].num == mod_euclid(a.comps[1].num + b.comps[1].num, 3));
    // Enumeration round trip.
    for (u64 i = 0; i < 6; ++i) CHECK(R->index_of(R->element_at(i)) == i);
    auto mp = minimal_primes_over(make_ideal(R, R->zero()));
    CHECK(mp.size() == 2);
}

TEST_CASE("associate_unit recovers the normalized generator") {
    auto R = Ring::integers_mod(16);
    for (i64 a = 0; a < 16; ++a) {
        Value g = R->normalize_gen(iv(a));
        Value w = R->associate_unit(iv(a), g);
        CHECK(R->is_unit(w));
        CHECK(R->mul(w, iv(a)) == g);
    }
    auto F = Ring::polynomial_quotient(3, Poly{{0, 0, 0, 1}});  // F3[t]/(t^3)
    for (u64 i = 0; i < F->size(); ++i) {
        Value a = F->element_at(i);
        Value g = F->normalize_gen(a);
        Value w = F->associate_unit(a, g);
        CHECK(F->is_unit(w));
        CHECK(F->mul(w, a) == g);
    }
}
