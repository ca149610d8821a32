#include <doctest.h>

#include "purecomp/poly.hpp"

using namespace purecomp;

TEST_CASE("divmod invariants over F_p") {
    Rng rng(7);
    for (i64 p : {2, 3, 5}) {
        for (int iter = 0; iter < 200; ++iter) {
            Poly a, b;
            int da = int(rng.below(7)), db = int(rng.below(5));
            for (int i = 0; i <= da; ++i) a.c.push_back(rng.range(0, p - 1));
            for (int i = 0; i <= db; ++i) b.c.push_back(rng.range(0, p - 1));
            a = poly_trim(std::move(a));
            b = poly_trim(std::move(b));
            if (b.is_zero()) continue;
            auto [q, r] = poly_divmod(a, b, p);
            CHECK(poly_add(poly_mul(q, b, p), r, p) == a);
            CHECK(r.deg() < b.deg());
        }
    }
}

TEST_CASE("gcd divides both arguments and carries a Bezout identity") {
    Rng rng(11);
    for (i64 p : {2, 3}) {
        for (int iter = 0; iter < 200; ++iter) {
            Poly a, b;
            int da = int(rng.below(6)), db = int(rng.below(6));
            for (int i = 0; i <= da; ++i) a.c.push_back(rng.range(0, p - 1));
            for (int i = 0; i <= db; ++i) b.c.push_back(rng.range(0, p - 1));
            a = poly_trim(std::move(a));
            b = poly_trim(std::move(b));
            Poly u, v;
            Poly g = poly_ext_gcd(a, b, p, u, v);
            CHECK(poly_add(poly_mul(u, a, p), poly_mul(v, b, p), p) == g);
            if (!g.is_zero()) {
                CHECK(poly_mod(a, g, p).is_zero());
                CHECK(poly_mod(b, g, p).is_zero());
                CHECK(g.lead() == 1);
            }
        }
    }
}

TEST_CASE("irreducible enumeration over F_2") {
    CHECK(irreducibles(2, 1).size() == 2);  // t, t+1
    CHECK(irreducibles(2, 2).size() == 1);  // t^2+t+1
    CHECK(irreducibles(2, 3).size() == 2);
    CHECK(irreducibles(2, 4).size() == 3);
    CHECK(poly_is_irreducible(Poly{{1, 1, 1}}, 2));
    CHECK_FALSE(poly_is_irreducible(Poly{{1, 0, 1}}, 2));  // (t+1)^2
}

TEST_CASE("factorization reassembles the input") {
    Rng rng(13);
    for (i64 p : {2, 3, 5}) {
        for (int iter = 0; iter < 100; ++iter) {
            Poly f;
            int d = 1 + int(rng.below(8));
            for (int i = 0; i < d; ++i) f.c.push_back(rng.range(0, p - 1));
            f.c.push_back(1);  // monic
            auto factors = poly_factor(f, p);
            Poly prod{{1}};
            for (auto& [q, e] : factors) {
                CHECK(poly_is_irreducible(q, p));
                for (int i = 0; i < e; ++i) prod = poly_mul(prod, q, p);
            }
            CHECK(prod == f);
        }
    }
    // Squarefree part handles p-th powers (derivative vanishes).
    Poly f{{1, 0, 1}};  // (t+1)^2 over F_2
    CHECK(poly_squarefree_part(f, 2) == Poly{{1, 1}});
    Poly g{{0, 0, 0, 1}};  // t^3 over F_3: derivative is 0
    CHECK(poly_squarefree_part(g, 3) == Poly{{0, 1}});
}

TEST_CASE("formatting") {
    CHECK(poly_format(Poly{}) == "0");
    CHECK(poly_format(Poly{{1, 1, 1}}) == "t^2+t+1");
    CHECK(poly_format(Poly{{0, 2}}) == "2t");
    CHECK(poly_format(Poly{{3}}) == "3");
}
