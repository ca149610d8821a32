#pragma once

#include <string>
#include <utility>
#include <vector>

#include "purecomp/util.hpp"

namespace purecomp {

// Univariate polynomial over F_p. Coefficients ascending by degree, reduced
// into [0, p), no trailing zeros. The zero polynomial has an empty vector.
struct Poly {
    std::vector<i64> c;

    bool is_zero() const { return c.empty(); }
    int deg() const { return int(c.size()) - 1; }
    i64 lead() const { return c.back(); }

    bool operator==(const Poly&) const = default;

    static Poly zero() { return {}; }
    static Poly constant(i64 k, i64 p) {
        k = mod_euclid(k, p);
        return k == 0 ? Poly{} : Poly{{k}};
    }
    static Poly t() { return Poly{{0, 1}}; }
};

// Degree-then-coefficients order; gives a deterministic total order.
bool poly_less(const Poly& a, const Poly& b);

Poly poly_trim(Poly f);
Poly poly_reduce_coeffs(const Poly& f, i64 p);
Poly poly_add(const Poly& a, const Poly& b, i64 p);
Poly poly_sub(const Poly& a, const Poly& b, i64 p);
Poly poly_neg(const Poly& a, i64 p);
Poly poly_mul(const Poly& a, const Poly& b, i64 p);
// Requires b != 0. Works for prime p (leading coefficient invertible).
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b, i64 p);
Poly poly_mod(const Poly& a, const Poly& b, i64 p);
Poly poly_monic(const Poly& a, i64 p);
Poly poly_gcd(Poly a, Poly b, i64 p);  // monic (or zero)
// g = gcd monic, u*a + v*b = g.
Poly poly_ext_gcd(const Poly& a, const Poly& b, i64 p, Poly& u, Poly& v);
Poly poly_derivative(const Poly& a, i64 p);

i64 inv_mod(i64 a, i64 p);

// Monic irreducibles of the given degree, ascending in poly_less order.
// Cached per (p, degree). Enumeration cost is p^degree; guarded by a cap.
const std::vector<Poly>& irreducibles(i64 p, int degree);
bool poly_is_irreducible(const Poly& f, i64 p);
// Factorization into monic irreducible powers, sorted by poly_less of the base.
std::vector<std::pair<Poly, int>> poly_factor(const Poly& f, i64 p);
Poly poly_squarefree_part(const Poly& f, i64 p);

std::string poly_format(const Poly& f, const std::string& var = "t");

}  // namespace purecomp
