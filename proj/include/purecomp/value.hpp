#pragma once

#include <vector>

#include "purecomp/poly.hpp"
#include "purecomp/util.hpp"

namespace purecomp {

// Canonical representative of a ring element. Exactly one field is meaningful
// for a given ring kind: `num` for Z, Z/n and table indices, `poly` for
// polynomial (quotient) rings, `comps` for product rings.
struct Value {
    i64 num = 0;
    Poly poly;
    std::vector<Value> comps;

    bool operator==(const Value&) const = default;
};

// Deterministic total order used for canonical sorting: integers by value,
// polynomials by (degree, coefficients), tuples lexicographically.
bool value_less(const Value& a, const Value& b);

struct ValueHash {
    std::size_t operator()(const Value& v) const;
};

}  // namespace purecomp
