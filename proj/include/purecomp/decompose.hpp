#pragma once

#include "purecomp/fp_module.hpp"

namespace purecomp {

struct DiagonalReduction {
    Mat U, Uinv, D, V, Vinv;  // U*A*V = D, diagonal with a divisibility chain
};

// Diagonal reduction over Z, Z/n, F_p[t], their quotients and products.
// Euclidean pivoting on canonical representatives; modular kinds reduce after
// every operation so entries never leave the representative range.
DiagonalReduction diagonal_reduce(const Mat& a);

// Canonical form: ideals I_1 ⊆ I_2 ⊆ ... ⊆ I_n != R (largest factor first).
struct CanonicalForm {
    IdealSet ideals;
};

CanonicalForm canonical_form(const FpModule& m);

// One indecomposable cyclic constituent R/(ideal) of a canonical-form factor:
// the submodule generated by cofactor * e_{cf_index}.
struct IndecomposablePart {
    PrincipalIdeal ideal;
    std::size_t cf_index = 0;
    Value cofactor;
    u64 size = 0;  // |R/ideal|, 0 when infinite
};

struct IndecomposableDecomposition {
    std::vector<IndecomposablePart> parts;
    IdealSet factors() const;
};

// Splits each canonical-form ideal into pairwise-comaximal primary components.
// Parts are ordered by (radical generator, quotient size descending).
IndecomposableDecomposition indecomposable_refine(const RingPtr& ring, const CanonicalForm& cf);
IndecomposableDecomposition indecomposable_refine(const FpModule& m);

// Minimal number of generators: the canonical-form chain length.
std::size_t mu(const FpModule& m);

struct PeelResult {
    std::vector<Value> generator;  // normal-form coordinates of x
    FpModulePtr quotient;          // M / Rx
};

// Lexicographically least x with Rx pure in M, ann(Rx) = ann(M) and
// mu(M/Rx) = mu(M) - 1. Requires a finite module over a finite arithmetic
// (product-of-chain-rings) instance.
PeelResult peel_pure_generator(const FpModulePtr& m);

}  // namespace purecomp
