#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "purecomp/value.hpp"

namespace purecomp {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

enum class RingKind { Integers, IntegersModN, PolynomialQuotient, Product, FiniteLocalTable };

// Explicit addition/multiplication tables of a finite commutative ring.
// All ring axioms are checked by exhaustion at construction (size <= 256).
struct FiniteTable {
    u32 n = 0;
    std::vector<u32> add;  // n*n row-major
    std::vector<u32> mul;
    u32 zero = 0;
    u32 one = 0;
    std::vector<u32> neg;
    std::vector<bool> unit;
    bool is_bezout = false;  // every 2-generated ideal principal, by exhaustion
    bool is_local = false;   // non-units closed under addition
};

// A commutative ring instance. All supported kinds except flagged tables are
// Bezout; Z, Z/n, F_p[t] and their quotients/products additionally admit
// diagonal reduction of matrices.
class Ring : public std::enable_shared_from_this<Ring> {
public:
    static RingPtr integers();
    static RingPtr integers_mod(i64 n);                       // n >= 2
    static RingPtr polynomial_ring(i64 p);                    // F_p[t], p prime
    static RingPtr polynomial_quotient(i64 p, Poly modulus);  // monic modulus
    static RingPtr product(std::vector<RingPtr> factors);     // >= 2 factors
    static RingPtr local_table(const std::vector<std::vector<int>>& add,
                               const std::vector<std::vector<int>>& mul);

    RingKind kind() const { return kind_; }
    i64 mod_n() const { return n_; }
    i64 char_p() const { return p_; }
    const Poly& modulus() const { return modpoly_; }
    const std::vector<RingPtr>& factors() const { return factors_; }
    const FiniteTable& table() const { return table_; }

    bool is_finite() const;
    u64 size() const;  // throws NotFiniteError when infinite
    bool is_bezout() const;
    // True for Z, Z/n, F_p[t], their quotients and finite products of them:
    // the instances with a diagonal-reduction algorithm.
    bool is_edr() const;
    bool same_ring(const Ring& other) const;

    Value zero() const;
    Value one() const;
    Value from_int(i64 k) const;  // k * 1
    Value add(const Value& a, const Value& b) const;
    Value sub(const Value& a, const Value& b) const;
    Value neg(const Value& a) const;
    Value mul(const Value& a, const Value& b) const;
    bool is_zero(const Value& a) const;
    bool is_one(const Value& a) const;
    bool is_unit(const Value& a) const;
    Value inv_unit(const Value& a) const;

    // Canonical enumeration of a finite ring; element_at(index_of(v)) == v.
    Value element_at(u64 idx) const;
    u64 index_of(const Value& v) const;

    struct Gcd {
        Value g, u, v;  // u*a + v*b = g, g normalized
    };
    Gcd gcd_bezout(const Value& a, const Value& b) const;
    // Canonical generator of the ideal (a): |a| over Z, gcd(a,n) over Z/n,
    // monic gcd with the modulus over polynomial quotients, componentwise over
    // products, least table index generating the same ideal over tables.
    Value normalize_gen(const Value& a) const;
    bool divides(const Value& b, const Value& a) const;  // a in (b)
    Value divide_exact(const Value& a, const Value& b) const;
    // Unit w with w*a = target, where (a) == (target). Exists in every
    // supported instance; used to normalize diagonal entries in place.
    Value associate_unit(const Value& a, const Value& target) const;
    // Canonical generator of (a) ∩ (b).
    Value intersect_gen(const Value& a, const Value& b) const;
    // Canonical representative of v + (d).
    Value reduce_mod(const Value& v, const Value& d) const;

    std::string format(const Value& v) const;

private:
    Ring() = default;

    RingKind kind_ = RingKind::Integers;
    i64 n_ = 0;                    // IntegersModN
    i64 p_ = 0;                    // PolynomialQuotient characteristic
    Poly modpoly_;                 // empty = full polynomial ring
    std::vector<RingPtr> factors_; // Product
    FiniteTable table_;            // FiniteLocalTable
};

struct RingValue {
    RingPtr ring;
    Value v;
};

// ---- ideals -------------------------------------------------------------

struct PrincipalIdeal {
    RingPtr ring;
    Value gen;  // normalized

    bool operator==(const PrincipalIdeal& o) const { return gen == o.gen; }
};

// Order-preserving ideal container; duplicates permitted.
struct IdealSet {
    std::vector<PrincipalIdeal> ideals;

    std::size_t size() const { return ideals.size(); }
    const PrincipalIdeal& operator[](std::size_t i) const { return ideals[i]; }
};

enum class Comparability { Equal, FirstInsideSecond, SecondInsideFirst, Comaximal, Incomparable };

PrincipalIdeal make_ideal(RingPtr ring, const Value& raw);
PrincipalIdeal whole_ring_ideal(RingPtr ring);
PrincipalIdeal zero_ideal(RingPtr ring);
bool ideal_is_whole(const PrincipalIdeal& I);
bool ideal_is_zero(const PrincipalIdeal& I);
bool ideal_contains(const PrincipalIdeal& I, const Value& x);
bool ideal_subset(const PrincipalIdeal& I, const PrincipalIdeal& J);  // I ⊆ J
PrincipalIdeal ideal_sum(const PrincipalIdeal& I, const PrincipalIdeal& J);
PrincipalIdeal ideal_intersect(const PrincipalIdeal& I, const PrincipalIdeal& J);
Comparability ideal_compare(const PrincipalIdeal& I, const PrincipalIdeal& J);

PrincipalIdeal radical(const PrincipalIdeal& I);
// Minimal primes containing I, normalized and sorted; empty for the whole ring.
IdealSet minimal_primes_over(const PrincipalIdeal& I);
// |R/I| for finite quotients, 0 when infinite.
u64 quotient_size(const PrincipalIdeal& I);

std::string ideal_format(const PrincipalIdeal& I);

// ---- finite ring structure ----------------------------------------------

struct LocalFactor {
    RingPtr factor;        // the local quotient ring
    Value idempotent;      // idempotent of the ambient ring picking the factor
    u64 size = 0;
};

// Complete orthogonal decomposition of a finite ring into local factors,
// ordered by size descending then idempotent.
std::vector<LocalFactor> decompose_finite_ring(const RingPtr& ring);

// Every ideal of a finite ring (element-index sets, sorted by size then set).
// Works for non-Bezout tables as well; guarded by an element cap.
std::vector<std::vector<u32>> enumerate_ideal_sets(const RingPtr& ring);

struct PcsDiagnostics {
    struct Factor {
        u64 size = 0;
        int minimal_prime_count = 0;
        bool minimal_prime_uniserial = false;
        bool chain_ring = false;  // ideal lattice totally ordered
    };
    std::vector<Factor> factors;
    bool arithmetic = false;        // every local factor a chain ring
    bool is_pcs_candidate = false;
};

PcsDiagnostics pcs_diagnostics(const RingPtr& ring);

// Canonical residues of R/(d) in enumeration order; requires the quotient to
// be finite.
std::vector<Value> residues_mod(const RingPtr& ring, const Value& d);

}  // namespace purecomp
