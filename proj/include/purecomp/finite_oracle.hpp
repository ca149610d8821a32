#pragma once

#include <optional>
#include <unordered_map>

#include "purecomp/fp_module.hpp"

namespace purecomp {

inline constexpr u32 kMaxFiniteModuleElems = 65536;  // element-level predicates
inline constexpr u32 kMaxAddTableElems = 4096;       // flat-table / lattice work
inline constexpr std::size_t kMaxLatticeNodes = std::size_t(1) << 21;
inline constexpr u64 kMaxCosetSpace = u64(1) << 22;

// One distinct scalar action of the ring on a finite module.
struct ActionClass {
    Value rep;             // canonical representative of the acting residue
    std::vector<u32> map;  // element -> image
    bool unit_action = false;
    bool zero_action = false;
};

// Exhaustively enumerable finite module: canonical element list, addition and
// scalar action tables. Built from invariant-factor coordinates, from a
// presentation by coset enumeration, from a subset/quotient of another table,
// or as a linear dual. The element order is the canonical enumeration order
// (lexicographic in coordinates); all deterministic tie-breaks use it.
struct FiniteModule {
    RingPtr ring;
    u32 n = 0;

    std::vector<ActionClass> classes;
    std::vector<u32> nontrivial_classes;  // neither unit nor zero action
    u32 zero_class = 0;

    std::vector<u32> add_tab;  // n*n when n <= kMaxAddTableElems
    std::vector<u32> neg_tab;
    std::vector<u32> gens;  // construction generating set (element indices)

    std::vector<Value> elems;  // payloads for printing / conversions

    // Coordinate backing (modules built from invariant factors).
    FpModulePtr source;
    std::vector<Value> coord_moduli;
    std::vector<std::vector<Value>> coord_reps;
    std::vector<std::unordered_map<Value, u32, ValueHash>> coord_rep_index;

    // Coset backing (modules built from a presentation over a finite ring).
    u32 tuple_arity = 0;
    u32 ring_n = 0;
    std::vector<u32> ring_add_idx, ring_mul_idx;  // ring index tables
    std::vector<u32> coset_rep;                   // element -> free tuple index
    std::vector<u32> elem_of_tuple;               // free tuple index -> element

    // Subset/quotient backing.
    std::shared_ptr<const FiniteModule> parent;
    bool quotient_backing = false;
    std::vector<u32> parent_index;      // element -> parent element
    std::vector<u32> from_parent;       // parent element -> element (or undef)
    std::vector<u32> parent_class_map;  // parent class id -> class id

    // Dual backing.
    std::shared_ptr<const FiniteModule> dual_base;
    std::vector<u32> scalar_elems;                     // ring indices of the subfield
    std::vector<u32> dual_basis;                       // base elements forming an F_q-basis
    std::vector<std::vector<u32>> functional_values;   // element -> per-base scalar position

    // Scalar-class lookup: residues modulo ann(M) for EDR rings, or a
    // ring-element-indexed table for small finite rings.
    bool exponent_based = false;
    Value exponent_gen;
    std::unordered_map<Value, u32, ValueHash> residue_class;
    std::vector<u32> r_to_class;

    u32 zero() const { return 0; }
    u32 add(u32 a, u32 b) const {
        return add_tab.empty() ? add_slow(a, b) : add_tab[std::size_t(a) * n + b];
    }
    u32 neg(u32 a) const { return neg_tab[a]; }
    u32 act(u32 cls, u32 x) const { return classes[cls].map[x]; }
    u32 class_of_value(const Value& r) const;
    std::string format_element(u32 i) const;

    u32 add_slow(u32 a, u32 b) const;
};

using FiniteModulePtr = std::shared_ptr<const FiniteModule>;

// Constructors.
FiniteModulePtr finite_module_from_fp(const FpModulePtr& m);
FiniteModulePtr finite_module_from_presentation(const RingPtr& ring, const Mat& presentation);
FiniteModulePtr ring_as_module(const RingPtr& ring);
FiniteModulePtr submodule_table(const FiniteModulePtr& parent, const Bits& subset);
FiniteModulePtr quotient_table(const FiniteModulePtr& parent, const Bits& subset);
// F_q-linear dual with action (r.f)(s) = f(r s); `scalars` lists the element
// indices of a central subfield of the ring acting as coefficients.
FiniteModulePtr dual_module(const FiniteModulePtr& base, const std::vector<u32>& scalars);

// Coordinate conversions for modules built from invariant factors.
u32 index_of_coords(const FiniteModule& m, const std::vector<Value>& coords);
std::vector<Value> coords_of_index(const FiniteModule& m, u32 idx);

// Subset helpers.
bool is_submodule(const FiniteModule& m, const Bits& subset);
Bits submodule_closure(const FiniteModule& m, const std::vector<u32>& gens);
Bits extend_closure(const FiniteModule& m, const Bits& base, u32 x);  // base + Rx
Bits full_set(const FiniteModule& m);
Bits zero_set(const FiniteModule& m);

// rE ∩ F = rF for every scalar class r.
bool is_rd_pair(const FiniteModule& m, const Bits& outer, const Bits& inner);
bool is_rd_submodule(const FiniteModule& m, const Bits& sub);
// Purity decided by retraction search: a pure submodule with finitely
// presented quotient is a direct summand, and any direct summand is pure.
bool exists_retraction(const FiniteModule& m, const Bits& outer, const Bits& inner);
bool is_pure_pair(const FiniteModule& m, const Bits& outer, const Bits& inner);
bool is_pure_submodule(const FiniteModule& m, const Bits& sub);

// ---- submodule lattice -------------------------------------------------------

struct Lattice {
    FiniteModulePtr mod;
    std::vector<Bits> nodes;  // nodes[0] = {0}
    std::vector<u32> card;
    std::unordered_map<Bits, u32, BitsHash> index;
    u32 full = 0;
    std::vector<u32> order;  // ids sorted by (card, id); extensions go upward
    // act(class, node) for every nontrivial class, aligned with
    // mod->nontrivial_classes.
    std::vector<std::vector<Bits>> node_acts;
};

Lattice enumerate_submodule_lattice(const FiniteModulePtr& m,
                                    std::size_t node_cap = kMaxLatticeNodes);
std::vector<Bits> enumerate_submodules(const FiniteModulePtr& m);

// Streams every extension node -> node + Rx with cyclic quotient, deduplicated
// per child, in deterministic order. fn(child_id, generator_element).
void for_each_extension(const Lattice& lat, u32 node,
                        const std::function<void(u32, u32)>& fn);

// ---- cyclic factor registry ----------------------------------------------------

// Isomorphism label of a cyclic factor: its annihilator as a set of scalar
// classes, with a principal generator when the ring provides one.
struct FactorInfo {
    std::vector<u32> ann_classes;  // sorted
    bool principal = false;
    Value ann_gen;               // normalized, valid when principal
    u64 quotient_size = 0;
    bool indecomposable = false;  // by idempotent exhaustion in R/ann
    int goldie = 0;               // minimal primes over ann (principal case)
};

class FactorRegistry {
public:
    explicit FactorRegistry(FiniteModulePtr mod) : mod_(std::move(mod)) {}
    u32 intern(const std::vector<u32>& ann_classes);
    const FactorInfo& info(u32 id) const { return infos_[id]; }
    std::size_t count() const { return infos_.size(); }

private:
    FiniteModulePtr mod_;
    std::vector<FactorInfo> infos_;
    std::unordered_map<std::string, u32> by_key_;
};

// Annihilator classes of the cyclic factor child/parent.
std::vector<u32> factor_ann_classes(const Lattice& lat, u32 parent, u32 child);

// ---- series enumeration over the lattice ---------------------------------------

struct SeriesDpOptions {
    bool rd_mode = true;  // RD stage checks; false = purity stage checks
    bool indecomposable_only = true;
    bool compute_min_gsum = false;
    std::size_t multiset_cap = 64;
};

struct SeriesDpResult {
    bool reachable = false;
    bool unique = false;
    u32 length = 0;
    std::vector<u32> top_multiset;                    // factor ids, sorted
    std::vector<std::vector<u32>> offending_multisets;  // when not unique
    u64 min_gsum = 0;
    u64 edge_count = 0;
};

// Exhaustive verification over all composition series of the module via
// dynamic programming on the lattice: per node, the set of achievable factor
// multisets. Equivalent to enumerating every series path by path.
SeriesDpResult series_dp(const Lattice& lat, FactorRegistry& reg, const SeriesDpOptions& opt);

struct FiniteSeries {
    std::vector<u32> chain;        // lattice node ids; chain.back() == lat.full
    std::vector<u32> reps;         // generator element added at each step
    std::vector<u32> factor_info;  // registry ids per step
};

std::vector<FiniteSeries> enumerate_series(const Lattice& lat, FactorRegistry& reg,
                                           const SeriesDpOptions& opt, std::size_t max_series);

// ---- hom spaces and isomorphism ------------------------------------------------

struct HomSpace {
    FiniteModulePtr source, target;
    std::vector<std::vector<u32>> maps;  // each: source index -> target index
};

HomSpace hom_space(const FiniteModulePtr& src, const FiniteModulePtr& dst,
                   std::size_t cap = 1 << 20);
bool module_isomorphic(const FiniteModulePtr& a, const FiniteModulePtr& b);
bool is_indecomposable(const FiniteModulePtr& m);
u32 mu_bruteforce(const FiniteModulePtr& m);
u32 mu_bruteforce(const Lattice& lat);

// ---- VNR diagnostics -----------------------------------------------------------

struct VnrReport {
    u64 presentations_checked = 0;
    u64 classes_checked = 0;
    u64 indecomposables = 0;
    std::vector<std::string> counterexamples;  // must stay empty
    bool ok = false;
};

// Over a finite product of fields, checks that every indecomposable module
// presented with at most max_gens generators (entries exhausted) is simple.
VnrReport vnr_indecomposable_simple_check(const RingPtr& ring, std::size_t max_gens = 3,
                                          std::size_t max_rels = 3);

}  // namespace purecomp
