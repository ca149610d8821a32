#pragma once

#include <memory>

#include "purecomp/matrix.hpp"

namespace purecomp {

// Presentation of a finitely presented module: rows are generators, columns
// are relations. k = 0 presents a free module.
struct PresentationMatrix {
    Mat mat;
    std::size_t generators() const { return mat.rows; }
    std::size_t relations() const { return mat.cols; }
};

struct FpModule;
using FpModulePtr = std::shared_ptr<const FpModule>;

// A finitely presented module together with its invariant-factor normal form
// M ≅ R/(d_1) ⊕ ... ⊕ R/(d_r), d_1 | d_2 | ... (unit factors dropped, zero
// factors kept). Elements are stored in normal-form coordinates: tuples with
// coordinate i reduced modulo (d_i); equality is componentwise.
struct FpModule {
    RingPtr ring;
    Mat presentation;
    std::vector<PrincipalIdeal> normal_form;
    Mat to_normal;  // rank x m: presentation coordinates -> normal coordinates
    Mat to_pres;    // m x rank

    std::size_t rank() const { return normal_form.size(); }
    // Count of zero invariant factors (free summands of the quotient shape).
    std::size_t free_rank() const;
    u64 size() const;  // 0 when infinite
};

FpModulePtr build_module(const RingPtr& ring, const Mat& presentation);
// Presents R/(d_1) ⊕ ... ⊕ R/(d_r) directly via a diagonal matrix.
FpModulePtr module_from_ideals(const RingPtr& ring, const std::vector<Value>& diag);

PrincipalIdeal annihilator(const FpModule& m);

// Canonical representative of coords in ⊕ R/(d_i).
std::vector<Value> coords_reduce(const FpModule& m, std::vector<Value> coords);
std::vector<Value> coords_add(const FpModule& m, const std::vector<Value>& a,
                              const std::vector<Value>& b);
std::vector<Value> coords_scale(const FpModule& m, const Value& r, const std::vector<Value>& a);
std::vector<Value> coords_zero(const FpModule& m);
// Applies a coordinate map (to_normal / to_pres of some module) to a vector.
std::vector<Value> apply_map(const Mat& map, const std::vector<Value>& coords);

struct Submodule {
    FpModulePtr ambient;
    std::vector<std::vector<Value>> gens;  // normal-form coordinates
};

Submodule submodule_generated(const FpModulePtr& m, std::vector<std::vector<Value>> gens);
// Membership by solving a diagonal-reduced linear system over the ring.
bool submodule_contains(const Submodule& n, const std::vector<Value>& x);
// Presentation of m/n: the relations of m plus n's generators as new columns.
// The resulting module's to_normal maps m's normal coordinates to quotient
// coordinates.
FpModulePtr quotient_module(const FpModule& m, const Submodule& n);

}  // namespace purecomp
