#include "purecomp/fp_module.hpp"

#include <algorithm>

#include "purecomp/decompose.hpp"

namespace purecomp {

std::size_t FpModule::free_rank() const {
    std::size_t f = 0;
    for (const auto& I : normal_form)
        if (ideal_is_zero(I)) ++f;
    return f;
}

u64 FpModule::size() const {
    u64 s = 1;
    for (const auto& I : normal_form) {
        u64 q = quotient_size(I);
        if (q == 0) return 0;
        s *= q;
        if (s > (u64(1) << 40)) throw TooLargeError("module too large to measure");
    }
    return s;
}

FpModulePtr build_module(const RingPtr& ring, const Mat& presentation) {
    if (!ring->is_edr())
        throw UnsupportedRingError(
            "module normal forms need Z, Z/n, F_p[t], a quotient or a product of these");
    if (presentation.ring && !presentation.ring->same_ring(*ring))
        throw DimensionMismatchError("presentation entries come from a different ring");

    auto m = std::make_shared<FpModule>();
    m->ring = ring;
    m->presentation = presentation;
    m->presentation.ring = ring;

    DiagonalReduction red = diagonal_reduce(m->presentation);
    const std::size_t rows = presentation.rows;
    const std::size_t dmax = std::min(rows, presentation.cols);

    std::vector<Value> diag(rows, ring->zero());
    for (std::size_t i = 0; i < dmax; ++i) diag[i] = red.D.at(i, i);

    // Divisibility chain sanity, units leading and zeros trailing included.
    for (std::size_t i = 0; i + 1 < rows; ++i) {
        if (!ring->divides(diag[i], diag[i + 1]))
            throw SearchExhaustedError("invariant factors do not form a divisibility chain");
    }

    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < rows; ++i)
        if (!ring->is_unit(diag[i])) kept.push_back(i);

    m->normal_form.reserve(kept.size());
    for (std::size_t i : kept) m->normal_form.push_back(make_ideal(ring, diag[i]));

    m->to_normal = Mat(ring, kept.size(), rows);
    for (std::size_t r = 0; r < kept.size(); ++r)
        for (std::size_t c = 0; c < rows; ++c) m->to_normal.at(r, c) = red.U.at(kept[r], c);
    m->to_pres = Mat(ring, rows, kept.size());
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < kept.size(); ++c) m->to_pres.at(r, c) = red.Uinv.at(r, kept[c]);
    return m;
}

FpModulePtr module_from_ideals(const RingPtr& ring, const std::vector<Value>& diag) {
    Mat p(ring, diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) p.at(i, i) = diag[i];
    return build_module(ring, p);
}

PrincipalIdeal annihilator(const FpModule& m) {
    if (m.normal_form.empty()) return whole_ring_ideal(m.ring);
    return m.normal_form.back();
}

std::vector<Value> coords_reduce(const FpModule& m, std::vector<Value> coords) {
    if (coords.size() != m.rank()) throw DimensionMismatchError("coordinate length mismatch");
    for (std::size_t i = 0; i < coords.size(); ++i)
        coords[i] = m.ring->reduce_mod(coords[i], m.normal_form[i].gen);
    return coords;
}

std::vector<Value> coords_add(const FpModule& m, const std::vector<Value>& a,
                              const std::vector<Value>& b) {
    std::vector<Value> out(m.rank());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = m.ring->add(a[i], b[i]);
    return coords_reduce(m, std::move(out));
}

std::vector<Value> coords_scale(const FpModule& m, const Value& r, const std::vector<Value>& a) {
    std::vector<Value> out(m.rank());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = m.ring->mul(r, a[i]);
    return coords_reduce(m, std::move(out));
}

std::vector<Value> coords_zero(const FpModule& m) {
    return std::vector<Value>(m.rank(), m.ring->zero());
}

std::vector<Value> apply_map(const Mat& map, const std::vector<Value>& coords) {
    if (coords.size() != map.cols) throw DimensionMismatchError("coordinate length mismatch");
    const Ring& R = *map.ring;
    std::vector<Value> out(map.rows, R.zero());
    for (std::size_t i = 0; i < map.rows; ++i)
        for (std::size_t j = 0; j < map.cols; ++j)
            out[i] = R.add(out[i], R.mul(map.at(i, j), coords[j]));
    return out;
}

Submodule submodule_generated(const FpModulePtr& m, std::vector<std::vector<Value>> gens) {
    for (auto& g : gens) g = coords_reduce(*m, std::move(g));
    return Submodule{m, std::move(gens)};
}

bool submodule_contains(const Submodule& n, const std::vector<Value>& x) {
    const FpModule& m = *n.ambient;
    const RingPtr& R = m.ring;
    const std::size_t r = m.rank();
    Mat b(R, r, n.gens.size() + r);
    for (std::size_t j = 0; j < n.gens.size(); ++j)
        for (std::size_t i = 0; i < r; ++i) b.at(i, j) = n.gens[j][i];
    for (std::size_t i = 0; i < r; ++i) b.at(i, n.gens.size() + i) = m.normal_form[i].gen;

    DiagonalReduction red = diagonal_reduce(b);
    std::vector<Value> rhs = apply_map(red.U, x);
    for (std::size_t i = 0; i < r; ++i) {
        Value d = i < std::min(r, b.cols) ? red.D.at(i, i) : R->zero();
        if (!R->divides(d, rhs[i])) return false;
    }
    return true;
}

FpModulePtr quotient_module(const FpModule& m, const Submodule& n) {
    if (n.ambient.get() != &m)
        throw DimensionMismatchError("submodule belongs to a different ambient module");
    const std::size_t r = m.rank();
    Mat b(m.ring, r, r + n.gens.size());
    for (std::size_t i = 0; i < r; ++i) b.at(i, i) = m.normal_form[i].gen;
    for (std::size_t j = 0; j < n.gens.size(); ++j)
        for (std::size_t i = 0; i < r; ++i) b.at(i, r + j) = n.gens[j][i];
    return build_module(m.ring, b);
}

}  // namespace purecomp
