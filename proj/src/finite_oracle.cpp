#include "purecomp/finite_oracle.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace purecomp {

namespace {

constexpr u32 kUndef = ~u32(0);

u64 map_hash(const std::vector<u32>& m) {
    u64 h = 0xcbf29ce484222325ull;
    for (u32 v : m) h = (h ^ v) * 0x100000001b3ull;
    return h;
}

bool map_is_unit(const std::vector<u32>& m) {
    std::vector<bool> hit(m.size(), false);
    for (u32 v : m) {
        if (hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

bool map_is_zero(const std::vector<u32>& m, u32 zero) {
    for (u32 v : m)
        if (v != zero) return false;
    return true;
}

void finalize_class_flags(FiniteModule& M) {
    for (u32 c = 0; c < M.classes.size(); ++c) {
        auto& cls = M.classes[c];
        cls.zero_action = map_is_zero(cls.map, 0);
        cls.unit_action = !cls.zero_action && map_is_unit(cls.map);
        if (cls.zero_action) M.zero_class = c;
        if (!cls.zero_action && !cls.unit_action) M.nontrivial_classes.push_back(c);
    }
}

// Scalar classes as residues modulo ann(M); valid whenever distinct residues
// act distinctly, i.e. over the diagonal-reduction ring kinds.
void build_classes_exponent(FiniteModule& M, const std::function<u32(const Value&, u32)>& act) {
    M.exponent_based = true;
    for (const Value& r : residues_mod(M.ring, M.exponent_gen)) {
        ActionClass cls;
        cls.rep = r;
        cls.map.resize(M.n);
        for (u32 x = 0; x < M.n; ++x) cls.map[x] = act(r, x);
        M.residue_class.emplace(r, u32(M.classes.size()));
        M.classes.push_back(std::move(cls));
    }
    finalize_class_flags(M);
}

// Scalar classes by deduplicating the action of every ring element; needed for
// table rings where ann(M) may not be principal.
void build_classes_finite(FiniteModule& M, const std::function<u32(const Value&, u32)>& act) {
    u64 rs = M.ring->size();
    if (rs > 4096) throw TooLargeError("scalar-class construction caps at 4096 ring elements");
    M.r_to_class.assign(std::size_t(rs), 0);
    std::unordered_map<u64, std::vector<u32>> seen;
    for (u64 ri = 0; ri < rs; ++ri) {
        Value r = M.ring->element_at(ri);
        std::vector<u32> map(M.n);
        for (u32 x = 0; x < M.n; ++x) map[x] = act(r, x);
        u64 h = map_hash(map);
        u32 id = kUndef;
        auto it = seen.find(h);
        if (it != seen.end()) {
            for (u32 cand : it->second)
                if (M.classes[cand].map == map) {
                    id = cand;
                    break;
                }
        }
        if (id == kUndef) {
            id = u32(M.classes.size());
            ActionClass cls;
            cls.rep = r;
            cls.map = std::move(map);
            M.classes.push_back(std::move(cls));
            seen[h].push_back(id);
        }
        M.r_to_class[std::size_t(ri)] = id;
    }
    finalize_class_flags(M);
}

void build_neg_and_table(FiniteModule& M, const std::function<u32(u32, u32)>& add) {
    if (M.n <= kMaxAddTableElems) {
        M.add_tab.resize(std::size_t(M.n) * M.n);
        for (u32 a = 0; a < M.n; ++a)
            for (u32 b = 0; b <= a; ++b) {
                u32 s = add(a, b);
                M.add_tab[std::size_t(a) * M.n + b] = s;
                M.add_tab[std::size_t(b) * M.n + a] = s;
            }
    }
    M.neg_tab.assign(M.n, kUndef);
    for (u32 a = 0; a < M.n; ++a) {
        if (M.neg_tab[a] != kUndef) continue;
        for (u32 b = 0; b < M.n; ++b) {
            if (add(a, b) == 0) {
                M.neg_tab[a] = b;
                M.neg_tab[b] = a;
                break;
            }
        }
        if (M.neg_tab[a] == kUndef) throw SearchExhaustedError("module table lacks negatives");
    }
}

std::vector<u32> greedy_generators(const FiniteModule& M) {
    std::vector<u32> gens;
    Bits span = submodule_closure(M, {});
    for (u32 x = 1; x < M.n; ++x) {
        if (span.test(x)) continue;
        gens.push_back(x);
        span = extend_closure(M, span, x);
        if (span.count() == M.n) break;
    }
    return gens;
}

}  // namespace

u32 FiniteModule::class_of_value(const Value& r) const {
    if (exponent_based) {
        auto it = residue_class.find(ring->reduce_mod(r, exponent_gen));
        if (it == residue_class.end()) throw SearchExhaustedError("scalar residue not found");
        return it->second;
    }
    if (!r_to_class.empty()) return r_to_class[std::size_t(ring->index_of(r))];
    if (parent) return parent_class_map[parent->class_of_value(r)];
    throw SearchExhaustedError("module has no scalar lookup");
}

std::string FiniteModule::format_element(u32 i) const {
    const Value& v = elems[i];
    if (v.comps.empty()) return ring->format(v);
    std::string out = "(";
    for (std::size_t c = 0; c < v.comps.size(); ++c) {
        if (c) out += ",";
        out += ring->format(v.comps[c]);
    }
    return out + ")";
}

// ---- coordinate-backed construction ------------------------------------------

u32 FiniteModule::add_slow(u32 a, u32 b) const {
    if (!coord_moduli.empty()) {
        u64 ia = a, ib = b, out = 0;
        std::vector<u32> da(coord_moduli.size()), db(coord_moduli.size());
        for (std::size_t c = coord_moduli.size(); c-- > 0;) {
            u64 s = coord_reps[c].size();
            da[c] = u32(ia % s);
            db[c] = u32(ib % s);
            ia /= s;
            ib /= s;
        }
        for (std::size_t c = 0; c < coord_moduli.size(); ++c) {
            Value sum = ring->reduce_mod(ring->add(coord_reps[c][da[c]], coord_reps[c][db[c]]),
                                         coord_moduli[c]);
            out = out * coord_reps[c].size() + coord_rep_index[c].at(sum);
        }
        return u32(out);
    }
    if (parent) {
        u32 p = parent->add(parent_index[a], parent_index[b]);
        return from_parent[p];
    }
    throw TooLargeError("module too large for table addition");
}

FiniteModulePtr finite_module_from_moduli(const RingPtr& ring, const std::vector<Value>& moduli,
                                          const FpModulePtr& source) {
    auto M = std::make_shared<FiniteModule>();
    M->ring = ring;
    M->source = source;
    M->coord_moduli = moduli;

    u64 total = 1;
    for (const Value& d : moduli) {
        M->coord_reps.push_back(residues_mod(ring, d));
        total *= M->coord_reps.back().size();
        if (total > kMaxFiniteModuleElems) throw TooLargeError("module exceeds the 65536-element cap");
    }
    M->n = u32(total);
    M->coord_rep_index.resize(moduli.size());
    for (std::size_t c = 0; c < moduli.size(); ++c)
        for (u32 i = 0; i < M->coord_reps[c].size(); ++i)
            M->coord_rep_index[c].emplace(M->coord_reps[c][i], i);

    // Element payloads in lexicographic (index) order.
    M->elems.resize(M->n);
    for (u32 idx = 0; idx < M->n; ++idx) {
        Value v;
        u64 rest = idx;
        v.comps.resize(moduli.size());
        for (std::size_t c = moduli.size(); c-- > 0;) {
            u64 s = M->coord_reps[c].size();
            v.comps[c] = M->coord_reps[c][std::size_t(rest % s)];
            rest /= s;
        }
        M->elems[idx] = std::move(v);
    }

    auto decode = [&](u32 idx) {
        std::vector<u32> d(moduli.size());
        u64 rest = idx;
        for (std::size_t c = moduli.size(); c-- > 0;) {
            u64 s = M->coord_reps[c].size();
            d[c] = u32(rest % s);
            rest /= s;
        }
        return d;
    };
    auto encode_vals = [&](const std::vector<Value>& vals) {
        u64 out = 0;
        for (std::size_t c = 0; c < moduli.size(); ++c)
            out = out * M->coord_reps[c].size() + M->coord_rep_index[c].at(vals[c]);
        return u32(out);
    };

    auto add_fn = [&](u32 a, u32 b) {
        auto da = decode(a), db = decode(b);
        std::vector<Value> vals(moduli.size());
        for (std::size_t c = 0; c < moduli.size(); ++c)
            vals[c] = ring->reduce_mod(
                ring->add(M->coord_reps[c][da[c]], M->coord_reps[c][db[c]]), moduli[c]);
        return encode_vals(vals);
    };
    build_neg_and_table(*M, add_fn);

    auto act_fn = [&](const Value& r, u32 x) {
        auto dx = decode(x);
        std::vector<Value> vals(moduli.size());
        for (std::size_t c = 0; c < moduli.size(); ++c)
            vals[c] = ring->reduce_mod(ring->mul(r, M->coord_reps[c][dx[c]]), moduli[c]);
        return encode_vals(vals);
    };
    if (ring->is_edr()) {
        Value exponent = ring->one();
        if (!moduli.empty()) {
            // ann(⊕ R/(d_i)) = (d_last) for a divisibility chain; fold a gcd to
            // stay correct for arbitrary moduli lists.
            exponent = ring->zero();
            bool first = true;
            for (const Value& d : moduli) {
                if (first) {
                    exponent = d;
                    first = false;
                } else {
                    exponent = ring->intersect_gen(exponent, d);
                }
            }
        }
        M->exponent_gen = ring->normalize_gen(exponent);
        build_classes_exponent(*M, act_fn);
    } else {
        build_classes_finite(*M, act_fn);
    }

    // Unit vectors as construction generators.
    for (std::size_t c = 0; c < moduli.size(); ++c) {
        std::vector<Value> vals(moduli.size(), ring->zero());
        vals[c] = ring->reduce_mod(ring->one(), moduli[c]);
        u32 e = encode_vals(vals);
        if (e != 0) M->gens.push_back(e);
    }
    return M;
}

FiniteModulePtr finite_module_from_fp(const FpModulePtr& m) {
    std::vector<Value> moduli;
    for (const auto& I : m->normal_form) moduli.push_back(I.gen);
    return finite_module_from_moduli(m->ring, moduli, m);
}

FiniteModulePtr ring_as_module(const RingPtr& ring) {
    if (!ring->is_finite()) throw NotFiniteError("the regular module is infinite");
    return finite_module_from_moduli(ring, {ring->zero()}, nullptr);
}

u32 index_of_coords(const FiniteModule& m, const std::vector<Value>& coords) {
    if (m.coord_moduli.size() != coords.size())
        throw DimensionMismatchError("coordinate length mismatch");
    u64 out = 0;
    for (std::size_t c = 0; c < coords.size(); ++c) {
        Value v = m.ring->reduce_mod(coords[c], m.coord_moduli[c]);
        out = out * m.coord_reps[c].size() + m.coord_rep_index[c].at(v);
    }
    return u32(out);
}

std::vector<Value> coords_of_index(const FiniteModule& m, u32 idx) {
    return m.elems[idx].comps;
}

// ---- coset-backed construction -------------------------------------------------

FiniteModulePtr finite_module_from_presentation(const RingPtr& ring, const Mat& presentation) {
    if (!ring->is_finite()) throw NotFiniteError("coset enumeration requires a finite ring");
    u64 rn = ring->size();
    if (rn > 1024) throw TooLargeError("coset enumeration caps at 1024 ring elements");
    const std::size_t arity = presentation.rows;
    u64 space = 1;
    for (std::size_t i = 0; i < arity; ++i) {
        space *= rn;
        if (space > kMaxCosetSpace) throw TooLargeError("free tuple space exceeds the cap");
    }

    auto M = std::make_shared<FiniteModule>();
    M->ring = ring;
    M->tuple_arity = u32(arity);
    M->ring_n = u32(rn);
    M->ring_add_idx.resize(std::size_t(rn) * rn);
    M->ring_mul_idx.resize(std::size_t(rn) * rn);
    std::vector<Value> relems;
    for (u64 i = 0; i < rn; ++i) relems.push_back(ring->element_at(i));
    for (u64 i = 0; i < rn; ++i)
        for (u64 j = 0; j < rn; ++j) {
            M->ring_add_idx[i * rn + j] = u32(ring->index_of(ring->add(relems[i], relems[j])));
            M->ring_mul_idx[i * rn + j] = u32(ring->index_of(ring->mul(relems[i], relems[j])));
        }

    auto tuple_add = [&](u64 a, u64 b) {
        u64 out = 0, mult = 1, res = 0;
        (void)mult;
        std::vector<u32> da(arity), db(arity);
        for (std::size_t c = arity; c-- > 0;) {
            da[c] = u32(a % rn);
            db[c] = u32(b % rn);
            a /= rn;
            b /= rn;
        }
        for (std::size_t c = 0; c < arity; ++c)
            out = out * rn + M->ring_add_idx[std::size_t(da[c]) * rn + db[c]];
        (void)res;
        return out;
    };
    auto tuple_scale = [&](u32 r, u64 a) {
        std::vector<u32> da(arity);
        for (std::size_t c = arity; c-- > 0;) {
            da[c] = u32(a % rn);
            a /= rn;
        }
        u64 out = 0;
        for (std::size_t c = 0; c < arity; ++c)
            out = out * rn + M->ring_mul_idx[std::size_t(r) * rn + da[c]];
        return out;
    };

    // Relation submodule: closure of all scalar multiples of the columns.
    Bits K(space);
    K.set(0);
    std::vector<u64> frontier{0};
    std::vector<u64> seeds;
    for (std::size_t j = 0; j < presentation.cols; ++j) {
        u64 col = 0;
        for (std::size_t i = 0; i < arity; ++i)
            col = col * rn + ring->index_of(presentation.at(i, j));
        for (u32 r = 0; r < rn; ++r) {
            u64 s = tuple_scale(r, col);
            if (!K.test(s)) {
                K.set(s);
                frontier.push_back(s);
            }
            seeds.push_back(s);
        }
    }
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    while (!frontier.empty()) {
        u64 x = frontier.back();
        frontier.pop_back();
        for (u64 s : seeds) {
            u64 y = tuple_add(x, s);
            if (!K.test(y)) {
                K.set(y);
                frontier.push_back(y);
            }
        }
    }
    std::vector<u64> kelems = [&] {
        std::vector<u64> v;
        K.for_each([&](std::size_t i) { v.push_back(u64(i)); });
        return v;
    }();

    // Coset enumeration: canonical representative = least tuple index.
    M->elem_of_tuple.assign(std::size_t(space), kUndef);
    for (u64 x = 0; x < space; ++x) {
        if (M->elem_of_tuple[std::size_t(x)] != kUndef) continue;
        u32 id = u32(M->coset_rep.size());
        if (id >= kMaxFiniteModuleElems) throw TooLargeError("module exceeds the 65536-element cap");
        M->coset_rep.push_back(u32(x));
        for (u64 k : kelems) M->elem_of_tuple[std::size_t(tuple_add(x, k))] = id;
    }
    M->n = u32(M->coset_rep.size());

    M->elems.resize(M->n);
    for (u32 i = 0; i < M->n; ++i) {
        Value v;
        u64 rest = M->coset_rep[i];
        v.comps.resize(arity);
        for (std::size_t c = arity; c-- > 0;) {
            v.comps[c] = relems[std::size_t(rest % rn)];
            rest /= rn;
        }
        M->elems[i] = std::move(v);
    }

    auto add_fn = [&](u32 a, u32 b) {
        return M->elem_of_tuple[std::size_t(tuple_add(M->coset_rep[a], M->coset_rep[b]))];
    };
    build_neg_and_table(*M, add_fn);
    auto act_fn = [&](const Value& r, u32 x) {
        u32 ri = u32(ring->index_of(r));
        return M->elem_of_tuple[std::size_t(tuple_scale(ri, M->coset_rep[x]))];
    };
    build_classes_finite(*M, act_fn);

    for (std::size_t i = 0; i < arity; ++i) {
        u64 e = 0;
        for (std::size_t c = 0; c < arity; ++c)
            e = e * rn + (c == i ? ring->index_of(ring->one()) : 0);
        u32 idx = M->elem_of_tuple[std::size_t(e)];
        if (idx != 0) M->gens.push_back(idx);
    }
    return M;
}

// ---- subset / quotient ----------------------------------------------------------

bool is_submodule(const FiniteModule& m, const Bits& subset) {
    if (subset.size() != m.n || !subset.test(0)) return false;
    bool ok = true;
    subset.for_each([&](std::size_t x) {
        if (!ok) return;
        for (u32 c : m.nontrivial_classes)
            if (!subset.test(m.act(c, u32(x)))) {
                ok = false;
                return;
            }
        subset.for_each([&](std::size_t y) {
            if (!ok) return;
            if (!subset.test(m.add(u32(x), u32(y)))) ok = false;
        });
    });
    return ok;
}

Bits zero_set(const FiniteModule& m) {
    Bits b(m.n);
    b.set(0);
    return b;
}

Bits full_set(const FiniteModule& m) {
    Bits b(m.n);
    for (u32 i = 0; i < m.n; ++i) b.set(i);
    return b;
}

Bits extend_closure(const FiniteModule& m, const Bits& base, u32 x) {
    // base + Rx: translate base by each element of the orbit Rx.
    std::vector<u32> orbit;
    {
        Bits seen(m.n);
        for (const auto& cls : m.classes) {
            u32 y = cls.map[x];
            if (!seen.test(y)) {
                seen.set(y);
                orbit.push_back(y);
            }
        }
    }
    Bits out(m.n);
    for (u32 y : orbit) base.for_each([&](std::size_t s) { out.set(m.add(u32(s), y)); });
    return out;
}

Bits submodule_closure(const FiniteModule& m, const std::vector<u32>& gens) {
    Bits s = zero_set(m);
    for (u32 g : gens) s = extend_closure(m, s, g);
    return s;
}

FiniteModulePtr submodule_table(const FiniteModulePtr& parent, const Bits& subset) {
    if (!is_submodule(*parent, subset)) throw NotASubmoduleError("subset is not a submodule");
    auto M = std::make_shared<FiniteModule>();
    M->ring = parent->ring;
    M->parent = parent;
    M->parent_index = subset.to_indices();
    M->n = u32(M->parent_index.size());
    M->from_parent.assign(parent->n, kUndef);
    for (u32 i = 0; i < M->n; ++i) M->from_parent[M->parent_index[i]] = i;
    M->elems.resize(M->n);
    for (u32 i = 0; i < M->n; ++i) M->elems[i] = parent->elems[M->parent_index[i]];

    auto add_fn = [&](u32 a, u32 b) {
        return M->from_parent[parent->add(M->parent_index[a], M->parent_index[b])];
    };
    build_neg_and_table(*M, add_fn);

    // Restrict the parent's classes and deduplicate.
    std::map<std::vector<u32>, u32> dedupe;
    M->parent_class_map.resize(parent->classes.size());
    for (u32 pc = 0; pc < parent->classes.size(); ++pc) {
        std::vector<u32> map(M->n);
        for (u32 i = 0; i < M->n; ++i)
            map[i] = M->from_parent[parent->act(pc, M->parent_index[i])];
        auto [it, inserted] = dedupe.emplace(map, u32(M->classes.size()));
        if (inserted) {
            ActionClass cls;
            cls.rep = parent->classes[pc].rep;
            cls.map = std::move(map);
            M->classes.push_back(std::move(cls));
        }
        M->parent_class_map[pc] = it->second;
    }
    finalize_class_flags(*M);
    M->gens = greedy_generators(*M);
    return M;
}

FiniteModulePtr quotient_table(const FiniteModulePtr& parent, const Bits& subset) {
    if (!is_submodule(*parent, subset)) throw NotASubmoduleError("subset is not a submodule");
    auto M = std::make_shared<FiniteModule>();
    M->ring = parent->ring;
    M->parent = parent;
    M->quotient_backing = true;
    M->from_parent.assign(parent->n, kUndef);
    for (u32 x = 0; x < parent->n; ++x) {
        if (M->from_parent[x] != kUndef) continue;
        u32 id = u32(M->parent_index.size());
        M->parent_index.push_back(x);
        subset.for_each([&](std::size_t s) { M->from_parent[parent->add(x, u32(s))] = id; });
    }
    M->n = u32(M->parent_index.size());
    M->elems.resize(M->n);
    for (u32 i = 0; i < M->n; ++i) M->elems[i] = parent->elems[M->parent_index[i]];

    auto add_fn = [&](u32 a, u32 b) {
        return M->from_parent[parent->add(M->parent_index[a], M->parent_index[b])];
    };
    build_neg_and_table(*M, add_fn);

    std::map<std::vector<u32>, u32> dedupe;
    M->parent_class_map.resize(parent->classes.size());
    for (u32 pc = 0; pc < parent->classes.size(); ++pc) {
        std::vector<u32> map(M->n);
        for (u32 i = 0; i < M->n; ++i)
            map[i] = M->from_parent[parent->act(pc, M->parent_index[i])];
        auto [it, inserted] = dedupe.emplace(map, u32(M->classes.size()));
        if (inserted) {
            ActionClass cls;
            cls.rep = parent->classes[pc].rep;
            cls.map = std::move(map);
            M->classes.push_back(std::move(cls));
        }
        M->parent_class_map[pc] = it->second;
    }
    finalize_class_flags(*M);
    M->gens = greedy_generators(*M);
    return M;
}

}  // namespace purecomp

namespace purecomp {

// ---- dual construction ----------------------------------------------------------

FiniteModulePtr dual_module(const FiniteModulePtr& base, const std::vector<u32>& scalars) {
    const RingPtr& ring = base->ring;
    if (!ring->is_finite()) throw NotFiniteError("dual construction requires a finite ring");
    const u32 q = u32(scalars.size());
    if (q < 2) throw UnsupportedRingError("scalar subfield needs at least 2 elements");
    std::vector<Value> svals;
    for (u32 s : scalars) svals.push_back(ring->element_at(s));
    if (!ring->is_zero(svals[0]))
        throw UnsupportedRingError("scalar subfield list must start with zero");
    // Field sanity by exhaustion: closed under + and *, nonzero elements units.
    std::vector<u32> spos(ring->size() > 4096 ? 0 : std::size_t(ring->size()), kUndef);
    for (u32 i = 0; i < q; ++i) spos[scalars[i]] = i;
    for (u32 i = 0; i < q; ++i)
        for (u32 j = 0; j < q; ++j) {
            u64 s = ring->index_of(ring->add(svals[i], svals[j]));
            u64 p = ring->index_of(ring->mul(svals[i], svals[j]));
            if (spos[std::size_t(s)] == kUndef || spos[std::size_t(p)] == kUndef)
                throw UnsupportedRingError("scalar subset is not closed");
        }

    // F_q-basis of the base module under + and the scalar action only.
    struct Deriv {
        u32 from, coeff, basis;
    };
    std::vector<Deriv> deriv(base->n, Deriv{kUndef, 0, kUndef});
    std::vector<u32> basis;
    Bits span(base->n);
    span.set(0);
    std::vector<u32> span_order{0};
    for (u32 x = 0; x < base->n; ++x) {
        if (span.test(x)) continue;
        u32 b = u32(basis.size());
        basis.push_back(x);
        std::vector<u32> snapshot = span_order;
        for (u32 s : snapshot) {
            for (u32 c = 0; c < q; ++c) {
                u32 cx = base->act(base->class_of_value(svals[c]), x);
                u32 e = base->add(s, cx);
                if (!span.test(e)) {
                    span.set(e);
                    span_order.push_back(e);
                    deriv[e] = Deriv{s, c, b};
                }
            }
        }
    }
    u64 expect = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) expect *= q;
    if (expect != base->n)
        throw UnsupportedRingError("base module is not free over the scalar subfield");

    auto M = std::make_shared<FiniteModule>();
    M->ring = ring;
    M->dual_base = base;
    M->scalar_elems = scalars;
    M->dual_basis = basis;
    M->n = base->n;

    const std::size_t dim = basis.size();
    // Scalar position arithmetic tables.
    std::vector<u32> sadd(std::size_t(q) * q), smul(std::size_t(q) * q);
    for (u32 i = 0; i < q; ++i)
        for (u32 j = 0; j < q; ++j) {
            sadd[std::size_t(i) * q + j] = spos[ring->index_of(ring->add(svals[i], svals[j]))];
            smul[std::size_t(i) * q + j] = spos[ring->index_of(ring->mul(svals[i], svals[j]))];
        }

    // Value table of each functional over every base element, from its basis
    // assignment, walking elements in span-discovery order.
    M->functional_values.resize(M->n);
    M->elems.resize(M->n);
    for (u32 f = 0; f < M->n; ++f) {
        std::vector<u32> digits(dim);
        u64 rest = f;
        for (std::size_t c = dim; c-- > 0;) {
            digits[c] = u32(rest % q);
            rest /= q;
        }
        std::vector<u32>& vals = M->functional_values[f];
        vals.assign(base->n, 0);
        for (u32 e : span_order) {
            if (e == 0) continue;
            const Deriv& d = deriv[e];
            if (d.from == kUndef) continue;
            // e = from + coeff * basis[d.basis]
            u32 add_part = smul[std::size_t(d.coeff) * q + digits[d.basis]];
            vals[e] = sadd[std::size_t(vals[d.from]) * q + add_part];
        }
        for (u32 b = 0; b < dim; ++b) vals[basis[b]] = digits[b];
        // replay derived elements once basis values are pinned
        for (u32 e : span_order) {
            if (e == 0 || deriv[e].from == kUndef) continue;
            const Deriv& d = deriv[e];
            u32 add_part = smul[std::size_t(d.coeff) * q + digits[d.basis]];
            vals[e] = sadd[std::size_t(vals[d.from]) * q + add_part];
        }
        Value payload;
        for (u32 b = 0; b < dim; ++b) payload.comps.push_back(svals[digits[b]]);
        M->elems[f] = std::move(payload);
    }

    auto encode_digits = [&](const std::vector<u32>& digits) {
        u64 out = 0;
        for (std::size_t c = 0; c < dim; ++c) out = out * q + digits[c];
        return u32(out);
    };
    auto add_fn = [&](u32 a, u32 b) {
        std::vector<u32> out(dim);
        u64 ra = a, rb = b;
        for (std::size_t c = dim; c-- > 0;) {
            out[c] = sadd[std::size_t(ra % q) * q + u32(rb % q)];
            ra /= q;
            rb /= q;
        }
        return encode_digits(out);
    };
    build_neg_and_table(*M, add_fn);

    auto act_fn = [&](const Value& r, u32 f) {
        // (r.f)(b_j) = f(r * b_j)
        u32 rc = base->class_of_value(r);
        std::vector<u32> digits(dim);
        for (std::size_t j = 0; j < dim; ++j)
            digits[j] = M->functional_values[f][base->act(rc, basis[j])];
        return encode_digits(digits);
    };
    build_classes_finite(*M, act_fn);
    M->gens = greedy_generators(*M);
    return M;
}

// ---- RD and purity ---------------------------------------------------------------

namespace {

Bits act_bits(const FiniteModule& m, u32 cls, const Bits& s) {
    Bits out(m.n);
    s.for_each([&](std::size_t x) { out.set(m.act(cls, u32(x))); });
    return out;
}

}  // namespace

bool is_rd_pair(const FiniteModule& m, const Bits& outer, const Bits& inner) {
    for (u32 c : m.nontrivial_classes) {
        Bits lhs = act_bits(m, c, outer);
        lhs &= inner;
        if (!lhs.is_subset_of(act_bits(m, c, inner))) return false;
    }
    return true;
}

bool is_rd_submodule(const FiniteModule& m, const Bits& sub) {
    if (!is_submodule(m, sub)) throw NotASubmoduleError("subset is not a submodule");
    return is_rd_pair(m, full_set(m), sub);
}

namespace {

// Joint scalar classes of a pair of modules over the same ring: distinct pairs
// (action on src, action on dst) over all ring scalars.
std::vector<std::pair<u32, u32>> joint_classes(const FiniteModule& src, const FiniteModule& dst) {
    std::vector<std::pair<u32, u32>> out;
    std::unordered_map<u64, bool> seen;
    auto push = [&](u32 a, u32 b) {
        u64 key = (u64(a) << 32) | b;
        if (!seen.emplace(key, true).second) return;
        out.emplace_back(a, b);
    };
    if (src.exponent_based && dst.exponent_based) {
        Value joint = src.ring->intersect_gen(src.exponent_gen, dst.exponent_gen);
        for (const Value& r : residues_mod(src.ring, joint))
            push(src.class_of_value(r), dst.class_of_value(r));
        return out;
    }
    u64 rs = src.ring->size();
    if (rs > 4096) throw TooLargeError("joint scalar enumeration caps at 4096 ring elements");
    for (u64 ri = 0; ri < rs; ++ri) {
        Value r = src.ring->element_at(ri);
        push(src.class_of_value(r), dst.class_of_value(r));
    }
    return out;
}

// Backtracking search for additive, scalar-equivariant maps src -> dst.
// The defined region is always a submodule S; extending a generator y with
// image u proposes img(s + r*y) = img(s) + r*u for every s in S and scalar
// class r, which pins the whole of S + Ry and catches every inconsistency as
// a conflict. `domain` is the submodule to cover (full set for genuine homs);
// `allowed` restricts candidate images. sink returning false stops the
// search.
struct HomSearch {
    const FiniteModule& src;
    const FiniteModule& dst;
    std::vector<std::pair<u32, u32>> joints;
    Bits domain;
    const Bits* allowed = nullptr;
    bool injective = false;

    std::vector<u32> img;
    std::vector<u32> rev;
    std::vector<u32> defined_list;

    HomSearch(const FiniteModule& s, const FiniteModule& d, Bits dom)
        : src(s), dst(d), joints(joint_classes(s, d)), domain(std::move(dom)) {
        img.assign(src.n, kUndef);
        rev.assign(dst.n, kUndef);
        std::vector<u32> boot;
        propose(0, 0, boot);
    }

    // Extends the defined submodule S by the generator y with image u.
    bool assign(u32 y, u32 u, std::vector<u32>& trail) {
        std::size_t snapshot = defined_list.size();
        for (std::size_t i = 0; i < snapshot; ++i) {
            u32 s = defined_list[i];
            u32 is = img[s];
            for (const auto& [cs, cd] : joints) {
                u32 e = src.add(s, src.act(cs, y));
                u32 v = dst.add(is, dst.act(cd, u));
                if (!propose(e, v, trail)) return false;
            }
        }
        return true;
    }

    bool propose(u32 e, u32 v, std::vector<u32>& trail) {
        if (img[e] != kUndef) return img[e] == v;
        if (injective) {
            if (rev[v] != kUndef) return false;
            rev[v] = e;
        }
        img[e] = v;
        trail.push_back(e);
        defined_list.push_back(e);
        return true;
    }

    void undo(std::vector<u32>& trail, std::size_t mark) {
        while (trail.size() > mark) {
            u32 e = trail.back();
            trail.pop_back();
            if (injective && rev[img[e]] == e) rev[img[e]] = kUndef;
            img[e] = kUndef;
            defined_list.pop_back();
        }
    }

    u32 next_undefined() const {
        u32 best = kUndef;
        domain.for_each([&](std::size_t x) {
            if (best == kUndef && img[x] == kUndef) best = u32(x);
        });
        return best;
    }

    // Seeds img(e) = v treating e as a generator extension; for use before run().
    bool seed(u32 e, u32 v) {
        std::vector<u32> trail;
        return assign(e, v, trail);
    }

    bool run(const std::function<bool(const std::vector<u32>&)>& sink) {
        std::vector<u32> trail;
        return dfs(sink, trail);
    }

    bool dfs(const std::function<bool(const std::vector<u32>&)>& sink, std::vector<u32>& trail) {
        u32 y = next_undefined();
        if (y == kUndef) return sink(img);
        for (u32 u = 0; u < dst.n; ++u) {
            if (allowed && !allowed->test(u)) continue;
            bool ok = true;
            for (const auto& [cs, cd] : joints) {
                u32 xe = src.act(cs, y);
                if (img[xe] != kUndef && img[xe] != dst.act(cd, u)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            std::size_t mark = trail.size();
            if (assign(y, u, trail)) {
                if (!dfs(sink, trail)) return false;
            }
            undo(trail, mark);
        }
        return true;
    }
};

}  // namespace

bool exists_retraction(const FiniteModule& m, const Bits& outer, const Bits& inner) {
    HomSearch hs(m, m, outer);
    Bits allowed = inner;
    hs.allowed = &allowed;
    std::vector<u32> trail;
    bool feasible = true;
    inner.for_each([&](std::size_t f) {
        if (feasible && !hs.assign(u32(f), u32(f), trail)) feasible = false;
    });
    if (!feasible) return false;
    bool found = false;
    hs.run([&](const std::vector<u32>&) {
        found = true;
        return false;  // stop at the first retraction
    });
    return found;
}

bool is_pure_pair(const FiniteModule& m, const Bits& outer, const Bits& inner) {
    // pure => RD always; with a finitely presented quotient, pure <=> summand,
    // witnessed by a retraction. The RD test is a sound fast reject.
    if (!is_rd_pair(m, outer, inner)) return false;
    return exists_retraction(m, outer, inner);
}

bool is_pure_submodule(const FiniteModule& m, const Bits& sub) {
    if (!is_submodule(m, sub)) throw NotASubmoduleError("subset is not a submodule");
    return is_pure_pair(m, full_set(m), sub);
}

}  // namespace purecomp
