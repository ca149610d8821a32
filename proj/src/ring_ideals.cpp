#include <algorithm>
#include <map>

#include "purecomp/ring.hpp"

namespace purecomp {

PrincipalIdeal make_ideal(RingPtr ring, const Value& raw) {
    return PrincipalIdeal{ring, ring->normalize_gen(raw)};
}

PrincipalIdeal whole_ring_ideal(RingPtr ring) {
    Value one = ring->one();
    return PrincipalIdeal{ring, ring->normalize_gen(one)};
}

PrincipalIdeal zero_ideal(RingPtr ring) { return PrincipalIdeal{ring, ring->zero()}; }

bool ideal_is_whole(const PrincipalIdeal& I) { return I.ring->is_unit(I.gen); }
bool ideal_is_zero(const PrincipalIdeal& I) { return I.ring->is_zero(I.gen); }

bool ideal_contains(const PrincipalIdeal& I, const Value& x) { return I.ring->divides(I.gen, x); }

bool ideal_subset(const PrincipalIdeal& I, const PrincipalIdeal& J) {
    return J.ring->divides(J.gen, I.gen);
}

PrincipalIdeal ideal_sum(const PrincipalIdeal& I, const PrincipalIdeal& J) {
    auto g = I.ring->gcd_bezout(I.gen, J.gen);
    return make_ideal(I.ring, g.g);
}

PrincipalIdeal ideal_intersect(const PrincipalIdeal& I, const PrincipalIdeal& J) {
    return make_ideal(I.ring, I.ring->intersect_gen(I.gen, J.gen));
}

Comparability ideal_compare(const PrincipalIdeal& I, const PrincipalIdeal& J) {
    if (I.gen == J.gen) return Comparability::Equal;
    bool ij = ideal_subset(I, J);
    bool ji = ideal_subset(J, I);
    if (ij) return Comparability::FirstInsideSecond;
    if (ji) return Comparability::SecondInsideFirst;
    if (ideal_is_whole(ideal_sum(I, J))) return Comparability::Comaximal;
    return Comparability::Incomparable;
}

std::string ideal_format(const PrincipalIdeal& I) { return "(" + I.ring->format(I.gen) + ")"; }

// ---- radicals and primes ----------------------------------------------------

namespace {

Bits table_principal_set(const FiniteTable& t, u32 a) {
    Bits s(t.n);
    for (u32 r = 0; r < t.n; ++r) s.set(t.mul[std::size_t(r) * t.n + a]);
    return s;
}

u32 table_least_generator_or_throw(const FiniteTable& t, const Bits& ideal) {
    for (u32 c = 0; c < t.n; ++c) {
        if (!ideal.test(c)) continue;
        if (table_principal_set(t, c) == ideal) return c;
    }
    throw UnsupportedRingError("ideal of the table ring is not principal");
}

}  // namespace

PrincipalIdeal radical(const PrincipalIdeal& I) {
    const Ring& R = *I.ring;
    const Value& g = I.gen;
    switch (R.kind()) {
        case RingKind::Integers: {
            if (g.num == 0) return I;
            i64 r = 1;
            for (auto& [p, e] : factorize64(g.num)) r = checked_mul(r, p);
            return PrincipalIdeal{I.ring, Value{.num = r}};
        }
        case RingKind::IntegersModN: {
            i64 eff = g.num == 0 ? R.mod_n() : g.num;
            i64 r = 1;
            for (auto& [p, e] : factorize64(eff)) r = checked_mul(r, p);
            return make_ideal(I.ring, Value{.num = mod_euclid(r, R.mod_n())});
        }
        case RingKind::PolynomialQuotient: {
            Value v;
            if (R.modulus().is_zero()) {
                if (g.poly.is_zero()) return I;
                v.poly = poly_squarefree_part(g.poly, R.char_p());
                return PrincipalIdeal{I.ring, v};
            }
            Poly eff = g.poly.is_zero() ? R.modulus() : g.poly;
            v.poly = poly_squarefree_part(eff, R.char_p());
            return make_ideal(I.ring, v);
        }
        case RingKind::Product: {
            Value v;
            for (std::size_t i = 0; i < R.factors().size(); ++i) {
                PrincipalIdeal ci{R.factors()[i], g.comps[i]};
                v.comps.push_back(radical(ci).gen);
            }
            return PrincipalIdeal{I.ring, v};
        }
        case RingKind::FiniteLocalTable: {
            const FiniteTable& t = R.table();
            Bits base = table_principal_set(t, u32(g.num));
            Bits rad(t.n);
            for (u32 r = 0; r < t.n; ++r) {
                u32 x = r;
                for (u32 k = 0; k < t.n; ++k) {
                    if (base.test(x)) {
                        rad.set(r);
                        break;
                    }
                    x = t.mul[std::size_t(x) * t.n + r];
                }
            }
            return make_ideal(I.ring, Value{.num = i64(table_least_generator_or_throw(t, rad))});
        }
    }
    return I;
}

namespace {

void sort_ideals(std::vector<PrincipalIdeal>& v) {
    std::sort(v.begin(), v.end(),
              [](const PrincipalIdeal& a, const PrincipalIdeal& b) { return value_less(a.gen, b.gen); });
}

}  // namespace

IdealSet minimal_primes_over(const PrincipalIdeal& I) {
    const Ring& R = *I.ring;
    const Value& g = I.gen;
    IdealSet out;
    if (ideal_is_whole(I)) return out;
    switch (R.kind()) {
        case RingKind::Integers: {
            if (g.num == 0) {
                out.ideals.push_back(zero_ideal(I.ring));
                return out;
            }
            for (auto& [p, e] : factorize64(g.num)) out.ideals.push_back({I.ring, Value{.num = p}});
            break;
        }
        case RingKind::IntegersModN: {
            i64 eff = g.num == 0 ? R.mod_n() : g.num;
            for (auto& [p, e] : factorize64(eff))
                out.ideals.push_back(make_ideal(I.ring, Value{.num = mod_euclid(p, R.mod_n())}));
            break;
        }
        case RingKind::PolynomialQuotient: {
            if (R.modulus().is_zero() && g.poly.is_zero()) {
                out.ideals.push_back(zero_ideal(I.ring));
                return out;
            }
            Poly eff = g.poly.is_zero() ? R.modulus() : g.poly;
            for (auto& [q, e] : poly_factor(eff, R.char_p())) {
                Value v;
                v.poly = q;
                out.ideals.push_back(make_ideal(I.ring, v));
            }
            break;
        }
        case RingKind::Product: {
            for (std::size_t j = 0; j < R.factors().size(); ++j) {
                PrincipalIdeal cj{R.factors()[j], g.comps[j]};
                for (const PrincipalIdeal& P : minimal_primes_over(cj).ideals) {
                    Value v;
                    for (std::size_t i = 0; i < R.factors().size(); ++i)
                        v.comps.push_back(i == j ? P.gen : R.factors()[i]->one());
                    out.ideals.push_back(PrincipalIdeal{I.ring, v});
                }
            }
            break;
        }
        case RingKind::FiniteLocalTable: {
            const FiniteTable& t = R.table();
            Bits base = table_principal_set(t, u32(g.num));
            std::vector<Bits> primes;
            for (const auto& ideal : enumerate_ideal_sets(I.ring)) {
                Bits s(t.n);
                for (u32 e : ideal) s.set(e);
                if (!base.is_subset_of(s)) continue;
                if (s.count() == t.n) continue;
                bool prime = true;
                for (u32 a = 0; a < t.n && prime; ++a) {
                    if (s.test(a)) continue;
                    for (u32 b = 0; b < t.n; ++b) {
                        if (s.test(b)) continue;
                        if (s.test(t.mul[std::size_t(a) * t.n + b])) {
                            prime = false;
                            break;
                        }
                    }
                }
                if (prime) primes.push_back(s);
            }
            for (std::size_t i = 0; i < primes.size(); ++i) {
                bool minimal = true;
                for (std::size_t j = 0; j < primes.size(); ++j)
                    if (i != j && primes[j].is_subset_of(primes[i]) && !(primes[j] == primes[i]))
                        minimal = false;
                if (minimal)
                    out.ideals.push_back(make_ideal(
                        I.ring, Value{.num = i64(table_least_generator_or_throw(t, primes[i]))}));
            }
            break;
        }
    }
    sort_ideals(out.ideals);
    return out;
}

u64 quotient_size(const PrincipalIdeal& I) {
    const Ring& R = *I.ring;
    const Value& g = I.gen;
    switch (R.kind()) {
        case RingKind::Integers: return g.num == 0 ? 0 : u64(abs64(g.num));
        case RingKind::IntegersModN: return g.num == 0 ? u64(R.mod_n()) : u64(g.num);
        case RingKind::PolynomialQuotient: {
            int d;
            if (R.modulus().is_zero()) {
                if (g.poly.is_zero()) return 0;
                d = g.poly.deg();
            } else {
                d = g.poly.is_zero() ? R.modulus().deg() : g.poly.deg();
            }
            u64 s = 1;
            for (int i = 0; i < d; ++i) s *= u64(R.char_p());
            return s;
        }
        case RingKind::Product: {
            u64 s = 1;
            for (std::size_t i = 0; i < R.factors().size(); ++i) {
                u64 c = quotient_size(PrincipalIdeal{R.factors()[i], g.comps[i]});
                if (c == 0) return 0;
                s *= c;
            }
            return s;
        }
        case RingKind::FiniteLocalTable: {
            Bits s = table_principal_set(R.table(), u32(g.num));
            return u64(R.table().n) / u64(s.count());
        }
    }
    return 0;
}

// ---- finite ring structure ---------------------------------------------------

namespace {

// Indexed view of a small finite ring for exhaustive structure computations.
struct IndexedRing {
    RingPtr ring;
    u32 n;
    std::vector<Value> elems;
    std::vector<u32> add, mul;

    explicit IndexedRing(const RingPtr& r) : ring(r) {
        u64 s = r->size();
        if (s > 1024) throw TooLargeError("finite-ring structure computations cap at 1024 elements");
        n = u32(s);
        elems.reserve(n);
        for (u32 i = 0; i < n; ++i) elems.push_back(r->element_at(i));
        add.assign(std::size_t(n) * n, 0);
        mul.assign(std::size_t(n) * n, 0);
        for (u32 i = 0; i < n; ++i)
            for (u32 j = 0; j < n; ++j) {
                add[std::size_t(i) * n + j] = u32(r->index_of(r->add(elems[i], elems[j])));
                mul[std::size_t(i) * n + j] = u32(r->index_of(r->mul(elems[i], elems[j])));
            }
    }

    u32 zero() const { return u32(ring->index_of(ring->zero())); }
    u32 one() const { return u32(ring->index_of(ring->one())); }
};

}  // namespace

std::vector<std::vector<u32>> enumerate_ideal_sets(const RingPtr& ring) {
    IndexedRing R(ring);
    std::vector<Bits> ideals;
    std::vector<Bits> work;
    Bits zero_ideal_set(R.n);
    zero_ideal_set.set(R.zero());
    ideals.push_back(zero_ideal_set);
    work.push_back(zero_ideal_set);
    auto known = [&](const Bits& s) {
        for (const Bits& i : ideals)
            if (i == s) return true;
        return false;
    };
    while (!work.empty()) {
        Bits I = work.back();
        work.pop_back();
        for (u32 a = 0; a < R.n; ++a) {
            if (I.test(a)) continue;
            Bits J(R.n);
            I.for_each([&](std::size_t i) {
                for (u32 r = 0; r < R.n; ++r) {
                    u32 ra = R.mul[std::size_t(r) * R.n + a];
                    J.set(R.add[i * R.n + ra]);
                }
            });
            if (!known(J)) {
                ideals.push_back(J);
                work.push_back(J);
                if (ideals.size() > 100000) throw TooLargeError("ideal lattice is too large");
            }
        }
    }
    std::vector<std::vector<u32>> out;
    out.reserve(ideals.size());
    for (const Bits& i : ideals) out.push_back(i.to_indices());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::vector<LocalFactor> decompose_finite_ring(const RingPtr& ring) {
    std::vector<LocalFactor> out;
    switch (ring->kind()) {
        case RingKind::Integers: throw NotFiniteError("cannot decompose an infinite ring");
        case RingKind::IntegersModN: {
            i64 n = ring->mod_n();
            for (auto& [p, e] : factorize64(n)) {
                i64 q = 1;
                for (int i = 0; i < e; ++i) q = checked_mul(q, p);
                i64 rest = n / q;
                Value idem;
                if (rest == 1) {
                    idem = ring->one();
                } else {
                    i64 x, y;
                    ext_gcd(q, rest, x, y);  // x*q + y*rest = 1
                    idem = Value{.num = mod_euclid(y * rest, n)};
                }
                out.push_back(LocalFactor{Ring::integers_mod(q), idem, u64(q)});
            }
            break;
        }
        case RingKind::PolynomialQuotient: {
            if (ring->modulus().is_zero()) throw NotFiniteError("cannot decompose an infinite ring");
            i64 p = ring->char_p();
            for (auto& [q, e] : poly_factor(ring->modulus(), p)) {
                Poly qe{{1}};
                for (int i = 0; i < e; ++i) qe = poly_mul(qe, q, p);
                Poly rest = poly_divmod(ring->modulus(), qe, p).first;
                Value idem;
                if (rest.deg() == 0) {
                    idem = ring->one();
                } else {
                    Poly x, y;
                    poly_ext_gcd(qe, rest, p, x, y);  // x*qe + y*rest = 1
                    idem.poly = poly_mod(poly_mul(y, rest, p), ring->modulus(), p);
                }
                RingPtr factor = qe.deg() >= 1 ? Ring::polynomial_quotient(p, qe)
                                               : Ring::integers_mod(p);
                u64 fs = 1;
                for (int i = 0; i < qe.deg(); ++i) fs *= u64(p);
                out.push_back(LocalFactor{factor, idem, fs});
            }
            break;
        }
        case RingKind::Product: {
            const auto& fs = ring->factors();
            for (std::size_t j = 0; j < fs.size(); ++j) {
                for (LocalFactor lf : decompose_finite_ring(fs[j])) {
                    Value idem;
                    for (std::size_t i = 0; i < fs.size(); ++i)
                        idem.comps.push_back(i == j ? lf.idempotent : fs[i]->zero());
                    out.push_back(LocalFactor{lf.factor, idem, lf.size});
                }
            }
            break;
        }
        case RingKind::FiniteLocalTable: {
            const FiniteTable& t = ring->table();
            std::vector<u32> idems;
            for (u32 e = 0; e < t.n; ++e)
                if (t.mul[std::size_t(e) * t.n + e] == e && e != t.zero) idems.push_back(e);
            std::vector<u32> primitive;
            for (u32 e : idems) {
                bool prim = true;
                for (u32 f : idems) {
                    if (f == e) continue;
                    if (t.mul[std::size_t(e) * t.n + f] == f) {
                        prim = false;
                        break;
                    }
                }
                if (prim) primitive.push_back(e);
            }
            for (u32 e : primitive) {
                std::vector<u32> members;
                Bits seen(t.n);
                for (u32 r = 0; r < t.n; ++r) {
                    u32 x = t.mul[std::size_t(r) * t.n + e];
                    if (!seen.test(x)) {
                        seen.set(x);
                        members.push_back(x);
                    }
                }
                std::sort(members.begin(), members.end());
                std::vector<u32> pos(t.n, 0);
                for (u32 i = 0; i < members.size(); ++i) pos[members[i]] = i;
                std::vector<std::vector<int>> addt(members.size()), mult(members.size());
                for (u32 i = 0; i < members.size(); ++i) {
                    addt[i].resize(members.size());
                    mult[i].resize(members.size());
                    for (u32 j = 0; j < members.size(); ++j) {
                        addt[i][j] = int(pos[t.add[std::size_t(members[i]) * t.n + members[j]]]);
                        mult[i][j] = int(pos[t.mul[std::size_t(members[i]) * t.n + members[j]]]);
                    }
                }
                out.push_back(
                    LocalFactor{Ring::local_table(addt, mult), Value{.num = i64(e)}, members.size()});
            }
            break;
        }
    }
    std::sort(out.begin(), out.end(), [](const LocalFactor& a, const LocalFactor& b) {
        if (a.size != b.size) return a.size > b.size;
        return value_less(a.idempotent, b.idempotent);
    });
    return out;
}

PcsDiagnostics pcs_diagnostics(const RingPtr& ring) {
    if (!ring->is_finite()) throw NotFiniteError("diagnostics require a finite ring");
    PcsDiagnostics out;
    out.arithmetic = true;
    for (const LocalFactor& lf : decompose_finite_ring(ring)) {
        PcsDiagnostics::Factor f;
        f.size = lf.size;
        auto ideals = enumerate_ideal_sets(lf.factor);
        u32 n = u32(lf.factor->size());
        std::vector<Bits> sets;
        for (const auto& v : ideals) {
            Bits s(n);
            for (u32 e : v) s.set(e);
            sets.push_back(s);
        }
        // Chain condition: sorted by size, each contained in the next.
        f.chain_ring = true;
        for (std::size_t i = 0; i + 1 < sets.size(); ++i)
            if (!sets[i].is_subset_of(sets[i + 1])) f.chain_ring = false;

        // Primes among the ideals of the local factor.
        IndexedRing R(lf.factor);
        std::vector<std::size_t> primes;
        for (std::size_t k = 0; k < sets.size(); ++k) {
            if (sets[k].count() == n) continue;
            bool prime = true;
            for (u32 a = 0; a < n && prime; ++a) {
                if (sets[k].test(a)) continue;
                for (u32 b = 0; b < n; ++b) {
                    if (sets[k].test(b)) continue;
                    if (sets[k].test(R.mul[std::size_t(a) * n + b])) {
                        prime = false;
                        break;
                    }
                }
            }
            if (prime) primes.push_back(k);
        }
        std::vector<std::size_t> minimal;
        for (std::size_t i : primes) {
            bool is_min = true;
            for (std::size_t j : primes)
                if (j != i && sets[j].is_subset_of(sets[i]) && !(sets[j] == sets[i])) is_min = false;
            if (is_min) minimal.push_back(i);
        }
        f.minimal_prime_count = int(minimal.size());
        f.minimal_prime_uniserial = true;
        for (std::size_t m : minimal) {
            std::vector<Bits> sub;
            for (const Bits& s : sets)
                if (s.is_subset_of(sets[m])) sub.push_back(s);
            for (std::size_t i = 0; i < sub.size(); ++i)
                for (std::size_t j = 0; j < i; ++j)
                    if (!sub[i].is_subset_of(sub[j]) && !sub[j].is_subset_of(sub[i]))
                        f.minimal_prime_uniserial = false;
        }
        if (!f.chain_ring) out.arithmetic = false;
        out.factors.push_back(f);
    }
    out.is_pcs_candidate = out.arithmetic;
    return out;
}

}  // namespace purecomp
