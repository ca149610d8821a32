#include <algorithm>
#include <cassert>

#include "purecomp/ring.hpp"

namespace purecomp {

namespace {

// Principal ideal of a table ring as an element bitset.
Bits table_principal(const FiniteTable& t, u32 a) {
    Bits s(t.n);
    for (u32 r = 0; r < t.n; ++r) s.set(t.mul[std::size_t(r) * t.n + a]);
    return s;
}

u32 table_least_generator(const FiniteTable& t, const Bits& ideal) {
    for (u32 c = 0; c < t.n; ++c) {
        if (!ideal.test(c)) continue;
        if (table_principal(t, c) == ideal) return c;
    }
    throw UnsupportedRingError("ideal of the table ring is not principal");
}

}  // namespace

Ring::Gcd Ring::gcd_bezout(const Value& a, const Value& b) const {
    switch (kind_) {
        case RingKind::Integers: {
            if (a.num == 0 && b.num == 0) return Gcd{zero(), zero(), zero()};
            i64 x, y;
            i64 g = ext_gcd(a.num, b.num, x, y);
            return Gcd{Value{.num = g}, Value{.num = x}, Value{.num = y}};
        }
        case RingKind::IntegersModN: {
            i64 u0, v0;
            i64 g0 = ext_gcd(a.num, b.num, u0, v0);
            if (g0 == 0) return Gcd{zero(), zero(), zero()};
            i64 x, y;
            i64 gn = ext_gcd(g0, n_, x, y);
            i64 xm = mod_euclid(x, n_);
            return Gcd{Value{.num = mod_euclid(gn, n_)},
                       Value{.num = mod_euclid(xm * mod_euclid(u0, n_), n_)},
                       Value{.num = mod_euclid(xm * mod_euclid(v0, n_), n_)}};
        }
        case RingKind::PolynomialQuotient: {
            if (a.poly.is_zero() && b.poly.is_zero()) return Gcd{zero(), zero(), zero()};
            Poly u0, v0;
            Poly g0 = poly_ext_gcd(a.poly, b.poly, p_, u0, v0);
            if (modpoly_.is_zero()) {
                Value g, u, v;
                g.poly = g0;
                u.poly = u0;
                v.poly = v0;
                return Gcd{g, u, v};
            }
            if (g0.is_zero()) return Gcd{zero(), zero(), zero()};
            Poly x, y;
            Poly gn = poly_ext_gcd(g0, modpoly_, p_, x, y);
            Value g, u, v;
            g.poly = poly_mod(gn, modpoly_, p_);
            u.poly = poly_mod(poly_mul(x, u0, p_), modpoly_, p_);
            v.poly = poly_mod(poly_mul(x, v0, p_), modpoly_, p_);
            return Gcd{g, u, v};
        }
        case RingKind::Product: {
            Gcd out{Value{}, Value{}, Value{}};
            for (std::size_t i = 0; i < factors_.size(); ++i) {
                Gcd c = factors_[i]->gcd_bezout(a.comps[i], b.comps[i]);
                out.g.comps.push_back(c.g);
                out.u.comps.push_back(c.u);
                out.v.comps.push_back(c.v);
            }
            return out;
        }
        case RingKind::FiniteLocalTable: {
            if (!table_.is_bezout)
                throw UnsupportedRingError("table ring is not Bezout; ideal arithmetic unavailable");
            const u32 n = table_.n;
            Bits span(n);
            for (u32 x = 0; x < n; ++x) {
                u32 xa = table_.mul[std::size_t(x) * n + u32(a.num)];
                for (u32 y = 0; y < n; ++y) {
                    u32 yb = table_.mul[std::size_t(y) * n + u32(b.num)];
                    span.set(table_.add[std::size_t(xa) * n + yb]);
                }
            }
            u32 g = table_least_generator(table_, span);
            for (u32 x = 0; x < n; ++x) {
                u32 xa = table_.mul[std::size_t(x) * n + u32(a.num)];
                for (u32 y = 0; y < n; ++y) {
                    u32 yb = table_.mul[std::size_t(y) * n + u32(b.num)];
                    if (table_.add[std::size_t(xa) * n + yb] == g)
                        return Gcd{Value{.num = i64(g)}, Value{.num = i64(x)}, Value{.num = i64(y)}};
                }
            }
            throw SearchExhaustedError("no Bezout witness found in the table ring");
        }
    }
    return Gcd{};
}

Value Ring::normalize_gen(const Value& a) const {
    switch (kind_) {
        case RingKind::Integers: return Value{.num = abs64(a.num)};
        case RingKind::IntegersModN: return Value{.num = mod_euclid(gcd64(a.num, n_), n_)};
        case RingKind::PolynomialQuotient: {
            Value v;
            if (modpoly_.is_zero()) {
                v.poly = poly_monic(a.poly, p_);
                return v;
            }
            if (a.poly.is_zero()) return v;
            v.poly = poly_mod(poly_gcd(a.poly, modpoly_, p_), modpoly_, p_);
            return v;
        }
        case RingKind::Product: {
            Value v;
            for (std::size_t i = 0; i < factors_.size(); ++i)
                v.comps.push_back(factors_[i]->normalize_gen(a.comps[i]));
            return v;
        }
        case RingKind::FiniteLocalTable: {
            Bits ra = table_principal(table_, u32(a.num));
            Bits whole(table_.n);
            for (u32 i = 0; i < table_.n; ++i) whole.set(i);
            if (ra == whole) return one();
            for (u32 c = 0; c < table_.n; ++c)
                if (table_principal(table_, c) == ra) return Value{.num = i64(c)};
            return a;
        }
    }
    return a;
}

bool Ring::divides(const Value& b, const Value& a) const {
    switch (kind_) {
        case RingKind::Integers: return b.num == 0 ? a.num == 0 : a.num % b.num == 0;
        case RingKind::IntegersModN: {
            i64 g = gcd64(b.num, n_);
            if (g == 0) g = n_;
            return a.num % g == 0;
        }
        case RingKind::PolynomialQuotient: {
            if (modpoly_.is_zero())
                return b.poly.is_zero() ? a.poly.is_zero() : poly_mod(a.poly, b.poly, p_).is_zero();
            Poly g = b.poly.is_zero() ? modpoly_ : poly_gcd(b.poly, modpoly_, p_);
            return poly_mod(a.poly, g, p_).is_zero();
        }
        case RingKind::Product: {
            for (std::size_t i = 0; i < factors_.size(); ++i)
                if (!factors_[i]->divides(b.comps[i], a.comps[i])) return false;
            return true;
        }
        case RingKind::FiniteLocalTable: {
            for (u32 r = 0; r < table_.n; ++r)
                if (table_.mul[std::size_t(r) * table_.n + u32(b.num)] == u32(a.num)) return true;
            return false;
        }
    }
    return false;
}

Value Ring::divide_exact(const Value& a, const Value& b) const {
    switch (kind_) {
        case RingKind::Integers: {
            if (b.num == 0) return zero();
            return Value{.num = a.num / b.num};
        }
        case RingKind::IntegersModN: {
            if (b.num == 0) return zero();
            i64 g = gcd64(b.num, n_);
            i64 bp = b.num / g, ap = a.num / g, m2 = n_ / g;
            if (m2 == 1) return zero();
            i64 x, y;
            ext_gcd(mod_euclid(bp, m2), m2, x, y);
            return Value{.num = mod_euclid(mod_euclid(ap, m2) * mod_euclid(x, m2), m2)};
        }
        case RingKind::PolynomialQuotient: {
            Value v;
            if (b.poly.is_zero()) return v;
            if (modpoly_.is_zero()) {
                v.poly = poly_divmod(a.poly, b.poly, p_).first;
                return v;
            }
            Poly g = poly_gcd(b.poly, modpoly_, p_);
            Poly bp = poly_divmod(b.poly, g, p_).first;
            Poly ap = poly_divmod(a.poly, g, p_).first;
            Poly m2 = poly_divmod(modpoly_, g, p_).first;
            if (m2.deg() == 0) return v;
            Poly x, y;
            poly_ext_gcd(poly_mod(bp, m2, p_), m2, p_, x, y);
            v.poly = poly_mod(poly_mul(poly_mod(ap, m2, p_), x, p_), modpoly_, p_);
            return v;
        }
        case RingKind::Product: {
            Value v;
            for (std::size_t i = 0; i < factors_.size(); ++i)
                v.comps.push_back(factors_[i]->divide_exact(a.comps[i], b.comps[i]));
            return v;
        }
        case RingKind::FiniteLocalTable: {
            for (u32 q = 0; q < table_.n; ++q)
                if (table_.mul[std::size_t(q) * table_.n + u32(b.num)] == u32(a.num))
                    return Value{.num = i64(q)};
            throw SearchExhaustedError("divide_exact called on a non-divisible pair");
        }
    }
    return Value{};
}

Value Ring::associate_unit(const Value& a, const Value& target) const {
    switch (kind_) {
        case RingKind::Integers: {
            if (a.num == 0) return one();
            return Value{.num = a.num == target.num ? 1 : -1};
        }
        case RingKind::IntegersModN: {
            if (a.num == 0) return one();
            i64 g = gcd64(a.num, n_);
            i64 step = n_ / g;
            i64 q0 = divide_exact(target, a).num;
            for (i64 t = 0;; ++t) {
                i64 w = mod_euclid(q0 + t * step, n_);
                if (gcd64(w, n_) == 1) return Value{.num = w};
                if (t > g + 1) break;
            }
            throw SearchExhaustedError("no unit associate found");
        }
        case RingKind::PolynomialQuotient: {
            Value v;
            if (modpoly_.is_zero()) {
                if (a.poly.is_zero()) return one();
                v.poly = Poly{{mod_euclid(target.poly.lead() * inv_mod(a.poly.lead(), p_), p_)}};
                return v;
            }
            if (a.poly.is_zero()) return one();
            Poly g = poly_gcd(a.poly, modpoly_, p_);
            Poly step = poly_divmod(modpoly_, g, p_).first;
            Poly q0 = divide_exact(target, a).poly;
            u64 combos = 1;
            for (int i = 0; i < g.deg(); ++i) combos *= u64(p_);
            for (u64 idx = 0; idx < std::max<u64>(combos, 1); ++idx) {
                Poly t;
                u64 rest = idx;
                for (int i = 0; i < g.deg(); ++i) {
                    t.c.push_back(i64(rest % u64(p_)));
                    rest /= u64(p_);
                }
                t = poly_trim(std::move(t));
                Poly w = poly_mod(poly_add(q0, poly_mul(t, step, p_), p_), modpoly_, p_);
                Value wv;
                wv.poly = w;
                if (is_unit(wv)) return wv;
            }
            throw SearchExhaustedError("no unit associate found");
        }
        case RingKind::Product: {
            Value v;
            for (std::size_t i = 0; i < factors_.size(); ++i)
                v.comps.push_back(factors_[i]->associate_unit(a.comps[i], target.comps[i]));
            return v;
        }
        case RingKind::FiniteLocalTable: {
            for (u32 w = 0; w < table_.n; ++w) {
                if (!table_.unit[w]) continue;
                if (table_.mul[std::size_t(w) * table_.n + u32(a.num)] == u32(target.num))
                    return Value{.num = i64(w)};
            }
            throw SearchExhaustedError("no unit associate found");
        }
    }
    return Value{};
}

Value Ring::intersect_gen(const Value& a, const Value& b) const {
    switch (kind_) {
        case RingKind::Integers: return Value{.num = lcm64(a.num, b.num)};
        case RingKind::IntegersModN: {
            i64 ga = gcd64(a.num, n_), gb = gcd64(b.num, n_);
            if (ga == 0) ga = n_;
            if (gb == 0) gb = n_;
            return Value{.num = mod_euclid(lcm64(ga, gb), n_)};
        }
        case RingKind::PolynomialQuotient: {
            Value v;
            if (modpoly_.is_zero()) {
                if (a.poly.is_zero() || b.poly.is_zero()) return v;
                Poly g = poly_gcd(a.poly, b.poly, p_);
                v.poly = poly_monic(poly_divmod(poly_mul(a.poly, b.poly, p_), g, p_).first, p_);
                return v;
            }
            Poly ga = a.poly.is_zero() ? modpoly_ : poly_gcd(a.poly, modpoly_, p_);
            Poly gb = b.poly.is_zero() ? modpoly_ : poly_gcd(b.poly, modpoly_, p_);
            Poly g = poly_gcd(ga, gb, p_);
            Poly l = poly_monic(poly_divmod(poly_mul(ga, gb, p_), g, p_).first, p_);
            v.poly = poly_mod(l, modpoly_, p_);
            return v;
        }
        case RingKind::Product: {
            Value v;
            for (std::size_t i = 0; i < factors_.size(); ++i)
                v.comps.push_back(factors_[i]->intersect_gen(a.comps[i], b.comps[i]));
            return v;
        }
        case RingKind::FiniteLocalTable: {
            if (!table_.is_bezout)
                throw UnsupportedRingError("table ring is not Bezout; ideal arithmetic unavailable");
            Bits ra = table_principal(table_, u32(a.num));
            Bits rb = table_principal(table_, u32(b.num));
            ra &= rb;
            return Value{.num = i64(table_least_generator(table_, ra))};
        }
    }
    return Value{};
}

}  // namespace purecomp

namespace purecomp {

Value Ring::reduce_mod(const Value& v, const Value& d) const {
    switch (kind_) {
        case RingKind::Integers: {
            if (d.num == 0) return v;
            return Value{.num = mod_euclid(v.num, abs64(d.num))};
        }
        case RingKind::IntegersModN: {
            i64 g = gcd64(d.num, n_);
            if (g == 0 || g == n_) return v;
            return Value{.num = mod_euclid(v.num, g)};
        }
        case RingKind::PolynomialQuotient: {
            Value r;
            if (modpoly_.is_zero()) {
                if (d.poly.is_zero()) return v;
                r.poly = poly_mod(v.poly, d.poly, p_);
                return r;
            }
            if (d.poly.is_zero()) return v;
            Poly g = poly_gcd(d.poly, modpoly_, p_);
            r.poly = poly_mod(v.poly, g, p_);
            return r;
        }
        case RingKind::Product: {
            Value r;
            for (std::size_t i = 0; i < factors_.size(); ++i)
                r.comps.push_back(factors_[i]->reduce_mod(v.comps[i], d.comps[i]));
            return r;
        }
        case RingKind::FiniteLocalTable: {
            // Least element of the coset v + Rd.
            u32 best = u32(v.num);
            for (u32 r = 0; r < table_.n; ++r) {
                u32 rd = table_.mul[std::size_t(r) * table_.n + u32(d.num)];
                u32 c = table_.add[std::size_t(v.num) * table_.n + rd];
                if (c < best) best = c;
            }
            return Value{.num = i64(best)};
        }
    }
    return v;
}

std::vector<Value> residues_mod(const RingPtr& ring, const Value& d) {
    std::vector<Value> out;
    switch (ring->kind()) {
        case RingKind::Integers: {
            if (d.num == 0) throw NotFiniteError("quotient by the zero ideal of Z is infinite");
            for (i64 i = 0; i < abs64(d.num); ++i) out.push_back(Value{.num = i});
            return out;
        }
        case RingKind::IntegersModN: {
            i64 g = gcd64(d.num, ring->mod_n());
            if (g == 0) g = ring->mod_n();
            for (i64 i = 0; i < g; ++i) out.push_back(Value{.num = i});
            return out;
        }
        case RingKind::PolynomialQuotient: {
            i64 p = ring->char_p();
            Poly g;
            if (ring->modulus().is_zero()) {
                if (d.poly.is_zero())
                    throw NotFiniteError("quotient by the zero ideal of F_p[t] is infinite");
                g = poly_monic(d.poly, p);
            } else {
                g = d.poly.is_zero() ? ring->modulus() : poly_gcd(d.poly, ring->modulus(), p);
            }
            if (g.deg() == 0) return {ring->zero()};
            u64 count = 1;
            for (int i = 0; i < g.deg(); ++i) {
                count *= u64(p);
                if (count > (u64(1) << 22)) throw TooLargeError("residue enumeration too large");
            }
            for (u64 idx = 0; idx < count; ++idx) {
                Value v;
                u64 rest = idx;
                for (int i = 0; i < g.deg(); ++i) {
                    v.poly.c.push_back(i64(rest % u64(p)));
                    rest /= u64(p);
                }
                v.poly = poly_trim(std::move(v.poly));
                out.push_back(std::move(v));
            }
            return out;
        }
        case RingKind::Product: {
            const auto& fs = ring->factors();
            std::vector<std::vector<Value>> comps;
            u64 total = 1;
            for (std::size_t i = 0; i < fs.size(); ++i) {
                comps.push_back(residues_mod(fs[i], d.comps[i]));
                total *= comps.back().size();
                if (total > (u64(1) << 22)) throw TooLargeError("residue enumeration too large");
            }
            for (u64 idx = 0; idx < total; ++idx) {
                Value v;
                u64 rest = idx;
                for (std::size_t i = 0; i < fs.size(); ++i) {
                    v.comps.push_back(comps[i][rest % comps[i].size()]);
                    rest /= comps[i].size();
                }
                out.push_back(std::move(v));
            }
            return out;
        }
        case RingKind::FiniteLocalTable: {
            const FiniteTable& t = ring->table();
            std::vector<bool> seen(t.n, false);
            for (u32 x = 0; x < t.n; ++x) {
                if (seen[x]) continue;
                out.push_back(Value{.num = i64(x)});
                for (u32 r = 0; r < t.n; ++r) {
                    u32 rd = t.mul[std::size_t(r) * t.n + u32(d.num)];
                    seen[t.add[std::size_t(x) * t.n + rd]] = true;
                }
            }
            return out;
        }
    }
    return out;
}

}  // namespace purecomp
