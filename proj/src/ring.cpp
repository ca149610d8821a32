#include "purecomp/ring.hpp"

#include <algorithm>
#include <cassert>

namespace purecomp {

namespace {

constexpr i64 kMaxModulus = i64(1) << 31;
constexpr u32 kMaxTableSize = 256;

bool is_prime64(i64 p) {
    if (p < 2) return false;
    for (i64 d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

// ---- constructors ---------------------------------------------------------

RingPtr Ring::integers() {
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = RingKind::Integers;
    return r;
}

RingPtr Ring::integers_mod(i64 n) {
    if (n < 2) throw UnsupportedRingError("Z/n requires n >= 2");
    if (n > kMaxModulus) throw TooLargeError("modulus exceeds the supported range");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = RingKind::IntegersModN;
    r->n_ = n;
    return r;
}

RingPtr Ring::polynomial_ring(i64 p) {
    if (!is_prime64(p)) throw UnsupportedRingError("polynomial coefficients require a prime field");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = RingKind::PolynomialQuotient;
    r->p_ = p;
    return r;
}

RingPtr Ring::polynomial_quotient(i64 p, Poly modulus) {
    if (!is_prime64(p)) throw UnsupportedRingError("polynomial coefficients require a prime field");
    modulus = poly_reduce_coeffs(modulus, p);
    if (modulus.deg() < 1 || modulus.lead() != 1)
        throw UnsupportedRingError("quotient modulus must be monic of degree >= 1");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = RingKind::PolynomialQuotient;
    r->p_ = p;
    r->modpoly_ = std::move(modulus);
    return r;
}

RingPtr Ring::product(std::vector<RingPtr> factors) {
    if (factors.size() < 2) throw UnsupportedRingError("product rings require at least 2 factors");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = RingKind::Product;
    r->factors_ = std::move(factors);
    return r;
}

RingPtr Ring::local_table(const std::vector<std::vector<int>>& add,
                          const std::vector<std::vector<int>>& mul) {
    const std::size_t n = add.size();
    if (n == 0 || mul.size() != n) throw UnsupportedRingError("table ring requires square tables");
    if (n > kMaxTableSize) throw TooLargeError("table ring exceeds the 256-element cap");

    FiniteTable t;
    t.n = u32(n);
    t.add.assign(n * n, 0);
    t.mul.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (add[i].size() != n || mul[i].size() != n)
            throw UnsupportedRingError("table ring requires square tables");
        for (std::size_t j = 0; j < n; ++j) {
            int a = add[i][j], m = mul[i][j];
            if (a < 0 || std::size_t(a) >= n || m < 0 || std::size_t(m) >= n)
                throw UnsupportedRingError("table entry out of range");
            t.add[i * n + j] = u32(a);
            t.mul[i * n + j] = u32(m);
        }
    }

    auto A = [&](u32 x, u32 y) { return t.add[std::size_t(x) * n + y]; };
    auto M = [&](u32 x, u32 y) { return t.mul[std::size_t(x) * n + y]; };

    // Commutativity.
    for (u32 i = 0; i < n; ++i)
        for (u32 j = 0; j < i; ++j)
            if (A(i, j) != A(j, i) || M(i, j) != M(j, i))
                throw UnsupportedRingError("table ring is not commutative");

    // Additive identity and inverses.
    bool found_zero = false;
    for (u32 z = 0; z < n; ++z) {
        bool ok = true;
        for (u32 i = 0; i < n && ok; ++i) ok = A(z, i) == i;
        if (ok) {
            t.zero = z;
            found_zero = true;
            break;
        }
    }
    if (!found_zero) throw UnsupportedRingError("table ring has no additive identity");
    t.neg.assign(n, 0);
    for (u32 i = 0; i < n; ++i) {
        bool ok = false;
        for (u32 j = 0; j < n; ++j)
            if (A(i, j) == t.zero) {
                t.neg[i] = j;
                ok = true;
                break;
            }
        if (!ok) throw UnsupportedRingError("table ring lacks additive inverses");
    }

    // Multiplicative identity.
    bool found_one = false;
    for (u32 e = 0; e < n; ++e) {
        bool ok = true;
        for (u32 i = 0; i < n && ok; ++i) ok = M(e, i) == i;
        if (ok) {
            t.one = e;
            found_one = true;
            break;
        }
    }
    if (!found_one) throw UnsupportedRingError("table ring has no multiplicative identity");

    // Associativity and distributivity, by exhaustion.
    for (u32 a = 0; a < n; ++a)
        for (u32 b = 0; b < n; ++b)
            for (u32 c = 0; c < n; ++c) {
                if (A(A(a, b), c) != A(a, A(b, c)))
                    throw UnsupportedRingError("table addition is not associative");
                if (M(M(a, b), c) != M(a, M(b, c)))
                    throw UnsupportedRingError("table multiplication is not associative");
                if (M(a, A(b, c)) != A(M(a, b), M(a, c)))
                    throw UnsupportedRingError("table ring is not distributive");
            }

    // Units, locality, and the Bezout flag.
    t.unit.assign(n, false);
    for (u32 a = 0; a < n; ++a)
        for (u32 b = 0; b < n; ++b)
            if (M(a, b) == t.one) {
                t.unit[a] = true;
                break;
            }
    t.is_local = true;
    for (u32 a = 0; a < n && t.is_local; ++a)
        for (u32 b = 0; b < n; ++b)
            if (!t.unit[a] && !t.unit[b] && t.unit[A(a, b)]) {
                t.is_local = false;
                break;
            }

    // Distinct principal ideals.
    std::vector<Bits> principal;
    std::vector<u32> principal_gen;
    for (u32 a = 0; a < n; ++a) {
        Bits ra(n);
        for (u32 r = 0; r < n; ++r) ra.set(M(r, a));
        bool seen = false;
        for (const Bits& p : principal)
            if (p == ra) {
                seen = true;
                break;
            }
        if (!seen) {
            principal.push_back(ra);
            principal_gen.push_back(a);
        }
    }
    t.is_bezout = true;
    for (std::size_t i = 0; i < principal.size() && t.is_bezout; ++i) {
        for (std::size_t j = 0; j <= i && t.is_bezout; ++j) {
            Bits sum(n);
            principal[i].for_each([&](std::size_t x) {
                principal[j].for_each([&](std::size_t y) { sum.set(A(u32(x), u32(y))); });
            });
            bool ok = false;
            for (const Bits& p : principal)
                if (p == sum) {
                    ok = true;
                    break;
                }
            if (!ok) t.is_bezout = false;
        }
    }

    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = RingKind::FiniteLocalTable;
    r->table_ = std::move(t);
    return r;
}

// ---- basics ----------------------------------------------------------------

bool Ring::is_finite() const {
    switch (kind_) {
        case RingKind::Integers: return false;
        case RingKind::IntegersModN: return true;
        case RingKind::PolynomialQuotient: return !modpoly_.is_zero();
        case RingKind::Product: {
            for (const auto& f : factors_)
                if (!f->is_finite()) return false;
            return true;
        }
        case RingKind::FiniteLocalTable: return true;
    }
    return false;
}

u64 Ring::size() const {
    switch (kind_) {
        case RingKind::Integers: throw NotFiniteError("the ring of integers is infinite");
        case RingKind::IntegersModN: return u64(n_);
        case RingKind::PolynomialQuotient: {
            if (modpoly_.is_zero()) throw NotFiniteError("the full polynomial ring is infinite");
            u64 s = 1;
            for (int i = 0; i < modpoly_.deg(); ++i) {
                s *= u64(p_);
                if (s > (u64(1) << 40)) throw TooLargeError("quotient ring is too large to enumerate");
            }
            return s;
        }
        case RingKind::Product: {
            u64 s = 1;
            for (const auto& f : factors_) {
                s *= f->size();
                if (s > (u64(1) << 40)) throw TooLargeError("product ring is too large to enumerate");
            }
            return s;
        }
        case RingKind::FiniteLocalTable: return table_.n;
    }
    return 0;
}

bool Ring::is_bezout() const {
    switch (kind_) {
        case RingKind::FiniteLocalTable: return table_.is_bezout;
        case RingKind::Product: {
            for (const auto& f : factors_)
                if (!f->is_bezout()) return false;
            return true;
        }
        default: return true;
    }
}

bool Ring::is_edr() const {
    switch (kind_) {
        case RingKind::Integers:
        case RingKind::IntegersModN:
        case RingKind::PolynomialQuotient: return true;
        case RingKind::Product: {
            for (const auto& f : factors_)
                if (!f->is_edr()) return false;
            return true;
        }
        case RingKind::FiniteLocalTable: return false;
    }
    return false;
}

bool Ring::same_ring(const Ring& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
        case RingKind::Integers: return true;
        case RingKind::IntegersModN: return n_ == o.n_;
        case RingKind::PolynomialQuotient: return p_ == o.p_ && modpoly_ == o.modpoly_;
        case RingKind::Product: {
            if (factors_.size() != o.factors_.size()) return false;
            for (std::size_t i = 0; i < factors_.size(); ++i)
                if (!factors_[i]->same_ring(*o.factors_[i])) return false;
            return true;
        }
        case RingKind::FiniteLocalTable:
            return table_.n == o.table_.n && table_.add == o.table_.add && table_.mul == o.table_.mul;
    }
    return false;
}

Value Ring::zero() const {
    switch (kind_) {
        case RingKind::Integers:
        case RingKind::IntegersModN: return Value{};
        case RingKind::PolynomialQuotient: return Value{};
        case RingKind::Product: {
            Value v;
            for (const auto& f : factors_) v.comps.push_back(f->zero());
            return v;
        }
        case RingKind::FiniteLocalTable: return Value{.num = i64(table_.zero)};
    }
    return Value{};
}

Value Ring::one() const {
    switch (kind_) {
        case RingKind::Integers: return Value{.num = 1};
        case RingKind::IntegersModN: return Value{.num = n_ == 1 ? 0 : 1};
        case RingKind::PolynomialQuotient: {
            Value v;
            v.poly = Poly{{1}};
            return v;
        }
        case RingKind::Product: {
            Value v;
            for (const auto& f : factors_) v.comps.push_back(f->one());
            return v;
        }
        case RingKind::FiniteLocalTable: return Value{.num = i64(table_.one)};
    }
    return Value{};
}

Value Ring::from_int(i64 k) const {
    switch (kind_) {
        case RingKind::Integers: return Value{.num = k};
        case RingKind::IntegersModN: return Value{.num = mod_euclid(k, n_)};
        case RingKind::PolynomialQuotient: {
            Value v;
            v.poly = Poly::constant(k, p_);
            return v;
        }
        case RingKind::Product: {
            Value v;
            for (const auto& f : factors_) v.comps.push_back(f->from_int(k));
            return v;
        }
        case RingKind::FiniteLocalTable: {
            k = mod_euclid(k, i64(table_.n) + 1);  // reduce the iteration count only
            Value v{.num = i64(table_.zero)};
            for (i64 i = 0; i < k; ++i) v = add(v, one());
            return v;
        }
    }
    return Value{};
}

Value Ring::add(const Value& a, const Value& b) const {
    switch (kind_) {
        case RingKind::Integers: return Value{.num = checked_add(a.num, b.num)};
        case RingKind::IntegersModN: return Value{.num = mod_euclid(a.num + b.num, n_)};
        case RingKind::PolynomialQuotient: {
            Value v;
            v.poly = poly_add(a.poly, b.poly, p_);
            return v;
        }
        case RingKind::Product: {
            Value v;
            v.comps.reserve(factors_.size());
            for (std::size_t i = 0; i < factors_.size(); ++i)
                v.comps.push_back(factors_[i]->add(a.comps[i], b.comps[i]));
            return v;
        }
        case RingKind::FiniteLocalTable:
            return Value{.num = i64(table_.add[std::size_t(a.num) * table_.n + std::size_t(b.num)])};
    }
    return Value{};
}

Value Ring::neg(const Value& a) const {
    switch (kind_) {
        case RingKind::Integers: return Value{.num = checked_neg(a.num)};
        case RingKind::IntegersModN: return Value{.num = mod_euclid(-a.num, n_)};
        case RingKind::PolynomialQuotient: {
            Value v;
            v.poly = poly_neg(a.poly, p_);
            return v;
        }
        case RingKind::Product: {
            Value v;
            v.comps.reserve(factors_.size());
            for (std::size_t i = 0; i < factors_.size(); ++i)
                v.comps.push_back(factors_[i]->neg(a.comps[i]));
            return v;
        }
        case RingKind::FiniteLocalTable: return Value{.num = i64(table_.neg[std::size_t(a.num)])};
    }
    return Value{};
}

Value Ring::sub(const Value& a, const Value& b) const { return add(a, neg(b)); }

Value Ring::mul(const Value& a, const Value& b) const {
    switch (kind_) {
        case RingKind::Integers: return Value{.num = checked_mul(a.num, b.num)};
        case RingKind::IntegersModN: return Value{.num = mod_euclid(a.num * b.num, n_)};
        case RingKind::PolynomialQuotient: {
            Value v;
            v.poly = poly_mul(a.poly, b.poly, p_);
            if (!modpoly_.is_zero()) v.poly = poly_mod(v.poly, modpoly_, p_);
            return v;
        }
        case RingKind::Product: {
            Value v;
            v.comps.reserve(factors_.size());
            for (std::size_t i = 0; i < factors_.size(); ++i)
                v.comps.push_back(factors_[i]->mul(a.comps[i], b.comps[i]));
            return v;
        }
        case RingKind::FiniteLocalTable:
            return Value{.num = i64(table_.mul[std::size_t(a.num) * table_.n + std::size_t(b.num)])};
    }
    return Value{};
}

bool Ring::is_zero(const Value& a) const { return a == zero(); }
bool Ring::is_one(const Value& a) const { return a == one(); }

bool Ring::is_unit(const Value& a) const {
    switch (kind_) {
        case RingKind::Integers: return a.num == 1 || a.num == -1;
        case RingKind::IntegersModN: return gcd64(a.num, n_) == 1;
        case RingKind::PolynomialQuotient: {
            if (modpoly_.is_zero()) return a.poly.deg() == 0;
            return poly_gcd(a.poly, modpoly_, p_) == Poly{{1}};
        }
        case RingKind::Product: {
            for (std::size_t i = 0; i < factors_.size(); ++i)
                if (!factors_[i]->is_unit(a.comps[i])) return false;
            return true;
        }
        case RingKind::FiniteLocalTable: return table_.unit[std::size_t(a.num)];
    }
    return false;
}

Value Ring::inv_unit(const Value& a) const {
    switch (kind_) {
        case RingKind::Integers: return a;  // 1 and -1 are self-inverse
        case RingKind::IntegersModN: {
            i64 x, y;
            if (ext_gcd(a.num, n_, x, y) != 1) throw UnsupportedRingError("element is not a unit");
            return Value{.num = mod_euclid(x, n_)};
        }
        case RingKind::PolynomialQuotient: {
            if (modpoly_.is_zero()) {
                if (a.poly.deg() != 0) throw UnsupportedRingError("element is not a unit");
                Value v;
                v.poly = Poly{{inv_mod(a.poly.c[0], p_)}};
                return v;
            }
            Poly u, w;
            if (!(poly_ext_gcd(a.poly, modpoly_, p_, u, w) == Poly{{1}}))
                throw UnsupportedRingError("element is not a unit");
            Value v;
            v.poly = poly_mod(u, modpoly_, p_);
            return v;
        }
        case RingKind::Product: {
            Value v;
            for (std::size_t i = 0; i < factors_.size(); ++i)
                v.comps.push_back(factors_[i]->inv_unit(a.comps[i]));
            return v;
        }
        case RingKind::FiniteLocalTable: {
            for (u32 b = 0; b < table_.n; ++b)
                if (table_.mul[std::size_t(a.num) * table_.n + b] == table_.one)
                    return Value{.num = i64(b)};
            throw UnsupportedRingError("element is not a unit");
        }
    }
    return Value{};
}

Value Ring::element_at(u64 idx) const {
    switch (kind_) {
        case RingKind::IntegersModN: return Value{.num = i64(idx)};
        case RingKind::PolynomialQuotient: {
            if (modpoly_.is_zero()) throw NotFiniteError("cannot enumerate an infinite ring");
            Value v;
            v.poly.c.assign(std::size_t(modpoly_.deg()), 0);
            for (int i = 0; i < modpoly_.deg(); ++i) {
                v.poly.c[std::size_t(i)] = i64(idx % u64(p_));
                idx /= u64(p_);
            }
            v.poly = poly_trim(std::move(v.poly));
            return v;
        }
        case RingKind::Product: {
            Value v;
            for (const auto& f : factors_) {
                u64 s = f->size();
                v.comps.push_back(f->element_at(idx % s));
                idx /= s;
            }
            return v;
        }
        case RingKind::FiniteLocalTable: return Value{.num = i64(idx)};
        default: throw NotFiniteError("cannot enumerate an infinite ring");
    }
}

u64 Ring::index_of(const Value& v) const {
    switch (kind_) {
        case RingKind::IntegersModN: return u64(v.num);
        case RingKind::PolynomialQuotient: {
            if (modpoly_.is_zero()) throw NotFiniteError("cannot enumerate an infinite ring");
            u64 idx = 0;
            for (int i = modpoly_.deg() - 1; i >= 0; --i) {
                idx *= u64(p_);
                if (i < int(v.poly.c.size())) idx += u64(v.poly.c[std::size_t(i)]);
            }
            return idx;
        }
        case RingKind::Product: {
            u64 idx = 0, mult = 1;
            for (std::size_t i = 0; i < factors_.size(); ++i) {
                idx += mult * factors_[i]->index_of(v.comps[i]);
                mult *= factors_[i]->size();
            }
            return idx;
        }
        case RingKind::FiniteLocalTable: return u64(v.num);
        default: throw NotFiniteError("cannot enumerate an infinite ring");
    }
}

std::string Ring::format(const Value& v) const {
    switch (kind_) {
        case RingKind::Integers:
        case RingKind::IntegersModN: return std::to_string(v.num);
        case RingKind::PolynomialQuotient: return poly_format(v.poly);
        case RingKind::Product: {
            std::string out = "(";
            for (std::size_t i = 0; i < factors_.size(); ++i) {
                if (i) out += ",";
                out += factors_[i]->format(v.comps[i]);
            }
            out += ")";
            return out;
        }
        case RingKind::FiniteLocalTable: return "e" + std::to_string(v.num);
    }
    return {};
}

}  // namespace purecomp
