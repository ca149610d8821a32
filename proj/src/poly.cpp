#include "purecomp/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace purecomp {

bool poly_less(const Poly& a, const Poly& b) {
    if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
    for (std::size_t i = a.c.size(); i-- > 0;)
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    return false;
}

Poly poly_trim(Poly f) {
    while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
    return f;
}

Poly poly_reduce_coeffs(const Poly& f, i64 p) {
    Poly g = f;
    for (auto& x : g.c) x = mod_euclid(x, p);
    return poly_trim(std::move(g));
}

Poly poly_add(const Poly& a, const Poly& b, i64 p) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        i64 s = (i < a.c.size() ? a.c[i] : 0) + (i < b.c.size() ? b.c[i] : 0);
        r.c[i] = mod_euclid(s, p);
    }
    return poly_trim(std::move(r));
}

Poly poly_neg(const Poly& a, i64 p) {
    Poly r = a;
    for (auto& x : r.c) x = mod_euclid(-x, p);
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b, i64 p) { return poly_add(a, poly_neg(b, p), p); }

Poly poly_mul(const Poly& a, const Poly& b, i64 p) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            r.c[i + j] = mod_euclid(r.c[i + j] + a.c[i] * b.c[j], p);
        }
    }
    return poly_trim(std::move(r));
}

i64 inv_mod(i64 a, i64 p) {
    i64 x, y;
    i64 g = ext_gcd(mod_euclid(a, p), p, x, y);
    if (g != 1) throw OverflowError("element not invertible in F_p");
    return mod_euclid(x, p);
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b, i64 p) {
    if (b.is_zero()) throw OverflowError("polynomial division by zero");
    Poly rem = a;
    Poly q;
    if (a.deg() >= b.deg()) q.c.assign(std::size_t(a.deg() - b.deg() + 1), 0);
    i64 linv = inv_mod(b.lead(), p);
    while (!rem.is_zero() && rem.deg() >= b.deg()) {
        int shift = rem.deg() - b.deg();
        i64 coef = mod_euclid(rem.lead() * linv, p);
        q.c[std::size_t(shift)] = coef;
        for (std::size_t i = 0; i < b.c.size(); ++i) {
            std::size_t k = i + std::size_t(shift);
            rem.c[k] = mod_euclid(rem.c[k] - coef * b.c[i], p);
        }
        rem = poly_trim(std::move(rem));
    }
    return {poly_trim(std::move(q)), rem};
}

Poly poly_mod(const Poly& a, const Poly& b, i64 p) { return poly_divmod(a, b, p).second; }

Poly poly_monic(const Poly& a, i64 p) {
    if (a.is_zero()) return a;
    i64 linv = inv_mod(a.lead(), p);
    Poly r = a;
    for (auto& x : r.c) x = mod_euclid(x * linv, p);
    return r;
}

Poly poly_gcd(Poly a, Poly b, i64 p) {
    while (!b.is_zero()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a, p);
}

Poly poly_ext_gcd(const Poly& a, const Poly& b, i64 p, Poly& u, Poly& v) {
    Poly r0 = a, r1 = b;
    Poly u0{{1}}, u1{}, v0{}, v1{{1}};
    u0 = poly_reduce_coeffs(u0, p);
    v1 = poly_reduce_coeffs(v1, p);
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(r0, r1, p);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly nu = poly_sub(u0, poly_mul(q, u1, p), p);
        u0 = std::move(u1);
        u1 = std::move(nu);
        Poly nv = poly_sub(v0, poly_mul(q, v1, p), p);
        v0 = std::move(v1);
        v1 = std::move(nv);
    }
    if (!r0.is_zero()) {
        i64 linv = inv_mod(r0.lead(), p);
        Poly scale{{linv}};
        r0 = poly_monic(r0, p);
        u0 = poly_mul(u0, scale, p);
        v0 = poly_mul(v0, scale, p);
    }
    u = u0;
    v = v0;
    return r0;
}

Poly poly_derivative(const Poly& a, i64 p) {
    Poly r;
    if (a.c.size() <= 1) return r;
    r.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = mod_euclid(a.c[i] * i64(i), p);
    return poly_trim(std::move(r));
}

namespace {

// Enumerates every monic polynomial of the given degree in poly_less order.
std::vector<Poly> monic_of_degree(i64 p, int d) {
    u64 combos = 1;
    for (int i = 0; i < d; ++i) {
        combos *= u64(p);
        if (combos > (u64(1) << 22)) throw TooLargeError("polynomial enumeration exceeds the size cap");
    }
    std::vector<Poly> out;
    out.reserve(combos);
    for (u64 idx = 0; idx < combos; ++idx) {
        Poly f;
        f.c.assign(std::size_t(d) + 1, 0);
        u64 rest = idx;
        for (int i = 0; i < d; ++i) {
            f.c[std::size_t(i)] = i64(rest % u64(p));
            rest /= u64(p);
        }
        f.c[std::size_t(d)] = 1;
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

std::map<std::pair<i64, int>, std::vector<Poly>> g_irred_cache;
std::mutex g_irred_mu;

// Assumes the cache already holds every degree below `degree`.
std::vector<Poly> compute_irreducibles(i64 p, int degree) {
    std::vector<Poly> out;
    for (const Poly& f : monic_of_degree(p, degree)) {
        bool irred = true;
        for (int d = 1; d <= degree / 2 && irred; ++d) {
            for (const Poly& q : g_irred_cache[std::make_pair(p, d)]) {
                if (poly_mod(f, q, p).is_zero()) {
                    irred = false;
                    break;
                }
            }
        }
        if (irred) out.push_back(f);
    }
    return out;
}

}  // namespace

const std::vector<Poly>& irreducibles(i64 p, int degree) {
    std::lock_guard<std::mutex> lk(g_irred_mu);
    for (int d = 1; d <= degree; ++d) {
        auto key = std::make_pair(p, d);
        if (!g_irred_cache.count(key)) g_irred_cache[key] = compute_irreducibles(p, d);
    }
    return g_irred_cache[std::make_pair(p, degree)];
}

namespace {

void ensure_irreducibles_upto(i64 p, int degree) {
    if (degree >= 1) irreducibles(p, degree);
}

}  // namespace

bool poly_is_irreducible(const Poly& f, i64 p) {
    if (f.deg() <= 0) return false;
    if (f.deg() == 1) return true;
    ensure_irreducibles_upto(p, f.deg() / 2);
    for (int d = 1; d <= f.deg() / 2; ++d) {
        for (const Poly& q : irreducibles(p, d)) {
            if (poly_mod(f, q, p).is_zero()) return false;
        }
    }
    return true;
}

std::vector<std::pair<Poly, int>> poly_factor(const Poly& f, i64 p) {
    if (f.is_zero()) throw OverflowError("cannot factor the zero polynomial");
    Poly rest = poly_monic(f, p);
    std::vector<std::pair<Poly, int>> out;
    ensure_irreducibles_upto(p, std::max(1, rest.deg() / 2));
    for (int d = 1; rest.deg() >= 1 && d <= rest.deg() / 2; ++d) {
        for (const Poly& q : irreducibles(p, d)) {
            if (rest.deg() < 2 * d) break;
            int e = 0;
            while (rest.deg() >= q.deg() && poly_mod(rest, q, p).is_zero()) {
                rest = poly_divmod(rest, q, p).first;
                ++e;
            }
            if (e > 0) out.emplace_back(q, e);
        }
    }
    if (rest.deg() >= 1) out.emplace_back(rest, 1);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return out;
}

Poly poly_squarefree_part(const Poly& f, i64 p) {
    if (f.is_zero()) return f;
    Poly r{{1}};
    for (const auto& [q, e] : poly_factor(f, p)) r = poly_mul(r, q, p);
    return r;
}

std::string poly_format(const Poly& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int d = f.deg(); d >= 0; --d) {
        i64 c = f.c[std::size_t(d)];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (d == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c);
            out += var;
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out;
}

}  // namespace purecomp
