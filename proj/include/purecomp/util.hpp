#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <thread>
#include <vector>

#include "purecomp/errors.hpp"

namespace purecomp {

using i64 = std::int64_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

inline i64 checked_neg(i64 a) { return checked_sub(0, a); }

// Euclidean remainder in [0, |n|).
inline i64 mod_euclid(i64 a, i64 n) {
    i64 m = a % n;
    if (m < 0) m += (n < 0 ? -n : n);
    return m;
}

inline i64 abs64(i64 a) { return a < 0 ? -a : a; }

// g = gcd(a,b) >= 0 with x*a + y*b = g.
inline i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
    i64 old_r = a, r = b;
    i64 old_x = 1, xx = 0;
    i64 old_y = 0, yy = 1;
    while (r != 0) {
        i64 q = old_r / r;
        i64 t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * xx; old_x = xx; xx = t;
        t = old_y - q * yy; old_y = yy; yy = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    x = old_x;
    y = old_y;
    return old_r;
}

inline i64 gcd64(i64 a, i64 b) { return std::gcd(abs64(a), abs64(b)); }

inline i64 lcm64(i64 a, i64 b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(abs64(a) / gcd64(a, b), abs64(b));
}

// Trial-division factorization; inputs are desk-scale by contract.
std::vector<std::pair<i64, int>> factorize64(i64 n);

// Dense bitset sized at construction. Word layout is little-endian by index.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i) { w_[i >> 6] |= (u64(1) << (i & 63)); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(u64(1) << (i & 63)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (u64 w : w_) c += std::size_t(__builtin_popcountll(w));
        return c;
    }

    bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }

    bool is_subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    Bits& operator|=(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    Bits& operator&=(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    bool none() const {
        for (u64 w : w_)
            if (w) return false;
        return true;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            u64 w = w_[wi];
            while (w) {
                unsigned b = unsigned(__builtin_ctzll(w));
                f(std::size_t(wi * 64 + b));
                w &= w - 1;
            }
        }
    }

    std::vector<u32> to_indices() const {
        std::vector<u32> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(u32(i)); });
        return out;
    }

    std::size_t hash() const {
        u64 h = 0x9e3779b97f4a7c15ull ^ n_;
        for (u64 w : w_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return std::size_t(h);
    }

private:
    std::size_t n_ = 0;
    std::vector<u64> w_;
};

struct BitsHash {
    std::size_t operator()(const Bits& b) const { return b.hash(); }
};

// Deterministic generator used by property tests and shuffles.
class Rng {
public:
    explicit Rng(u64 seed) : s_(seed ? seed : 0x853c49e6748fea9bull) {}

    u64 next() {
        u64 z = (s_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, k).
    u64 below(u64 k) { return k ? next() % k : 0; }

    i64 range(i64 lo, i64 hi) { return lo + i64(below(u64(hi - lo + 1))); }

private:
    u64 s_;
};

inline unsigned worker_count() {
    if (const char* env = std::getenv("PURECOMP_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return unsigned(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Runs fn(i) for i in [0, n); order of completion is unspecified but every
// index runs exactly once. Exceptions propagate from the first failing index.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace purecomp
