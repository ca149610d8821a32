#include "purecomp/value.hpp"

namespace purecomp {

bool value_less(const Value& a, const Value& b) {
    if (a.num != b.num) return a.num < b.num;
    if (!(a.poly == b.poly)) return poly_less(a.poly, b.poly);
    if (a.comps.size() != b.comps.size()) return a.comps.size() < b.comps.size();
    for (std::size_t i = 0; i < a.comps.size(); ++i) {
        if (!(a.comps[i] == b.comps[i])) return value_less(a.comps[i], b.comps[i]);
    }
    return false;
}

std::size_t ValueHash::operator()(const Value& v) const {
    u64 h = 0x100001b3ull;
    auto mix = [&h](u64 x) {
        h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    mix(u64(v.num));
    for (i64 c : v.poly.c) mix(u64(c) * 0x1000193ull + 7);
    for (const Value& c : v.comps) mix(ValueHash{}(c));
    return std::size_t(h);
}

}  // namespace purecomp
