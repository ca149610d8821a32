#pragma once
#include <functional>

// Test-only oracles: independent brute-force routes used to freeze expected
// values. These never call the code paths they are checking.

#include <set>
#include <vector>

#include "purecomp/ring.hpp"

namespace purecomp::testing {

// All elements of the ideal generated by `gens` in a finite ring, found by
// closing the set under addition and ring multiplication.
inline std::set<u64> ideal_span_oracle(const RingPtr& R, const std::vector<Value>& gens) {
    u64 n = R->size();
    std::vector<Value> elems;
    for (u64 i = 0; i < n; ++i) elems.push_back(R->element_at(i));
    std::set<u64> span;
    span.insert(R->index_of(R->zero()));
    for (const Value& g : gens)
        for (u64 r = 0; r < n; ++r) span.insert(R->index_of(R->mul(elems[r], g)));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<u64> cur(span.begin(), span.end());
        for (u64 a : cur)
            for (u64 b : cur) {
                u64 s = R->index_of(R->add(elems[a], elems[b]));
                if (span.insert(s).second) grew = true;
            }
    }
    return span;
}

// Extended Euclid over the integers, written independently of the library.
inline i64 euclid_oracle(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) {
        x = a < 0 ? -1 : 1;
        y = 0;
        return a < 0 ? -a : a;
    }
    i64 x1, y1;
    i64 g = euclid_oracle(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

}  // namespace purecomp::testing

#include "purecomp/matrix.hpp"

namespace purecomp::testing {

// Determinant by Laplace expansion; independent of the reduction code.
inline Value det_oracle(const Mat& m) {
    const Ring& R = *m.ring;
    if (m.rows != m.cols) throw std::logic_error("det of non-square");
    if (m.rows == 0) return R.one();
    if (m.rows == 1) return m.at(0, 0);
    Value acc = R.zero();
    for (std::size_t j = 0; j < m.cols; ++j) {
        Mat sub(m.ring, m.rows - 1, m.cols - 1);
        for (std::size_t r = 1; r < m.rows; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < m.cols; ++c) {
                if (c == j) continue;
                sub.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Value term = R.mul(m.at(0, j), det_oracle(sub));
        acc = (j % 2 == 0) ? R.add(acc, term) : R.sub(acc, term);
    }
    return acc;
}

// k-th determinantal divisor: gcd of all k x k minors, as a normalized value.
inline Value determinantal_divisor_oracle(const Mat& m, std::size_t k) {
    const Ring& R = *m.ring;
    std::vector<std::size_t> rsel(k), csel(k);
    Value g = R.zero();
    // iterate k-subsets of rows and columns
    std::function<void(std::size_t, std::size_t)> rows_loop;
    std::function<void(std::size_t, std::size_t)> cols_loop;
    cols_loop = [&](std::size_t pos, std::size_t start) {
        if (pos == k) {
            Mat sub(m.ring, k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(rsel[i], csel[j]);
            g = R.gcd_bezout(g, det_oracle(sub)).g;
            return;
        }
        for (std::size_t c = start; c < m.cols; ++c) {
            csel[pos] = c;
            cols_loop(pos + 1, c + 1);
        }
    };
    rows_loop = [&](std::size_t pos, std::size_t start) {
        if (pos == k) {
            cols_loop(0, 0);
            return;
        }
        for (std::size_t r = start; r < m.rows; ++r) {
            rsel[pos] = r;
            rows_loop(pos + 1, r + 1);
        }
    };
    rows_loop(0, 0);
    return R.normalize_gen(g);
}

}  // namespace purecomp::testing
