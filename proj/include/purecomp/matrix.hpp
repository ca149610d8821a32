#pragma once

#include "purecomp/ring.hpp"

namespace purecomp {

// Dense matrix over one ring instance, row-major.
struct Mat {
    RingPtr ring;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Value> a;

    Mat() = default;
    Mat(RingPtr r, std::size_t m, std::size_t k)
        : ring(std::move(r)), rows(m), cols(k), a(m * k, ring->zero()) {}

    Value& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Value& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Mat identity(RingPtr r, std::size_t n);
    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

Mat mat_mul(const Mat& x, const Mat& y);
bool mat_is_diagonal(const Mat& m);
// True when x * y is the identity (both square of equal size).
bool mat_inverse_pair(const Mat& x, const Mat& y);
// Random product of elementary row operations (swaps, unit scalings, adds).
Mat random_unimodular(const RingPtr& ring, std::size_t n, Rng& rng, int ops = 12);

std::vector<std::vector<std::string>> mat_format(const Mat& m);

}  // namespace purecomp
