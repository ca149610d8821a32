#include "purecomp/matrix.hpp"

namespace purecomp {

Mat Mat::identity(RingPtr r, std::size_t n) {
    Mat m(r, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = r->one();
    return m;
}

Mat mat_mul(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw DimensionMismatchError("matrix product shape mismatch");
    const Ring& R = *x.ring;
    Mat out(x.ring, x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < y.cols; ++j) {
            Value s = R.zero();
            for (std::size_t k = 0; k < x.cols; ++k)
                s = R.add(s, R.mul(x.at(i, k), y.at(k, j)));
            out.at(i, j) = s;
        }
    return out;
}

bool mat_is_diagonal(const Mat& m) {
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (i != j && !m.ring->is_zero(m.at(i, j))) return false;
    return true;
}

bool mat_inverse_pair(const Mat& x, const Mat& y) {
    if (x.rows != x.cols || y.rows != y.cols || x.rows != y.rows) return false;
    return mat_mul(x, y) == Mat::identity(x.ring, x.rows);
}

namespace {

Value random_element(const RingPtr& ring, Rng& rng) {
    if (ring->is_finite()) return ring->element_at(rng.below(ring->size()));
    switch (ring->kind()) {
        case RingKind::Integers: return Value{.num = rng.range(-5, 5)};
        case RingKind::PolynomialQuotient: {
            Value v;
            int d = int(rng.below(3));
            for (int i = 0; i <= d; ++i) v.poly.c.push_back(rng.range(0, ring->char_p() - 1));
            v.poly = poly_trim(std::move(v.poly));
            return v;
        }
        default: return ring->zero();
    }
}

Value random_unit(const RingPtr& ring, Rng& rng) {
    if (!ring->is_finite()) {
        // Units of Z and F_p[t] are +-1 and nonzero constants.
        if (ring->kind() == RingKind::Integers)
            return Value{.num = rng.below(2) ? 1 : -1};
        Value v;
        v.poly = Poly{{rng.range(1, ring->char_p() - 1)}};
        return v;
    }
    for (;;) {
        Value v = ring->element_at(rng.below(ring->size()));
        if (ring->is_unit(v)) return v;
    }
}

}  // namespace

Mat random_unimodular(const RingPtr& ring, std::size_t n, Rng& rng, int ops) {
    Mat u = Mat::identity(ring, n);
    if (n <= 1) {
        if (n == 1) u.at(0, 0) = random_unit(ring, rng);
        return u;
    }
    const Ring& R = *ring;
    for (int o = 0; o < ops; ++o) {
        switch (rng.below(3)) {
            case 0: {  // swap two rows
                std::size_t i = rng.below(n), j = rng.below(n);
                if (i != j)
                    for (std::size_t c = 0; c < n; ++c) std::swap(u.at(i, c), u.at(j, c));
                break;
            }
            case 1: {  // scale a row by a unit
                std::size_t i = rng.below(n);
                Value w = random_unit(ring, rng);
                for (std::size_t c = 0; c < n; ++c) u.at(i, c) = R.mul(w, u.at(i, c));
                break;
            }
            default: {  // add a multiple of one row to another
                std::size_t i = rng.below(n), j = rng.below(n);
                if (i == j) break;
                Value r = random_element(ring, rng);
                for (std::size_t c = 0; c < n; ++c)
                    u.at(i, c) = R.add(u.at(i, c), R.mul(r, u.at(j, c)));
                break;
            }
        }
    }
    return u;
}

std::vector<std::vector<std::string>> mat_format(const Mat& m) {
    std::vector<std::vector<std::string>> out(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) {
        out[i].reserve(m.cols);
        for (std::size_t j = 0; j < m.cols; ++j) out[i].push_back(m.ring->format(m.at(i, j)));
    }
    return out;
}

}  // namespace purecomp
