#include "purecomp/decompose.hpp"

#include <algorithm>
#include <cassert>

namespace purecomp {

namespace {

// Euclidean data for the pivoting strategy: norm of a canonical
// representative (0 exactly for zero) and representative division.
u64 vnorm(const Ring& R, const Value& v) {
    switch (R.kind()) {
        case RingKind::Integers: return u64(abs64(v.num));
        case RingKind::IntegersModN: return u64(v.num);
        case RingKind::PolynomialQuotient: return v.poly.is_zero() ? 0 : u64(v.poly.deg() + 1);
        default: throw UnsupportedRingError("diagonal reduction needs a Euclidean representative");
    }
}

Value vquot(const Ring& R, const Value& a, const Value& b) {
    switch (R.kind()) {
        case RingKind::Integers: {
            // Symmetric remainder keeps entries small.
            i64 q = a.num / b.num;
            i64 best_q = q;
            u64 best = u64(abs64(a.num - q * b.num));
            for (i64 cand : {q - 1, q + 1}) {
                u64 r = u64(abs64(a.num - cand * b.num));
                if (r < best) {
                    best = r;
                    best_q = cand;
                }
            }
            return Value{.num = best_q};
        }
        case RingKind::IntegersModN: return Value{.num = a.num / b.num};
        case RingKind::PolynomialQuotient: {
            Value v;
            v.poly = poly_divmod(a.poly, b.poly, R.char_p()).first;
            return v;
        }
        default: throw UnsupportedRingError("diagonal reduction needs a Euclidean representative");
    }
}

bool rep_divides(const Ring& R, const Value& b, const Value& a) {
    switch (R.kind()) {
        case RingKind::Integers: return a.num % b.num == 0;
        case RingKind::IntegersModN: return a.num % b.num == 0;
        case RingKind::PolynomialQuotient: return poly_mod(a.poly, b.poly, R.char_p()).is_zero();
        default: throw UnsupportedRingError("diagonal reduction needs a Euclidean representative");
    }
}

struct SmithWork {
    const Ring& R;
    Mat D, U, Uinv, V, Vinv;

    explicit SmithWork(const Mat& A)
        : R(*A.ring),
          D(A),
          U(Mat::identity(A.ring, A.rows)),
          Uinv(Mat::identity(A.ring, A.rows)),
          V(Mat::identity(A.ring, A.cols)),
          Vinv(Mat::identity(A.ring, A.cols)) {}

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < D.cols; ++c) std::swap(D.at(i, c), D.at(j, c));
        for (std::size_t c = 0; c < U.cols; ++c) std::swap(U.at(i, c), U.at(j, c));
        for (std::size_t r = 0; r < Uinv.rows; ++r) std::swap(Uinv.at(r, i), Uinv.at(r, j));
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < D.rows; ++r) std::swap(D.at(r, i), D.at(r, j));
        for (std::size_t r = 0; r < V.rows; ++r) std::swap(V.at(r, i), V.at(r, j));
        for (std::size_t c = 0; c < Vinv.cols; ++c) std::swap(Vinv.at(i, c), Vinv.at(j, c));
    }

    // row_i += c * row_j
    void add_row(std::size_t i, std::size_t j, const Value& c) {
        for (std::size_t k = 0; k < D.cols; ++k)
            D.at(i, k) = R.add(D.at(i, k), R.mul(c, D.at(j, k)));
        for (std::size_t k = 0; k < U.cols; ++k)
            U.at(i, k) = R.add(U.at(i, k), R.mul(c, U.at(j, k)));
        Value nc = R.neg(c);
        for (std::size_t k = 0; k < Uinv.rows; ++k)
            Uinv.at(k, j) = R.add(Uinv.at(k, j), R.mul(nc, Uinv.at(k, i)));
    }

    // col_j += c * col_i
    void add_col(std::size_t j, std::size_t i, const Value& c) {
        for (std::size_t k = 0; k < D.rows; ++k)
            D.at(k, j) = R.add(D.at(k, j), R.mul(c, D.at(k, i)));
        for (std::size_t k = 0; k < V.rows; ++k)
            V.at(k, j) = R.add(V.at(k, j), R.mul(c, V.at(k, i)));
        Value nc = R.neg(c);
        for (std::size_t k = 0; k < Vinv.cols; ++k)
            Vinv.at(i, k) = R.add(Vinv.at(i, k), R.mul(nc, Vinv.at(j, k)));
    }

    void scale_row(std::size_t i, const Value& w) {
        Value winv = R.inv_unit(w);
        for (std::size_t k = 0; k < D.cols; ++k) D.at(i, k) = R.mul(w, D.at(i, k));
        for (std::size_t k = 0; k < U.cols; ++k) U.at(i, k) = R.mul(w, U.at(i, k));
        for (std::size_t k = 0; k < Uinv.rows; ++k) Uinv.at(k, i) = R.mul(winv, Uinv.at(k, i));
    }
};

DiagonalReduction smith_euclidean(const Mat& A) {
    SmithWork w(A);
    const Ring& R = w.R;
    const std::size_t m = A.rows, k = A.cols;
    const std::size_t dmax = std::min(m, k);

    for (std::size_t t = 0; t < dmax;) {
        // Select the minimum-norm nonzero entry of the trailing block.
        std::size_t pi = t, pj = t;
        u64 best = 0;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < k; ++j) {
                u64 nm = vnorm(R, w.D.at(i, j));
                if (nm != 0 && (best == 0 || nm < best)) {
                    best = nm;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;  // trailing block is zero
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        bool restart = false;
        for (std::size_t i = t + 1; i < m && !restart; ++i) {
            if (R.is_zero(w.D.at(i, t))) continue;
            Value q = vquot(R, w.D.at(i, t), w.D.at(t, t));
            w.add_row(i, t, R.neg(q));
            if (!R.is_zero(w.D.at(i, t))) restart = true;
        }
        if (restart) continue;
        for (std::size_t j = t + 1; j < k && !restart; ++j) {
            if (R.is_zero(w.D.at(t, j))) continue;
            Value q = vquot(R, w.D.at(t, j), w.D.at(t, t));
            w.add_col(j, t, R.neg(q));
            if (!R.is_zero(w.D.at(t, j))) restart = true;
        }
        if (restart) continue;

        // Pull a representative-non-divisible entry into the pivot row.
        bool pulled = false;
        for (std::size_t i = t + 1; i < m && !pulled; ++i)
            for (std::size_t j = t + 1; j < k && !pulled; ++j) {
                if (R.is_zero(w.D.at(i, j))) continue;
                if (!rep_divides(R, w.D.at(t, t), w.D.at(i, j))) {
                    w.add_row(t, i, R.one());
                    pulled = true;
                }
            }
        if (pulled) continue;
        ++t;
    }

    // Unit-normalize the diagonal last so U stays exactly invertible.
    for (std::size_t t = 0; t < dmax; ++t) {
        Value d = w.D.at(t, t);
        Value g = R.normalize_gen(d);
        if (!(g == d)) w.scale_row(t, R.associate_unit(d, g));
    }
    return DiagonalReduction{std::move(w.U), std::move(w.Uinv), std::move(w.D), std::move(w.V),
                             std::move(w.Vinv)};
}

DiagonalReduction smith_product(const Mat& A) {
    const auto& fs = A.ring->factors();
    std::vector<DiagonalReduction> comps;
    comps.reserve(fs.size());
    for (std::size_t f = 0; f < fs.size(); ++f) {
        Mat Af(fs[f], A.rows, A.cols);
        for (std::size_t i = 0; i < A.rows; ++i)
            for (std::size_t j = 0; j < A.cols; ++j) Af.at(i, j) = A.at(i, j).comps[f];
        comps.push_back(diagonal_reduce(Af));
    }
    auto assemble = [&](auto member, std::size_t r, std::size_t c) {
        Mat out(A.ring, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                Value v;
                for (std::size_t f = 0; f < fs.size(); ++f)
                    v.comps.push_back(member(comps[f]).at(i, j));
                out.at(i, j) = v;
            }
        return out;
    };
    return DiagonalReduction{
        assemble([](const DiagonalReduction& d) -> const Mat& { return d.U; }, A.rows, A.rows),
        assemble([](const DiagonalReduction& d) -> const Mat& { return d.Uinv; }, A.rows, A.rows),
        assemble([](const DiagonalReduction& d) -> const Mat& { return d.D; }, A.rows, A.cols),
        assemble([](const DiagonalReduction& d) -> const Mat& { return d.V; }, A.cols, A.cols),
        assemble([](const DiagonalReduction& d) -> const Mat& { return d.Vinv; }, A.cols, A.cols)};
}

}  // namespace

DiagonalReduction diagonal_reduce(const Mat& a) {
    switch (a.ring->kind()) {
        case RingKind::Integers:
        case RingKind::IntegersModN:
        case RingKind::PolynomialQuotient: return smith_euclidean(a);
        case RingKind::Product: return smith_product(a);
        case RingKind::FiniteLocalTable:
            throw UnsupportedRingError("table rings have no diagonal reduction; use the finite oracle");
    }
    throw UnsupportedRingError("unsupported ring for diagonal reduction");
}

CanonicalForm canonical_form(const FpModule& m) {
    CanonicalForm cf;
    cf.ideals.ideals.assign(m.normal_form.rbegin(), m.normal_form.rend());
    for (std::size_t i = 0; i + 1 < cf.ideals.size(); ++i) {
        if (!ideal_subset(cf.ideals[i], cf.ideals[i + 1]))
            throw SearchExhaustedError("canonical chain violated; reduction is inconsistent");
    }
    return cf;
}

// ---- indecomposable refinement ------------------------------------------------

namespace {

struct RawPart {
    Value ideal_gen;  // not yet normalized
    Value cofactor;
};

// Splits R/(d) into pairwise-comaximal primary cyclic parts. The cofactor c
// of a part (q) satisfies ann(c + (d)) = (q).
std::vector<RawPart> primary_parts(const RingPtr& ring, const Value& d) {
    std::vector<RawPart> out;
    switch (ring->kind()) {
        case RingKind::Integers: {
            if (d.num == 0) {
                out.push_back({ring->zero(), ring->one()});
                return out;
            }
            i64 n = abs64(d.num);
            if (n == 1) return out;
            for (auto& [p, e] : factorize64(n)) {
                i64 q = 1;
                for (int i = 0; i < e; ++i) q = checked_mul(q, p);
                out.push_back({Value{.num = q}, Value{.num = n / q}});
            }
            return out;
        }
        case RingKind::IntegersModN: {
            i64 n = ring->mod_n();
            i64 eff = d.num == 0 ? n : d.num;
            if (eff == 1) return out;
            for (auto& [p, e] : factorize64(eff)) {
                i64 q = 1;
                for (int i = 0; i < e; ++i) q = checked_mul(q, p);
                out.push_back({Value{.num = mod_euclid(q, n)}, Value{.num = mod_euclid(eff / q, n)}});
            }
            return out;
        }
        case RingKind::PolynomialQuotient: {
            i64 p = ring->char_p();
            if (ring->modulus().is_zero()) {
                if (d.poly.is_zero()) {
                    out.push_back({ring->zero(), ring->one()});
                    return out;
                }
                if (d.poly.deg() == 0) return out;
                for (auto& [q, e] : poly_factor(d.poly, p)) {
                    Poly qe{{1}};
                    for (int i = 0; i < e; ++i) qe = poly_mul(qe, q, p);
                    Value ig, cof;
                    ig.poly = qe;
                    cof.poly = poly_divmod(poly_monic(d.poly, p), qe, p).first;
                    out.push_back({ig, cof});
                }
                return out;
            }
            Poly eff = d.poly.is_zero() ? ring->modulus() : d.poly;
            if (eff.deg() == 0) return out;
            for (auto& [q, e] : poly_factor(eff, p)) {
                Poly qe{{1}};
                for (int i = 0; i < e; ++i) qe = poly_mul(qe, q, p);
                Value ig, cof;
                ig.poly = poly_mod(qe, ring->modulus(), p);
                cof.poly = poly_mod(poly_divmod(poly_monic(eff, p), qe, p).first, ring->modulus(), p);
                out.push_back({ig, cof});
            }
            return out;
        }
        case RingKind::Product: {
            const auto& fs = ring->factors();
            for (std::size_t j = 0; j < fs.size(); ++j) {
                for (const RawPart& sub : primary_parts(fs[j], d.comps[j])) {
                    Value ig, cof;
                    for (std::size_t i = 0; i < fs.size(); ++i) {
                        ig.comps.push_back(i == j ? sub.ideal_gen : fs[i]->one());
                        cof.comps.push_back(i == j ? sub.cofactor : fs[i]->zero());
                    }
                    out.push_back({ig, cof});
                }
            }
            return out;
        }
        case RingKind::FiniteLocalTable:
            throw UnsupportedRingError("table rings are refined through the finite oracle");
    }
    return out;
}

}  // namespace

IdealSet IndecomposableDecomposition::factors() const {
    IdealSet s;
    for (const auto& p : parts) s.ideals.push_back(p.ideal);
    return s;
}

IndecomposableDecomposition indecomposable_refine(const RingPtr& ring, const CanonicalForm& cf) {
    IndecomposableDecomposition out;
    for (std::size_t i = 0; i < cf.ideals.size(); ++i) {
        for (const RawPart& raw : primary_parts(ring, cf.ideals[i].gen)) {
            IndecomposablePart part;
            part.ideal = make_ideal(ring, raw.ideal_gen);
            part.cf_index = i;
            part.cofactor = raw.cofactor;
            part.size = quotient_size(part.ideal);
            out.parts.push_back(std::move(part));
        }
    }
    std::sort(out.parts.begin(), out.parts.end(),
              [](const IndecomposablePart& a, const IndecomposablePart& b) {
                  Value ra = radical(a.ideal).gen, rb = radical(b.ideal).gen;
                  if (!(ra == rb)) return value_less(ra, rb);
                  u64 sa = a.size == 0 ? ~u64(0) : a.size;
                  u64 sb = b.size == 0 ? ~u64(0) : b.size;
                  if (sa != sb) return sa > sb;
                  if (a.cf_index != b.cf_index) return a.cf_index < b.cf_index;
                  return value_less(a.ideal.gen, b.ideal.gen);
              });
    return out;
}

IndecomposableDecomposition indecomposable_refine(const FpModule& m) {
    return indecomposable_refine(m.ring, canonical_form(m));
}

std::size_t mu(const FpModule& m) { return m.normal_form.size(); }

}  // namespace purecomp
