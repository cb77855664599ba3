#include "alexmod/normal_forms.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cassert>

namespace alexmod::exactlin {

namespace {

using boost::multiprecision::abs;

// Floor division (quotient rounded toward -infinity), divisor > 0.
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0)) --q;
    return q;
}

struct RowOps {
    IntMatrix* m;
    IntMatrix* witness;  // same row ops mirrored; may be null

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < m->cols(); ++c) std::swap((*m)(i, c), (*m)(j, c));
        if (witness)
            for (std::size_t c = 0; c < witness->cols(); ++c)
                std::swap((*witness)(i, c), (*witness)(j, c));
    }
    // row_dst += q * row_src
    void addmul(std::size_t dst, std::size_t src, const Int& q) {
        if (q == 0) return;
        for (std::size_t c = 0; c < m->cols(); ++c) (*m)(dst, c) += q * (*m)(src, c);
        if (witness)
            for (std::size_t c = 0; c < witness->cols(); ++c)
                (*witness)(dst, c) += q * (*witness)(src, c);
    }
    void negate(std::size_t i) {
        for (std::size_t c = 0; c < m->cols(); ++c) (*m)(i, c) = -(*m)(i, c);
        if (witness)
            for (std::size_t c = 0; c < witness->cols(); ++c)
                (*witness)(i, c) = -(*witness)(i, c);
    }
};

struct ColOps {
    IntMatrix* m;
    IntMatrix* witness;  // same column ops mirrored

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < m->rows(); ++r) std::swap((*m)(r, i), (*m)(r, j));
        if (witness)
            for (std::size_t r = 0; r < witness->rows(); ++r)
                std::swap((*witness)(r, i), (*witness)(r, j));
    }
    void addmul(std::size_t dst, std::size_t src, const Int& q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < m->rows(); ++r) (*m)(r, dst) += q * (*m)(r, src);
        if (witness)
            for (std::size_t r = 0; r < witness->rows(); ++r)
                (*witness)(r, dst) += q * (*witness)(r, src);
    }
};

}  // namespace

SnfResult snf(const IntMatrix& a) {
    const std::size_t r = a.rows(), c = a.cols();
    SnfResult res;
    res.diag = a;
    res.left = IntMatrix::identity(r);
    res.right = IntMatrix::identity(c);

    IntMatrix& d = res.diag;
    RowOps rows{&d, &res.left};
    ColOps cols{&d, &res.right};

    const std::size_t n = std::min(r, c);
    for (std::size_t k = 0; k < n; ++k) {
        // pivot: smallest |entry| != 0 in d[k.., k..], ties at lowest (row, col)
        auto find_pivot = [&]() -> std::pair<std::size_t, std::size_t> {
            std::size_t pi = r, pj = c;
            Int best;
            for (std::size_t i = k; i < r; ++i)
                for (std::size_t j = k; j < c; ++j) {
                    if (d(i, j) == 0) continue;
                    Int v = abs(d(i, j));
                    if (pi == r || v < best) {
                        best = v;
                        pi = i;
                        pj = j;
                    }
                }
            return {pi, pj};
        };

        auto [pi, pj] = find_pivot();
        if (pi == r) break;  // remaining submatrix is zero
        rows.swap_rows(k, pi);
        cols.swap_cols(k, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = k + 1; i < r; ++i) {
                if (d(i, k) == 0) continue;
                rows.addmul(i, k, -(d(i, k) / d(k, k)));
                if (d(i, k) != 0) clean = false;
            }
            for (std::size_t j = k + 1; j < c; ++j) {
                if (d(k, j) == 0) continue;
                cols.addmul(j, k, -(d(k, j) / d(k, k)));
                if (d(k, j) != 0) clean = false;
            }
            if (!clean) {
                auto [qi, qj] = find_pivot();
                rows.swap_rows(k, qi);
                cols.swap_cols(k, qj);
                continue;
            }
            // row and column k are clear; enforce divisibility of the rest
            std::size_t vi = r;
            for (std::size_t i = k + 1; i < r && vi == r; ++i)
                for (std::size_t j = k + 1; j < c; ++j)
                    if (d(i, j) % d(k, k) != 0) {
                        vi = i;
                        break;
                    }
            if (vi == r) break;
            rows.addmul(k, vi, 1);
        }
        if (d(k, k) < 0) rows.negate(k);
    }

    for (std::size_t k = 0; k < n; ++k)
        if (d(k, k) != 0) res.invariant_factors.push_back(d(k, k));
    res.free_rank = c - res.invariant_factors.size();
    return res;
}

HnfResult hnf(const IntMatrix& a) {
    const std::size_t r = a.rows(), c = a.cols();
    HnfResult res;
    res.h = a;
    res.transform = IntMatrix::identity(r);
    IntMatrix& h = res.h;
    RowOps rows{&h, &res.transform};

    std::size_t pr = 0;  // next pivot row
    for (std::size_t col = 0; col < c && pr < r; ++col) {
        for (;;) {
            std::size_t best = r;
            for (std::size_t i = pr; i < r; ++i) {
                if (h(i, col) == 0) continue;
                if (best == r || abs(h(i, col)) < abs(h(best, col))) best = i;
            }
            if (best == r) break;  // column exhausted below pr
            rows.swap_rows(pr, best);
            bool clean = true;
            for (std::size_t i = pr + 1; i < r; ++i) {
                if (h(i, col) == 0) continue;
                rows.addmul(i, pr, -(h(i, col) / h(pr, col)));
                if (h(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h(pr, col) == 0) continue;  // no pivot in this column
        if (h(pr, col) < 0) rows.negate(pr);
        for (std::size_t i = 0; i < pr; ++i)
            rows.addmul(i, pr, -floor_div(h(i, col), h(pr, col)));
        res.pivot_cols.push_back(col);
        ++pr;
    }
    res.rank = pr;
    return res;
}

IntMatrix kernel_basis(const IntMatrix& a) {
    // right kernel of A = lattice of rows x with x·A^T = 0; the transform
    // rows sitting over the zero rows of hnf(A^T) are a basis of it.
    HnfResult h = hnf(a.transposed());
    const std::size_t c = a.cols();
    const std::size_t k = c - h.rank;
    IntMatrix basis(k, c);
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t src = h.rank + i;
        bool flip = false;
        for (std::size_t j = 0; j < c; ++j) {
            if (h.transform(src, j) != 0) {
                flip = h.transform(src, j) < 0;
                break;
            }
        }
        for (std::size_t j = 0; j < c; ++j)
            basis(i, j) = flip ? Int(-h.transform(src, j)) : h.transform(src, j);
    }
    return basis;
}

std::optional<std::vector<Int>> lattice_membership(const IntMatrix& lattice,
                                                   const std::vector<Int>& v) {
    if (v.size() != lattice.cols())
        throw DimensionError("lattice_membership: vector length differs from lattice columns");
    HnfResult h = hnf(lattice);
    std::vector<Int> cur = v;
    std::vector<Int> w(lattice.rows());
    std::size_t p = 0;
    for (std::size_t col = 0; col < lattice.cols(); ++col) {
        if (p < h.rank && h.pivot_cols[p] == col) {
            const Int& piv = h.h(p, col);
            if (cur[col] % piv != 0) return std::nullopt;
            Int q = cur[col] / piv;
            if (q != 0)
                for (std::size_t j = col; j < lattice.cols(); ++j) cur[j] -= q * h.h(p, j);
            w[p] = q;
            ++p;
        } else if (cur[col] != 0) {
            return std::nullopt;
        }
    }
    // coefficients on the original rows: w^T · transform
    std::vector<Int> coeff(lattice.rows());
    for (std::size_t i = 0; i < h.rank; ++i) {
        if (w[i] == 0) continue;
        for (std::size_t j = 0; j < lattice.rows(); ++j) coeff[j] += w[i] * h.transform(i, j);
    }
    return coeff;
}

std::optional<Int> lattice_index(const IntMatrix& f) {
    if (!f.is_square()) throw DimensionError("lattice_index: matrix is not square");
    Int d = det(f);
    if (d == 0) return std::nullopt;
    return abs(d);
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
    if (!u.is_square()) throw DimensionError("unimodular_inverse: matrix is not square");
    HnfResult h = hnf(u);
    if (h.h != IntMatrix::identity(u.rows()))
        throw SingularError("unimodular_inverse: matrix is not unimodular");
    return h.transform;
}

}  // namespace alexmod::exactlin
