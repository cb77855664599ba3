#include "alexmod/laurent_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace alexmod::laurent {

LaurentMatrix::LaurentMatrix(std::size_t rows, std::size_t cols,
                             std::vector<LaurentPoly> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_)
        throw DimensionError("LaurentMatrix: entry count does not match shape");
}

LaurentMatrix LaurentMatrix::identity(std::size_t n) {
    LaurentMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly(1);
    return m;
}

LaurentMatrix LaurentMatrix::select_rows(const std::vector<std::size_t>& idx) const {
    LaurentMatrix m(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
    return m;
}

namespace {

LaurentPoly det_cofactor(const LaurentMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return LaurentPoly(1);
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    LaurentPoly acc;
    std::vector<std::size_t> rest;
    for (std::size_t i = 1; i < n; ++i) rest.push_back(i);
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        LaurentMatrix sub(n - 1, n - 1);
        for (std::size_t i = 0; i < n - 1; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub(i, cc++) = m(rest[i], c);
            }
        }
        LaurentPoly term = m(0, j) * det_cofactor(sub);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

LaurentPoly det_bareiss(LaurentMatrix m) {
    const std::size_t n = m.rows();
    LaurentPoly prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m(piv, k).is_zero()) ++piv;
        if (piv == n) return LaurentPoly();
        if (piv != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(piv, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                auto q = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
                if (!q) throw std::logic_error("det_laurent: inexact Bareiss division");
                m(i, j) = std::move(*q);
            }
            m(i, k) = LaurentPoly();
        }
        prev = m(k, k);
    }
    return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

}  // namespace

LaurentPoly det_laurent(const LaurentMatrix& m) {
    if (!m.is_square()) throw DimensionError("det_laurent: matrix is not square");
    if (m.rows() <= 4) return det_cofactor(m);
    return det_bareiss(m);
}

LaurentMatrix pencil(const exactlin::IntMatrix& f, const exactlin::IntMatrix& g) {
    if (f.rows() != g.rows() || f.cols() != g.cols())
        throw DimensionError("pencil: shapes differ");
    LaurentMatrix m(f.rows(), f.cols());
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j)
            m(i, j) = LaurentPoly::term(g(i, j), 1) - LaurentPoly(f(i, j));
    return m;
}

}  // namespace alexmod::laurent
