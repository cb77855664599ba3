#include "alexmod/int_matrix.hpp"

#include <sstream>
#include <utility>

namespace alexmod::exactlin {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_)
        throw DimensionError("IntMatrix: entry count does not match shape");
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw DimensionError("IntMatrix::from_rows: ragged rows");
        std::size_t j = 0;
        for (long long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t>& idx) const {
    IntMatrix m(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
    return m;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
    return std::vector<Int>(e_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                            e_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<Int> IntMatrix::col(std::size_t j) const {
    std::vector<Int> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("IntMatrix product: inner dimensions differ");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() == 0 && a.cols() == 0) {
        // empty block adapts to the other operand's width
        if (b.rows() == 0 && b.cols() == 0) return a;
        return b;
    }
    if (b.rows() == 0 && b.cols() == 0) return a;
    if (a.cols() != b.cols()) throw DimensionError("vstack: column counts differ");
    IntMatrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
    return m;
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() == 0 && a.cols() == 0) {
        if (b.rows() == 0 && b.cols() == 0) return a;
        return b;
    }
    if (b.rows() == 0 && b.cols() == 0) return a;
    if (a.rows() != b.rows()) throw DimensionError("hstack: row counts differ");
    IntMatrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

std::vector<Int> matvec(const IntMatrix& a, const std::vector<Int>& x) {
    if (x.size() != a.cols()) throw DimensionError("matvec: vector length differs from cols");
    std::vector<Int> y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0) y[i] += a(i, j) * x[j];
    return y;
}

Int det(const IntMatrix& a) {
    if (!a.is_square()) throw DimensionError("det: matrix is not square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m(piv, k) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Bareiss: division by the previous pivot is exact
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

}  // namespace alexmod::exactlin
