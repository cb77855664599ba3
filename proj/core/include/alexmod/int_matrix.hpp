#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "alexmod/errors.hpp"

namespace alexmod {

/// Arbitrary-precision integer. All arithmetic in this library is exact;
/// fixed-width intermediates are never used.
using Int = boost::multiprecision::cpp_int;

namespace exactlin {

/// Dense integer matrix, row-major. Degenerate shapes (0 rows and/or 0
/// columns) are valid and behave as the corresponding empty objects.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    /// Convenience builder for literals in tests and fixtures.
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    const std::vector<Int>& entries() const { return e_; }

    IntMatrix transposed() const;

    /// Rows selected by index, in the given order.
    IntMatrix select_rows(const std::vector<std::size_t>& idx) const;

    std::vector<Int> row(std::size_t i) const;
    std::vector<Int> col(std::size_t j) const;

    bool operator==(const IntMatrix& o) const = default;

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> e_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// a's rows followed by b's rows; column counts must agree.
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);

/// a's columns followed by b's columns; row counts must agree.
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);

/// Matrix-vector product A·x.
std::vector<Int> matvec(const IntMatrix& a, const std::vector<Int>& x);

/// Exact determinant (fraction-free Bareiss elimination). The 0x0
/// determinant is 1. Throws DimensionError for non-square input.
Int det(const IntMatrix& a);

}  // namespace exactlin
}  // namespace alexmod
