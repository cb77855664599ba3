#pragma once

#include <cstddef>
#include <vector>

#include "alexmod/laurent_poly.hpp"

namespace alexmod::laurent {

/// Dense matrix over Z[t, t^-1], row-major.
class LaurentMatrix {
public:
    LaurentMatrix() = default;
    LaurentMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    LaurentMatrix(std::size_t rows, std::size_t cols, std::vector<LaurentPoly> entries);

    static LaurentMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    LaurentPoly& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const LaurentPoly& operator()(std::size_t i, std::size_t j) const {
        return e_[i * cols_ + j];
    }

    LaurentMatrix select_rows(const std::vector<std::size_t>& idx) const;

    bool operator==(const LaurentMatrix& o) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<LaurentPoly> e_;
};

/// Exact determinant: cofactor expansion for dimension <= 4, fraction-free
/// Bareiss elimination above. Result is NOT unit-normalized.
/// Throws DimensionError for non-square input.
LaurentPoly det_laurent(const LaurentMatrix& m);

/// The matrix t·G - F of an integer matrix pair (same square shape).
LaurentMatrix pencil(const exactlin::IntMatrix& f, const exactlin::IntMatrix& g);

}  // namespace alexmod::laurent
