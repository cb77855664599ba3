#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "alexmod/int_matrix.hpp"

namespace alexmod::exactlin {

/// Smith normal form with transformation witnesses:
///   left · A · right = diag, |det left| = |det right| = 1.
struct SnfResult {
    IntMatrix left;    ///< rows(A) x rows(A), unimodular
    IntMatrix diag;    ///< same shape as A
    IntMatrix right;   ///< cols(A) x cols(A), unimodular
    /// Nonzero diagonal entries, positive, forming a divisibility chain.
    std::vector<Int> invariant_factors;
    /// Free rank of Z^cols modulo the row lattice of A (the cokernel when
    /// rows are read as relations): cols(A) - rank(A).
    std::size_t free_rank = 0;

    std::size_t rank() const { return invariant_factors.size(); }
};

/// Smith normal form. Pivot strategy: smallest absolute value among the
/// nonzero entries of the working submatrix, ties broken by lowest
/// (row, col). Deterministic for a fixed input.
SnfResult snf(const IntMatrix& a);

/// Row-style Hermite normal form with witness: transform · A = h, transform
/// unimodular. Pivots positive, entries above a pivot reduced into
/// [0, pivot), zero rows at the bottom. Internal machinery for kernels and
/// membership; not part of the module's public contract.
struct HnfResult {
    IntMatrix h;
    IntMatrix transform;
    std::size_t rank = 0;
    /// Pivot column of each of the first `rank` rows, strictly increasing.
    std::vector<std::size_t> pivot_cols;
};

HnfResult hnf(const IntMatrix& a);

/// Basis of the right-kernel lattice {x : A·x = 0}, one basis vector per
/// row. The row set is empty when the kernel is trivial. Each row is
/// sign-normalized (first nonzero entry positive).
IntMatrix kernel_basis(const IntMatrix& a);

/// Integer coefficients c with c·L = v (rows of `lattice` spanning the
/// sublattice), or nullopt when v is not in the lattice. Exact decision.
/// Throws DimensionError when v's length differs from cols(lattice).
std::optional<std::vector<Int>> lattice_membership(const IntMatrix& lattice,
                                                   const std::vector<Int>& v);

/// Index of the column lattice of F in Z^d: |det F| when det F != 0,
/// nullopt (infinite index) otherwise. The empty 0x0 matrix has index 1.
/// Throws DimensionError for non-square input.
std::optional<Int> lattice_index(const IntMatrix& f);

/// Exact inverse of a unimodular matrix. Throws SingularError when the
/// input is not unimodular.
IntMatrix unimodular_inverse(const IntMatrix& u);

}  // namespace alexmod::exactlin
