#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "alexmod/laurent_matrix.hpp"

namespace alexmod::present {

/// Presentation of a module over Z[t, t^-1]: the module is the cokernel of
/// the map given by `matrix`, rows acting as relators on the generators
/// indexed by columns.
struct LambdaPresentation {
    std::size_t relators = 0;
    std::size_t generators = 0;
    laurent::LaurentMatrix matrix;  // relators x generators

    LambdaPresentation() = default;
    LambdaPresentation(std::size_t r, std::size_t s, laurent::LaurentMatrix m);

    /// Convenience: square/rectangular literal from a LaurentMatrix.
    static LambdaPresentation from_matrix(laurent::LaurentMatrix m);
};

struct OrderOptions {
    /// Cap on the number of enumerated maximal minors. Exceeding it raises
    /// ResourceLimitError carrying the binomial count.
    std::uint64_t max_minors = 1'000'000;
};

/// Order of the presented module: gcd of the s x s minors (zero-row padding
/// when r < s, which forces 0), unit-normalized. Zero iff the module is not
/// torsion. Minor subsets are enumerated lexicographically and the running
/// gcd stops early once it becomes a unit.
laurent::LaurentPoly order(const LambdaPresentation& p, const OrderOptions& opt = {});

/// Result of shifting relators and generators so every entry has ord >= 0
/// and each generator column that appears at all has a term of exponent 0.
/// Identically-zero relator rows are dropped first.
struct ShiftNormalization {
    LambdaPresentation presentation;
    /// Highest t-exponent in each generator column after normalization
    /// (0 for generators that appear in no relator).
    std::vector<int> max_level;
    /// Exponent of the unit t^k applied to each generator column.
    std::vector<int> generator_shifts;
    /// Exponent of the unit t^k applied to each kept relator row.
    std::vector<int> relator_shifts;
    /// Generators that appear in no relator.
    std::vector<std::size_t> free_generators;
};

ShiftNormalization shift_normalize(const LambdaPresentation& p);

/// Block-diagonal presentation of the direct sum.
LambdaPresentation direct_sum(const LambdaPresentation& a, const LambdaPresentation& b);

/// Module-preserving shrink: drops zero relator rows and repeatedly
/// eliminates unit entries (+-t^k) together with their generator column.
/// The presented module and hence the order are unchanged; the point is to
/// keep minor enumeration small for machine-generated presentations.
LambdaPresentation simplify(const LambdaPresentation& p);

/// Applies a seeded sequence of elementary row and column operations
/// (swaps, unit scalings by +-t^k, adding t^k times one line to another).
/// Row operations leave the module unchanged; column operations change
/// generators. `ops` defaults to 3(r+s)+4 operations; 0 returns a copy.
LambdaPresentation unimodular_scramble(const LambdaPresentation& p, std::uint64_t seed,
                                       std::optional<std::size_t> ops = std::nullopt);

}  // namespace alexmod::present
