#pragma once

#include <optional>

#include "alexmod/amalgam.hpp"

namespace alexmod::knot {

using exactlin::IntMatrix;

/// Seifert matrix of a genus-g surface: a 2g x 2g integer matrix of linking
/// numbers. A genuine Seifert pairing satisfies |det(V - V^T)| = 1; the
/// library treats violations as a diagnostic, not an error.
struct SeifertMatrix {
    IntMatrix v;
};

/// True iff |det(V - V^T)| = 1.
bool pairing_ok(const SeifertMatrix& s);

/// The square presentation t·V - V^T of the knot module.
/// Throws DimensionError for non-square or odd-dimensional input.
present::LambdaPresentation seifert_to_presentation(const SeifertMatrix& s);

struct KnotReport {
    laurent::LaurentPoly alexander;  ///< normalized order of t·V - V^T
    bool monic = false;              ///< |c0| = |cd| = 1 (false for 0)
    bool palindromic = false;
    Int content;
    std::optional<decomp::DecompositionReport> decomposition;
};

/// Alexander polynomial plus the fiberedness screening diagnostics; runs
/// the full decomposition pipeline when requested.
KnotReport analyze_knot(const SeifertMatrix& s, bool with_decomposition,
                        const decomp::DecomposeOptions& opt = {});

}  // namespace alexmod::knot
