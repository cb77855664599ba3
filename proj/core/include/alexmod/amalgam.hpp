#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "alexmod/ab_group.hpp"
#include "alexmod/presentation.hpp"

namespace alexmod::decomp {

using abgrp::AbHom;
using abgrp::FgAbGroup;
using exactlin::IntMatrix;

/// Where a generator of B came from: generator `generator` of the input
/// presentation, shifted by t^level.
struct GeneratorOrigin {
    std::size_t generator = 0;
    int level = 0;

    bool operator==(const GeneratorOrigin&) const = default;
};

/// The amalgam data (B, U, f, g): the presented module is the doubly
/// infinite free product of copies of B amalgamated over U along f and g,
/// with the coordinate shift providing the t-action. Both maps share source
/// U and target B; after reduce() both are injective.
struct AmalgamData {
    FgAbGroup B;
    FgAbGroup U;
    AbHom f;  ///< U -> B, level-raising: t·g(u) = f(u) in the module
    AbHom g;  ///< U -> B, level-keeping
    std::size_t reduction_steps = 0;
    std::vector<GeneratorOrigin> provenance;  ///< one entry per B generator
};

/// Builds the initial amalgam from a shift-normalized presentation: B is
/// generated by one symbol per (generator, level) with the relator rows as
/// integer relations; U is free on the sub-top levels; g keeps the level
/// and f raises it by one, so that t·g(u) = f(u) holds in the module and
/// det(t·g - f) carries |det of the f side| as its constant coefficient.
AmalgamData build_initial(const present::ShiftNormalization& n);

/// Iterates the reduction operation — U := U/(ker f + ker g),
/// B := B/(f(ker g) + g(ker f)), maps induced — until both maps are
/// injective. No-op when they already are. Throws StepLimitError past
/// max_steps (termination is guaranteed, so that signals a bug).
AmalgamData reduce(AmalgamData a, std::size_t max_steps = 1000);

/// The (P+q) x Q presentation over Z[t, t^-1] read off the amalgam:
/// columns are B's generators, rows are B's relations (constant) plus one
/// row t·g(u) - f(u) per U generator.
present::LambdaPresentation presentation_from_amalgam(const AmalgamData& a);

/// Rank-d lattice pair: matrices of the two injective maps Z^d -> Z^d in a
/// free basis. Both determinants are nonzero.
struct LatticePair {
    std::size_t d = 0;
    IntMatrix F;
    IntMatrix G;
};

/// Extracts the lattice pair from reduced amalgam data. Throws
/// NotFreeError (torsion in B or U), RankMismatchError (ranks differ, the
/// order vanishes), or SingularError (a determinant vanishes; unreachable
/// for reduced data).
LatticePair extract_lattice(const AmalgamData& a);

/// det(t·G - F), unit-normalized. Degree d with |leading| = |det G| and
/// |constant| = |det F| before normalization.
laurent::LaurentPoly char_poly(const LatticePair& l);

struct CheckSet {
    bool order_match = false;
    bool degree_bound = false;
    bool c0_index = false;
    bool cd_index = false;
    bool palindromic = false;
    bool monic = false;

    bool all() const {
        return order_match && degree_bound && c0_index && cd_index && palindromic && monic;
    }
};

struct DecompositionReport {
    laurent::LaurentPoly order;  ///< normalized
    std::optional<int> degree;   ///< absent when order = 0
    std::optional<Int> c0, cd;
    Int content;
    AmalgamData amalgam;
    std::optional<LatticePair> lattice;
    std::string lattice_reason;  ///< nonempty exactly when lattice is absent
    std::optional<laurent::LaurentPoly> char_poly;
    std::optional<Int> index_f, index_g;
    std::size_t q = 0;  ///< minimal generator count of the final U
    CheckSet checks;
};

struct DecomposeOptions {
    std::uint64_t max_minors = 1'000'000;
    std::size_t max_steps = 1000;
};

/// Full pipeline: order, shift-normalize, build, reduce, lattice
/// extraction, and every verification the report carries. Lattice absence
/// is reported with its reason, not thrown; resource errors propagate.
DecompositionReport decompose(const present::LambdaPresentation& p,
                              const DecomposeOptions& opt = {});

}  // namespace alexmod::decomp
