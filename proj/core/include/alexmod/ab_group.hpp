#pragma once

#include <cstddef>
#include <vector>

#include "alexmod/normal_forms.hpp"

namespace alexmod::abgrp {

using exactlin::IntMatrix;

/// Finitely presented abelian group: Z^gens modulo the row lattice of
/// `relations` (one relation per row, relations.cols() == gens).
struct FgAbGroup {
    std::size_t gens = 0;
    IntMatrix relations;  // P x gens

    FgAbGroup() = default;
    FgAbGroup(std::size_t g, IntMatrix rel);

    /// Free abelian group of the given rank (no relations).
    static FgAbGroup free(std::size_t rank) { return FgAbGroup(rank, IntMatrix(0, rank)); }
};

/// Presentation-independent invariants.
struct CanonicalForm {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;  // invariant factors > 1, divisibility order

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    /// Minimal number of generators.
    std::size_t min_gens() const { return free_rank + torsion.size(); }
};

CanonicalForm canonical_form(const FgAbGroup& g);

/// Homomorphism between presented groups. Column j of `matrix` is the image
/// of source generator j written in target generators. Construct through
/// hom() so well-definedness is verified.
struct AbHom {
    FgAbGroup source;
    FgAbGroup target;
    IntMatrix matrix;  // target.gens x source.gens
};

/// Builds a hom after checking that every source relation, pushed through
/// the matrix, lands in the target relation lattice. Throws IllDefinedError
/// otherwise and DimensionError on shape mismatch.
AbHom hom(const FgAbGroup& source, const FgAbGroup& target, IntMatrix matrix);

AbHom identity_hom(const FgAbGroup& g);

/// g after f. Shapes must compose; the result is well-defined whenever both
/// inputs are.
AbHom compose(const AbHom& g, const AbHom& f);

/// Equality as maps: matrices agree column-wise modulo the target relation
/// lattice.
bool hom_equal(const AbHom& a, const AbHom& b);

struct Kernel {
    FgAbGroup group;  ///< presents ker h
    AbHom inclusion;  ///< ker h -> source of h
};

/// Kernel of h: generators are a canonical basis of the preimage lattice
/// {x : h(x) in target relation lattice}; relations are the source
/// relations rewritten in that basis.
Kernel kernel(const AbHom& h);

bool is_injective(const AbHom& h);

struct Quotient {
    FgAbGroup group;
    AbHom projection;  ///< identity-matrix hom onto the quotient
};

/// Quotient by the subgroup generated by the rows of `extra`
/// (extra.cols() == g.gens).
Quotient quotient_by(const FgAbGroup& g, const IntMatrix& extra);

/// The unique map on quotients commuting with the projections, i.e.
/// induced(src_proj(x)) = tgt_proj(h(x)). Throws NotInducedError when h
/// does not send ker(src_proj) into ker(tgt_proj).
AbHom induced_hom(const AbHom& h, const Quotient& src_proj, const Quotient& tgt_proj);

/// Isomorphism G = Z^rank for a torsion-free G, as a matrix pair:
/// to_free (rank x gens) maps a generator vector to free coordinates,
/// from_free (gens x rank) chooses representatives; to_free * from_free = I.
struct FreeBasis {
    std::size_t rank = 0;
    IntMatrix to_free;
    IntMatrix from_free;
};

/// Throws NotFreeError when g has torsion.
FreeBasis free_basis(const FgAbGroup& g);

/// Matrix of h rewritten in free bases of its source and target.
IntMatrix transport(const AbHom& h, const FreeBasis& src, const FreeBasis& tgt);

}  // namespace alexmod::abgrp
