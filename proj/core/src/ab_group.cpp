#include "alexmod/ab_group.hpp"

#include <sstream>
#include <utility>

namespace alexmod::abgrp {

using exactlin::hnf;
using exactlin::kernel_basis;
using exactlin::lattice_membership;
using exactlin::snf;

FgAbGroup::FgAbGroup(std::size_t g, IntMatrix rel) : gens(g), relations(std::move(rel)) {
    if (relations.cols() != gens) {
        if (relations.rows() == 0) {
            relations = IntMatrix(0, gens);
        } else {
            throw DimensionError("FgAbGroup: relation width differs from generator count");
        }
    }
}

CanonicalForm canonical_form(const FgAbGroup& g) {
    auto s = snf(g.relations);
    CanonicalForm cf;
    cf.free_rank = g.gens - s.rank();
    for (const Int& d : s.invariant_factors)
        if (d > 1) cf.torsion.push_back(d);
    return cf;
}

AbHom hom(const FgAbGroup& source, const FgAbGroup& target, IntMatrix matrix) {
    if (matrix.rows() != target.gens || matrix.cols() != source.gens)
        throw DimensionError("hom: matrix shape does not match generator counts");
    for (std::size_t i = 0; i < source.relations.rows(); ++i) {
        std::vector<Int> pushed = matvec(matrix, source.relations.row(i));
        if (!lattice_membership(target.relations, pushed)) {
            std::ostringstream os;
            os << "hom: source relation " << i << " does not map into the target lattice";
            throw IllDefinedError(os.str());
        }
    }
    return AbHom{source, target, std::move(matrix)};
}

AbHom identity_hom(const FgAbGroup& g) {
    return AbHom{g, g, IntMatrix::identity(g.gens)};
}

AbHom compose(const AbHom& g, const AbHom& f) {
    if (f.target.gens != g.source.gens)
        throw DimensionError("compose: inner generator counts differ");
    return AbHom{f.source, g.target, g.matrix * f.matrix};
}

bool hom_equal(const AbHom& a, const AbHom& b) {
    if (a.source.gens != b.source.gens || a.target.gens != b.target.gens) return false;
    for (std::size_t j = 0; j < a.matrix.cols(); ++j) {
        std::vector<Int> diff(a.matrix.rows());
        for (std::size_t i = 0; i < a.matrix.rows(); ++i)
            diff[i] = a.matrix(i, j) - b.matrix(i, j);
        if (!lattice_membership(a.target.relations, diff)) return false;
    }
    return true;
}

Kernel kernel(const AbHom& h) {
    const std::size_t qs = h.source.gens;
    const std::size_t qt = h.target.gens;
    const std::size_t pt = h.target.relations.rows();
    // preimage lattice {x : M x in target lattice} = projection of the
    // right kernel of [M | R_target^T] onto the x block
    IntMatrix w(qt, qs + pt);
    for (std::size_t i = 0; i < qt; ++i) {
        for (std::size_t j = 0; j < qs; ++j) w(i, j) = h.matrix(i, j);
        for (std::size_t j = 0; j < pt; ++j) w(i, qs + j) = h.target.relations(j, i);
    }
    IntMatrix full = kernel_basis(w);
    IntMatrix proj(full.rows(), qs);
    for (std::size_t i = 0; i < full.rows(); ++i)
        for (std::size_t j = 0; j < qs; ++j) proj(i, j) = full(i, j);
    auto hh = hnf(proj);
    IntMatrix basis(hh.rank, qs);
    for (std::size_t i = 0; i < hh.rank; ++i)
        for (std::size_t j = 0; j < qs; ++j) basis(i, j) = hh.h(i, j);

    // source relations rewritten on the kernel generators
    IntMatrix krel(h.source.relations.rows(), hh.rank);
    for (std::size_t i = 0; i < h.source.relations.rows(); ++i) {
        auto c = lattice_membership(basis, h.source.relations.row(i));
        if (!c) throw std::logic_error("kernel: source relation escapes the preimage lattice");
        for (std::size_t j = 0; j < hh.rank; ++j) krel(i, j) = (*c)[j];
    }

    FgAbGroup k(hh.rank, std::move(krel));
    AbHom incl{k, h.source, basis.transposed()};
    return Kernel{std::move(k), std::move(incl)};
}

bool is_injective(const AbHom& h) {
    return canonical_form(kernel(h).group).trivial();
}

Quotient quotient_by(const FgAbGroup& g, const IntMatrix& extra) {
    if (extra.rows() > 0 && extra.cols() != g.gens)
        throw DimensionError("quotient_by: extra relation width differs from generators");
    IntMatrix stacked = vstack(g.relations, extra.rows() == 0 ? IntMatrix(0, g.gens) : extra);
    FgAbGroup q(g.gens, std::move(stacked));
    AbHom proj{g, q, IntMatrix::identity(g.gens)};
    return Quotient{std::move(q), std::move(proj)};
}

AbHom induced_hom(const AbHom& h, const Quotient& src_proj, const Quotient& tgt_proj) {
    if (src_proj.group.gens != h.source.gens || tgt_proj.group.gens != h.target.gens)
        throw DimensionError("induced_hom: projections do not match the map");
    try {
        return hom(src_proj.group, tgt_proj.group, h.matrix);
    } catch (const IllDefinedError&) {
        throw NotInducedError(
            "induced_hom: the map does not send ker(src_proj) into ker(tgt_proj)");
    }
}

FreeBasis free_basis(const FgAbGroup& g) {
    auto s = snf(g.relations.transposed());
    for (const Int& d : s.invariant_factors)
        if (d > 1) throw NotFreeError("free_basis: group has torsion");

    const std::size_t rank = g.gens - s.rank();
    // In coordinates x' = L x the relation lattice is spanned by unit
    // vectors on the first rank(relations) coordinates; the rest are free.
    IntMatrix inv = exactlin::unimodular_inverse(s.left);
    FreeBasis fb;
    fb.rank = rank;
    fb.to_free = IntMatrix(rank, g.gens);
    fb.from_free = IntMatrix(g.gens, rank);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < g.gens; ++j) {
            fb.to_free(i, j) = s.left(s.rank() + i, j);
            fb.from_free(j, i) = inv(j, s.rank() + i);
        }
    // orient each basis vector so the first nonzero value of the coordinate
    // functional is positive
    for (std::size_t i = 0; i < rank; ++i) {
        for (std::size_t j = 0; j < g.gens; ++j) {
            if (fb.to_free(i, j) == 0) continue;
            if (fb.to_free(i, j) < 0) {
                for (std::size_t c = 0; c < g.gens; ++c) {
                    fb.to_free(i, c) = -fb.to_free(i, c);
                    fb.from_free(c, i) = -fb.from_free(c, i);
                }
            }
            break;
        }
    }
    return fb;
}

IntMatrix transport(const AbHom& h, const FreeBasis& src, const FreeBasis& tgt) {
    return tgt.to_free * h.matrix * src.from_free;
}

}  // namespace alexmod::abgrp
