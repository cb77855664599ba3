#include "alexmod/amalgam.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <utility>

namespace alexmod::decomp {

using boost::multiprecision::abs;
using laurent::LaurentMatrix;
using laurent::LaurentPoly;

AmalgamData build_initial(const present::ShiftNormalization& n) {
    const std::size_t s = n.presentation.generators;
    const std::size_t r = n.presentation.relators;

    std::vector<std::size_t> b_offset(s), u_offset(s);
    std::size_t qb = 0, qu = 0;
    AmalgamData a;
    for (std::size_t i = 0; i < s; ++i) {
        b_offset[i] = qb;
        u_offset[i] = qu;
        qb += static_cast<std::size_t>(n.max_level[i]) + 1;
        qu += static_cast<std::size_t>(n.max_level[i]);
        for (int lev = 0; lev <= n.max_level[i]; ++lev)
            a.provenance.push_back(GeneratorOrigin{i, lev});
    }

    IntMatrix rel(r, qb);
    for (std::size_t row = 0; row < r; ++row)
        for (std::size_t i = 0; i < s; ++i)
            for (const auto& [e, c] : n.presentation.matrix(row, i).terms())
                rel(row, b_offset[i] + static_cast<std::size_t>(e)) = c;

    // t·g(u) = f(u) must hold in the module, and level lev + 1 is t times
    // level lev, so f raises the level while g keeps it.
    IntMatrix fm(qb, qu), gm(qb, qu);
    for (std::size_t i = 0; i < s; ++i)
        for (int lev = 0; lev < n.max_level[i]; ++lev) {
            std::size_t u = u_offset[i] + static_cast<std::size_t>(lev);
            fm(b_offset[i] + static_cast<std::size_t>(lev) + 1, u) = 1;
            gm(b_offset[i] + static_cast<std::size_t>(lev), u) = 1;
        }

    a.B = FgAbGroup(qb, std::move(rel));
    a.U = FgAbGroup::free(qu);
    a.f = abgrp::hom(a.U, a.B, std::move(fm));
    a.g = abgrp::hom(a.U, a.B, std::move(gm));
    a.reduction_steps = 0;
    return a;
}

namespace {

// Same group, same generators, relation rows replaced by a lattice basis.
// Keeps relation counts bounded across reduction steps.
FgAbGroup with_minimal_relations(const FgAbGroup& g) {
    auto h = exactlin::hnf(g.relations);
    IntMatrix rel(h.rank, g.gens);
    for (std::size_t i = 0; i < h.rank; ++i)
        for (std::size_t j = 0; j < g.gens; ++j) rel(i, j) = h.h(i, j);
    return FgAbGroup(g.gens, std::move(rel));
}

}  // namespace

AmalgamData reduce(AmalgamData a, std::size_t max_steps) {
    std::size_t steps = 0;
    for (;;) {
        abgrp::Kernel kf = abgrp::kernel(a.f);
        abgrp::Kernel kg = abgrp::kernel(a.g);
        bool f_inj = abgrp::canonical_form(kf.group).trivial();
        bool g_inj = abgrp::canonical_form(kg.group).trivial();
        if (f_inj && g_inj) break;
        if (steps == max_steps) {
            std::ostringstream os;
            os << "reduce: step limit " << max_steps
               << " exceeded; the reduction must terminate, so this is a bug";
            throw StepLimitError(os.str());
        }

        // U := U / (ker f + ker g)
        IntMatrix extra_u = vstack(kf.inclusion.matrix.transposed(),
                                   kg.inclusion.matrix.transposed());
        abgrp::Quotient qu = abgrp::quotient_by(a.U, extra_u);
        qu.group = with_minimal_relations(qu.group);
        qu.projection.target = qu.group;

        // B := B / (f(ker g) + g(ker f))
        IntMatrix extra_b = vstack((a.f.matrix * kg.inclusion.matrix).transposed(),
                                   (a.g.matrix * kf.inclusion.matrix).transposed());
        abgrp::Quotient qb = abgrp::quotient_by(a.B, extra_b);
        qb.group = with_minimal_relations(qb.group);
        qb.projection.target = qb.group;

        a.f = abgrp::induced_hom(a.f, qu, qb);
        a.g = abgrp::induced_hom(a.g, qu, qb);
        a.U = qu.group;
        a.B = qb.group;
        ++steps;
    }
    a.reduction_steps += steps;
    return a;
}

present::LambdaPresentation presentation_from_amalgam(const AmalgamData& a) {
    const std::size_t qb = a.B.gens;
    const std::size_t pb = a.B.relations.rows();
    const std::size_t qu = a.U.gens;
    LaurentMatrix m(pb + qu, qb);
    for (std::size_t i = 0; i < pb; ++i)
        for (std::size_t j = 0; j < qb; ++j) m(i, j) = LaurentPoly(a.B.relations(i, j));
    for (std::size_t u = 0; u < qu; ++u)
        for (std::size_t j = 0; j < qb; ++j)
            m(pb + u, j) =
                LaurentPoly::term(a.g.matrix(j, u), 1) - LaurentPoly(a.f.matrix(j, u));
    return present::LambdaPresentation(pb + qu, qb, std::move(m));
}

LatticePair extract_lattice(const AmalgamData& a) {
    abgrp::FreeBasis fb;
    try {
        fb = abgrp::free_basis(a.B);
    } catch (const NotFreeError&) {
        throw NotFreeError("extract_lattice: B has torsion");
    }
    abgrp::FreeBasis fu;
    try {
        fu = abgrp::free_basis(a.U);
    } catch (const NotFreeError&) {
        throw NotFreeError("extract_lattice: U has torsion");
    }
    if (fb.rank != fu.rank) {
        std::ostringstream os;
        os << "extract_lattice: rank(B) = " << fb.rank << " differs from rank(U) = "
           << fu.rank;
        throw RankMismatchError(os.str());
    }
    LatticePair l;
    l.d = fb.rank;
    l.F = abgrp::transport(a.f, fu, fb);
    l.G = abgrp::transport(a.g, fu, fb);
    if (exactlin::det(l.F) == 0) throw SingularError("extract_lattice: det F = 0");
    if (exactlin::det(l.G) == 0) throw SingularError("extract_lattice: det G = 0");
    return l;
}

LaurentPoly char_poly(const LatticePair& l) {
    return laurent::normalize_unit(det_laurent(laurent::pencil(l.F, l.G)));
}

namespace {

bool is_palindromic(const LaurentPoly& p) {
    if (p.is_zero()) return true;
    std::vector<std::pair<int, Int>> rev;
    for (const auto& [e, c] : p.terms()) rev.emplace_back(-e, c);
    return normalize_unit(LaurentPoly::from_pairs(rev)) == normalize_unit(p);
}

}  // namespace

DecompositionReport decompose(const present::LambdaPresentation& p,
                              const DecomposeOptions& opt) {
    DecompositionReport rep;
    present::OrderOptions oo{opt.max_minors};
    rep.order = present::order(p, oo);
    rep.content = laurent::content(rep.order);
    if (!rep.order.is_zero()) {
        rep.degree = rep.order.deg();
        rep.c0 = rep.order.coeff(0);
        rep.cd = rep.order.leading();
    }

    rep.amalgam = reduce(build_initial(present::shift_normalize(p)), opt.max_steps);

    abgrp::CanonicalForm cu = abgrp::canonical_form(rep.amalgam.U);
    rep.q = cu.min_gens();

    // simplify() keeps the minor enumeration small; the module and hence the
    // order are untouched
    LaurentPoly amalgam_order =
        present::order(present::simplify(presentation_from_amalgam(rep.amalgam)), oo);

    if (rep.order == LaurentPoly(1)) {
        // Unit order: the module modulo its maximal finite submodule is 0,
        // so the rank-0 pair with empty matrices and indices 1 applies even
        // when the constructed B keeps torsion.
        rep.lattice = LatticePair{0, IntMatrix(0, 0), IntMatrix(0, 0)};
    } else {
        try {
            rep.lattice = extract_lattice(rep.amalgam);
        } catch (const Error& e) {
            rep.lattice_reason = e.what();
        }
    }

    if (rep.lattice) {
        rep.char_poly = char_poly(*rep.lattice);
        rep.index_f = exactlin::lattice_index(rep.lattice->F);
        rep.index_g = exactlin::lattice_index(rep.lattice->G);
    }

    rep.checks.order_match =
        rep.order == amalgam_order && (!rep.char_poly || rep.order == *rep.char_poly);
    rep.checks.degree_bound =
        rep.order.is_zero() || static_cast<std::size_t>(*rep.degree) <= rep.q;
    rep.checks.c0_index =
        !rep.lattice || (rep.c0 && rep.index_f && abs(*rep.c0) == *rep.index_f);
    rep.checks.cd_index =
        !rep.lattice || (rep.cd && rep.index_g && abs(*rep.cd) == *rep.index_g);
    rep.checks.palindromic = is_palindromic(rep.order);
    rep.checks.monic = !rep.order.is_zero() && abs(*rep.c0) == 1 && abs(*rep.cd) == 1;
    return rep;
}

}  // namespace alexmod::decomp
