#include "alexmod/seifert.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace alexmod::knot {

bool pairing_ok(const SeifertMatrix& s) {
    if (!s.v.is_square()) return false;
    const std::size_t n = s.v.rows();
    IntMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d(i, j) = s.v(i, j) - s.v(j, i);
    return boost::multiprecision::abs(exactlin::det(d)) == 1;
}

present::LambdaPresentation seifert_to_presentation(const SeifertMatrix& s) {
    if (!s.v.is_square())
        throw DimensionError("seifert_to_presentation: matrix is not square");
    if (s.v.rows() % 2 != 0)
        throw DimensionError("seifert_to_presentation: dimension is odd");
    return present::LambdaPresentation::from_matrix(
        laurent::pencil(s.v.transposed(), s.v));
}

KnotReport analyze_knot(const SeifertMatrix& s, bool with_decomposition,
                        const decomp::DecomposeOptions& opt) {
    present::LambdaPresentation p = seifert_to_presentation(s);
    KnotReport rep;
    if (with_decomposition) {
        rep.decomposition = decomp::decompose(p, opt);
        rep.alexander = rep.decomposition->order;
        rep.monic = rep.decomposition->checks.monic;
        rep.palindromic = rep.decomposition->checks.palindromic;
        rep.content = rep.decomposition->content;
        return rep;
    }
    rep.alexander = present::order(p, present::OrderOptions{opt.max_minors});
    rep.content = laurent::content(rep.alexander);
    if (!rep.alexander.is_zero()) {
        using boost::multiprecision::abs;
        rep.monic = abs(rep.alexander.coeff(0)) == 1 && abs(rep.alexander.leading()) == 1;
    }
    // palindromic: t^deg * p(1/t) agrees with p up to units
    std::vector<std::pair<int, Int>> rev;
    for (const auto& [e, c] : rep.alexander.terms()) rev.emplace_back(-e, c);
    rep.palindromic =
        normalize_unit(laurent::LaurentPoly::from_pairs(rev)) == rep.alexander;
    return rep;
}

}  // namespace alexmod::knot
