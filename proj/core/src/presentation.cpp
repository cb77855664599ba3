#include "alexmod/presentation.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>

namespace alexmod::present {

using laurent::LaurentMatrix;
using laurent::LaurentPoly;

LambdaPresentation::LambdaPresentation(std::size_t r, std::size_t s, LaurentMatrix m)
    : relators(r), generators(s), matrix(std::move(m)) {
    if (matrix.rows() != relators || matrix.cols() != generators)
        throw DimensionError("LambdaPresentation: matrix shape does not match counts");
}

LambdaPresentation LambdaPresentation::from_matrix(LaurentMatrix m) {
    std::size_t r = m.rows(), s = m.cols();
    return LambdaPresentation(r, s, std::move(m));
}

namespace {

Int binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    Int b = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        b *= Int(n - k + i);
        b /= Int(i);
    }
    return b;
}

}  // namespace

LaurentPoly order(const LambdaPresentation& p, const OrderOptions& opt) {
    const std::size_t r = p.relators, s = p.generators;
    if (s == 0) return LaurentPoly(1);  // zero module, empty minor
    if (r < s) return LaurentPoly();    // zero-row padding kills every minor

    Int count = binomial(r, s);
    if (count > opt.max_minors) {
        std::ostringstream os;
        os << "order: " << count << " maximal minors exceed the cap of " << opt.max_minors;
        throw ResourceLimitError(os.str());
    }

    const LaurentPoly one(1);
    LaurentPoly g;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
        g = laurent::gcd(g, det_laurent(p.matrix.select_rows(idx)));
        if (g == one) break;  // gcd is a unit, no further minor can change it
        // advance the row subset lexicographically
        std::size_t i = s;
        while (i-- > 0) {
            if (idx[i] != i + r - s) {
                ++idx[i];
                for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return normalize_unit(g);
        }
    }
    return normalize_unit(g);
}

ShiftNormalization shift_normalize(const LambdaPresentation& p) {
    ShiftNormalization out;
    const std::size_t s = p.generators;

    // drop identically-zero relator rows
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < p.relators; ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < s && zero; ++j)
            if (!p.matrix(i, j).is_zero()) zero = false;
        if (!zero) kept.push_back(i);
    }

    LaurentMatrix m = p.matrix.select_rows(kept);
    const std::size_t r = kept.size();

    // unit-scale each relator so its lowest exponent is 0
    out.relator_shifts.resize(r);
    for (std::size_t i = 0; i < r; ++i) {
        int mn = std::numeric_limits<int>::max();
        for (std::size_t j = 0; j < s; ++j)
            if (!m(i, j).is_zero()) mn = std::min(mn, m(i, j).ord());
        out.relator_shifts[i] = -mn;
        if (mn != 0)
            for (std::size_t j = 0; j < s; ++j)
                if (!m(i, j).is_zero()) m(i, j) = m(i, j).shifted(-mn);
    }

    // unit-scale each generator column so its lowest exponent is 0
    out.generator_shifts.resize(s, 0);
    out.max_level.resize(s, 0);
    for (std::size_t j = 0; j < s; ++j) {
        int mn = std::numeric_limits<int>::max();
        int mx = std::numeric_limits<int>::min();
        for (std::size_t i = 0; i < r; ++i) {
            if (m(i, j).is_zero()) continue;
            mn = std::min(mn, m(i, j).ord());
            mx = std::max(mx, m(i, j).deg());
        }
        if (mn == std::numeric_limits<int>::max()) {
            out.free_generators.push_back(j);
            continue;
        }
        out.generator_shifts[j] = -mn;
        if (mn != 0)
            for (std::size_t i = 0; i < r; ++i)
                if (!m(i, j).is_zero()) m(i, j) = m(i, j).shifted(-mn);
        out.max_level[j] = mx - mn;
    }

    out.presentation = LambdaPresentation(r, s, std::move(m));
    return out;
}

LambdaPresentation direct_sum(const LambdaPresentation& a, const LambdaPresentation& b) {
    LaurentMatrix m(a.relators + b.relators, a.generators + b.generators);
    for (std::size_t i = 0; i < a.relators; ++i)
        for (std::size_t j = 0; j < a.generators; ++j) m(i, j) = a.matrix(i, j);
    for (std::size_t i = 0; i < b.relators; ++i)
        for (std::size_t j = 0; j < b.generators; ++j)
            m(a.relators + i, a.generators + j) = b.matrix(i, j);
    return LambdaPresentation(a.relators + b.relators, a.generators + b.generators,
                              std::move(m));
}

LambdaPresentation simplify(const LambdaPresentation& p) {
    std::vector<std::vector<LaurentPoly>> m(p.relators,
                                            std::vector<LaurentPoly>(p.generators));
    for (std::size_t i = 0; i < p.relators; ++i)
        for (std::size_t j = 0; j < p.generators; ++j) m[i][j] = p.matrix(i, j);
    std::vector<bool> row_alive(p.relators, true), col_alive(p.generators, true);

    auto is_unit = [](const LaurentPoly& q) {
        if (q.terms().size() != 1) return false;
        const Int& c = q.terms().begin()->second;
        return c == 1 || c == -1;
    };

    for (;;) {
        std::size_t ui = p.relators, uj = p.generators;
        for (std::size_t i = 0; i < p.relators && ui == p.relators; ++i) {
            if (!row_alive[i]) continue;
            for (std::size_t j = 0; j < p.generators; ++j) {
                if (!col_alive[j]) continue;
                if (is_unit(m[i][j])) {
                    ui = i;
                    uj = j;
                    break;
                }
            }
        }
        if (ui == p.relators) break;
        // inverse of the unit +-t^k is +-t^(-k)
        const auto& [ue, uc] = *m[ui][uj].terms().begin();
        LaurentPoly inv = LaurentPoly::term(uc, -ue);
        for (std::size_t i = 0; i < p.relators; ++i) {
            if (!row_alive[i] || i == ui || m[i][uj].is_zero()) continue;
            LaurentPoly q = m[i][uj] * inv;
            for (std::size_t j = 0; j < p.generators; ++j) {
                if (!col_alive[j]) continue;
                m[i][j] = m[i][j] - q * m[ui][j];
            }
        }
        for (std::size_t j = 0; j < p.generators; ++j) {
            if (!col_alive[j] || j == uj || m[ui][j].is_zero()) continue;
            LaurentPoly q = m[ui][j] * inv;
            for (std::size_t i = 0; i < p.relators; ++i) {
                if (!row_alive[i]) continue;
                m[i][j] = m[i][j] - m[i][uj] * q;
            }
        }
        row_alive[ui] = false;
        col_alive[uj] = false;
    }

    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < p.generators; ++j)
        if (col_alive[j]) cols.push_back(j);
    std::vector<LaurentPoly> out;
    std::size_t r = 0;
    for (std::size_t i = 0; i < p.relators; ++i) {
        if (!row_alive[i]) continue;
        bool zero = true;
        for (std::size_t j : cols) zero &= m[i][j].is_zero();
        if (zero) continue;
        for (std::size_t j : cols) out.push_back(m[i][j]);
        ++r;
    }
    return LambdaPresentation(r, cols.size(), LaurentMatrix(r, cols.size(), std::move(out)));
}

LambdaPresentation unimodular_scramble(const LambdaPresentation& p, std::uint64_t seed,
                                       std::optional<std::size_t> ops) {
    const std::size_t r = p.relators, s = p.generators;
    LaurentMatrix m = p.matrix;
    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
    auto unit = [&]() {
        int e = static_cast<int>(pick(5)) - 2;
        bool neg = pick(2) == 1;
        return LaurentPoly::term(neg ? Int(-1) : Int(1), e);
    };

    std::size_t n_ops = ops.value_or(3 * (r + s) + 4);
    for (std::size_t step = 0; step < n_ops; ++step) {
        switch (pick(6)) {
        case 0: {  // row swap
            if (r < 2) break;
            std::size_t i = pick(r), j = pick(r);
            if (i == j) break;
            for (std::size_t c = 0; c < s; ++c) std::swap(m(i, c), m(j, c));
            break;
        }
        case 1: {  // row unit scale
            if (r < 1) break;
            std::size_t i = pick(r);
            LaurentPoly u = unit();
            for (std::size_t c = 0; c < s; ++c) m(i, c) = m(i, c) * u;
            break;
        }
        case 2: {  // row j += t^k * row i
            if (r < 2) break;
            std::size_t i = pick(r), j = pick(r);
            LaurentPoly u = unit();
            if (i == j) break;
            for (std::size_t c = 0; c < s; ++c) m(j, c) = m(j, c) + u * m(i, c);
            break;
        }
        case 3: {  // column swap
            if (s < 2) break;
            std::size_t i = pick(s), j = pick(s);
            if (i == j) break;
            for (std::size_t row = 0; row < r; ++row) std::swap(m(row, i), m(row, j));
            break;
        }
        case 4: {  // column unit scale
            if (s < 1) break;
            std::size_t i = pick(s);
            LaurentPoly u = unit();
            for (std::size_t row = 0; row < r; ++row) m(row, i) = m(row, i) * u;
            break;
        }
        case 5: {  // column j += t^k * column i
            if (s < 2) break;
            std::size_t i = pick(s), j = pick(s);
            LaurentPoly u = unit();
            if (i == j) break;
            for (std::size_t row = 0; row < r; ++row) m(row, j) = m(row, j) + u * m(row, i);
            break;
        }
        }
    }
    return LambdaPresentation(r, s, std::move(m));
}

}  // namespace alexmod::present
