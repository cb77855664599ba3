#include "alexmod/laurent_poly.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <sstream>

namespace alexmod::laurent {

namespace {
using boost::multiprecision::abs;
using boost::multiprecision::gcd;  // integer gcd
}  // namespace

LaurentPoly LaurentPoly::from_pairs(const std::vector<std::pair<int, Int>>& pairs) {
    LaurentPoly p;
    for (const auto& [e, c] : pairs) {
        if (c == 0) continue;
        Int& slot = p.terms_[e];
        slot += c;
        if (slot == 0) p.terms_.erase(e);
    }
    return p;
}

std::vector<std::pair<int, Int>> LaurentPoly::pairs() const {
    return {terms_.begin(), terms_.end()};
}

int LaurentPoly::ord() const {
    if (terms_.empty()) throw Error("ord: undefined for the zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::deg() const {
    if (terms_.empty()) throw Error("deg: undefined for the zero polynomial");
    return terms_.rbegin()->first;
}

Int LaurentPoly::leading() const {
    if (terms_.empty()) throw Error("leading: undefined for the zero polynomial");
    return terms_.rbegin()->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) {
        Int& slot = r.terms_[e];
        slot += c;
        if (slot == 0) r.terms_.erase(e);
    }
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) {
        Int& slot = r.terms_[e];
        slot -= c;
        if (slot == 0) r.terms_.erase(e);
    }
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Int& slot = r.terms_[e1 + e2];
            slot += c1 * c2;
            if (slot == 0) r.terms_.erase(e1 + e2);
        }
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
    return r;
}

LaurentPoly LaurentPoly::scaled(const Int& s) const {
    LaurentPoly r;
    if (s == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_[e] = c * s;
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool neg = c < 0;
        Int mag = abs(c);
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (e == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

LaurentPoly normalize_unit(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    LaurentPoly q = p.shifted(-p.ord());
    if (q.leading() < 0) return -q;
    return q;
}

Int content(const LaurentPoly& p) {
    Int g = 0;
    for (const auto& [e, c] : p.terms()) {
        g = gcd(g, c);
        if (g == 1) break;
    }
    return abs(g);
}

namespace {

// Dense ordinary polynomial in Z[t], index = exponent. Invariant: empty or
// nonzero leading coefficient.
using Dense = std::vector<Int>;

Dense to_dense(const LaurentPoly& p) {
    // caller guarantees ord(p) == 0
    Dense d(static_cast<std::size_t>(p.deg()) + 1);
    for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e)] = c;
    return d;
}

LaurentPoly from_dense(const Dense& d, int shift) {
    std::vector<std::pair<int, Int>> pairs;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0) pairs.emplace_back(static_cast<int>(i) + shift, d[i]);
    return LaurentPoly::from_pairs(pairs);
}

void trim(Dense& d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
}

Int dense_content(const Dense& d) {
    Int g = 0;
    for (const Int& c : d) {
        g = gcd(g, c);
        if (g == 1) break;
    }
    return abs(g);
}

Dense primitive_part(Dense d) {
    trim(d);
    Int c = dense_content(d);
    if (c > 1)
        for (Int& x : d) x /= c;
    return d;
}

// Pseudo-remainder style reduction: repeatedly scale by the divisor's
// leading coefficient and cancel the top term. The result is a unit-scalar
// multiple of the true pseudo-remainder, which is all the PRS needs since
// we take primitive parts afterwards.
Dense pseudo_rem(Dense u, const Dense& v) {
    const Int& lv = v.back();
    while (u.size() >= v.size()) {
        Int lu = u.back();
        std::size_t shift = u.size() - v.size();
        for (Int& x : u) x *= lv;
        for (std::size_t i = 0; i < v.size(); ++i) u[shift + i] -= lu * v[i];
        trim(u);
        if (u.empty()) break;
    }
    return u;
}

// gcd of primitive nonzero polynomials in Z[t], primitive output.
Dense primitive_gcd(Dense a, Dense b) {
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        Dense r = pseudo_rem(a, b);
        a = std::move(b);
        b = primitive_part(std::move(r));
    }
    return primitive_part(std::move(a));
}

}  // namespace

std::optional<LaurentPoly> exact_div(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw Error("exact_div: division by zero");
    if (num.is_zero()) return LaurentPoly();
    Dense a = to_dense(num.shifted(-num.ord()));
    Dense b = to_dense(den.shifted(-den.ord()));
    if (a.size() < b.size()) return std::nullopt;
    Dense q(a.size() - b.size() + 1);
    for (std::size_t i = q.size(); i-- > 0;) {
        const Int& top = a[b.size() - 1 + i];
        if (top == 0) continue;
        if (top % b.back() != 0) return std::nullopt;
        q[i] = top / b.back();
        for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= q[i] * b[j];
    }
    for (const Int& c : a)
        if (c != 0) return std::nullopt;
    return from_dense(q, num.ord() - den.ord());
}

bool divides(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero()) {
        if (q.is_zero()) return true;
        throw Error("divides: zero divisor with nonzero dividend");
    }
    return exact_div(q, p).has_value();
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPoly();
    if (a.is_zero()) return normalize_unit(b);
    if (b.is_zero()) return normalize_unit(a);
    Dense da = to_dense(a.shifted(-a.ord()));
    Dense db = to_dense(b.shifted(-b.ord()));
    Int ca = dense_content(da), cb = dense_content(db);
    Dense g = primitive_gcd(primitive_part(std::move(da)), primitive_part(std::move(db)));
    Int cg = boost::multiprecision::gcd(ca, cb);
    for (Int& x : g) x *= cg;
    return normalize_unit(from_dense(g, 0));
}

}  // namespace alexmod::laurent
