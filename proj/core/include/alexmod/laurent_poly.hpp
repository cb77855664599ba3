#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alexmod/int_matrix.hpp"

namespace alexmod::laurent {

/// Element of Z[t, t^-1]: a finite map from exponent to nonzero coefficient.
/// The zero polynomial is the empty map. No stored coefficient is ever zero.
class LaurentPoly {
public:
    using Terms = std::map<int, Int>;

    LaurentPoly() = default;
    explicit LaurentPoly(Int constant) {
        if (constant != 0) terms_[0] = std::move(constant);
    }
    explicit LaurentPoly(long long constant) : LaurentPoly(Int(constant)) {}

    /// Single term c * t^e.
    static LaurentPoly term(Int c, int e) {
        LaurentPoly p;
        if (c != 0) p.terms_[e] = std::move(c);
        return p;
    }

    /// Build from [exponent, coefficient] pairs. Repeated exponents
    /// accumulate; zero coefficients are dropped.
    static LaurentPoly from_pairs(const std::vector<std::pair<int, Int>>& pairs);

    const Terms& terms() const { return terms_; }
    std::vector<std::pair<int, Int>> pairs() const;

    bool is_zero() const { return terms_.empty(); }

    /// Lowest exponent. Undefined for zero (throws).
    int ord() const;
    /// Highest exponent. Undefined for zero (throws).
    int deg() const;

    Int coeff(int e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Int(0) : it->second;
    }
    /// Coefficient of t^deg. Undefined for zero (throws).
    Int leading() const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;

    /// Multiplication by t^k.
    LaurentPoly shifted(int k) const;
    LaurentPoly scaled(const Int& c) const;

    bool operator==(const LaurentPoly& o) const = default;

    /// Human-readable form: descending powers, explicit signs, `t^k`
    /// notation, coefficient 1 omitted. Example: "2*t - 2", "t^2 - t + 1".
    std::string str() const;

private:
    Terms terms_;
};

/// Canonical associate: 0 -> 0; otherwise the unique (+-t^i)·p with lowest
/// exponent 0 and positive leading coefficient.
LaurentPoly normalize_unit(const LaurentPoly& p);

/// gcd of all coefficients, >= 0; content(0) = 0.
Int content(const LaurentPoly& p);

/// Exact quotient num/den in Z[t, t^-1], or nullopt when den does not
/// divide num. den must be nonzero.
std::optional<LaurentPoly> exact_div(const LaurentPoly& num, const LaurentPoly& den);

/// True iff q = p·r for some r in the ring. divides(0, 0) is true by
/// convention; p = 0 with q != 0 throws.
bool divides(const LaurentPoly& p, const LaurentPoly& q);

/// Greatest common divisor in the UFD Z[t, t^-1], in normalize_unit
/// canonical form. gcd(0, 0) = 0. Content/primitive split plus a primitive
/// pseudo-remainder sequence on the primitive parts.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace alexmod::laurent
