#pragma once

// The localization S^{-1} Z[T^{+-1}] where S is the set of Laurent polynomials whose
// monomial of maximal weight has coefficient 1.
//
// A product has leading coefficient equal to the product of the leading
// coefficients, so x is a unit exactly when its numerator's leading coefficient is
// +-1.  For gcd and associate tests with r <= 1 everything reduces to Z[T]: a
// primitive integer polynomial whose extreme coefficient is +-1 has every
// irreducible factor with extreme coefficient +-1, so it is a unit, and no
// factorization is ever needed.

#include "novikov/ring/int_poly.hpp"

namespace novikov {

struct LocalizedScalar {
    LaurentPoly num;
    LaurentPoly den;

    bool is_zero() const { return num.is_zero(); }
    std::string str() const {
        if (den == LaurentPoly::constant(den.nvars(), 1)) return num.str();
        return "(" + num.str() + ")/(" + den.str() + ")";
    }
};

namespace detail {

/// A univariate polynomial as a Laurent polynomial in `nvars` (0 or 1) variables.
inline LaurentPoly from_int_poly(const IntPoly& p, std::size_t nvars, long shift = 0) {
    if (nvars == 0) return p.is_zero() ? LaurentPoly(0) : LaurentPoly::constant(0, p[0]);
    return p.to_laurent(shift);
}

/// Coefficient of maximal weight of T^shift * p (p(0) != 0) for r <= 1.
inline Integer leading_coefficient(const IntPoly& p, const WeightSystem& ws) {
    if (ws.nvars() == 0) return p[0];
    const WeightVector& w = ws.weights()[0];
    const bool positive = *std::find_if(w.begin(), w.end(), [](const Rational& x) { return x != 0; }) > 0;
    return positive ? p.lead() : p[0];
}

inline void require_univariate(const WeightSystem& ws, const char* what) {
    if (ws.nvars() > 1)
        throw UnsupportedOperation(std::string(what) + " needs rank r <= 1 (got r = " + std::to_string(ws.nvars()) + ")");
}

/// (a_num / a_den) reduced in Z[T]: returns (p, q) coprime with q's leading
/// coefficient positive.  Monomial factors are dropped since they are units.
inline std::pair<IntPoly, IntPoly> reduced_fraction(const LaurentPoly& n, const LaurentPoly& d, const WeightSystem& ws) {
    IntPoly p = split_monomial(n).second, q = split_monomial(d).second;
    if (q.is_zero()) throw std::domain_error("zero denominator");
    IntPoly g = gcd(p, q);
    if (!p.is_zero()) {
        p = *divide_exact(p, g);
        q = *divide_exact(q, g);
    } else {
        q = IntPoly::constant(1);
    }
    if (leading_coefficient(q, ws) < 0) {
        p = Integer(-1) * p;
        q = Integer(-1) * q;
    }
    return {p, q};
}

}  // namespace detail

/// Builds num/den, checking den in S up to sign.  For r <= 1 the fraction is reduced.
inline LocalizedScalar make_localized(const LaurentPoly& num, const LaurentPoly& den, const WeightSystem& ws) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    Integer lead = ws.leading_coefficient(den);
    if (abs_value(lead) != 1) throw ValidationError("denominator " + den.str() + " is not in the multiplicative set");
    if (ws.nvars() > 1) return lead > 0 ? LocalizedScalar{num, den} : LocalizedScalar{-num, -den};
    auto [p, q] = detail::reduced_fraction(num, den, ws);
    long shift = split_monomial(num).first - split_monomial(den).first;
    if (num.is_zero()) shift = 0;
    return {detail::from_int_poly(p, ws.nvars(), shift), detail::from_int_poly(q, ws.nvars())};
}

inline LocalizedScalar localized(const LaurentPoly& p) { return {p, LaurentPoly::constant(p.nvars(), 1)}; }

inline bool is_unit(const LocalizedScalar& x, const WeightSystem& ws) {
    return !x.is_zero() && abs_value(ws.leading_coefficient(x.num)) == 1;
}

/// gcd up to units, as a polynomial representative with positive leading coefficient.
inline LocalizedScalar localized_gcd(const LocalizedScalar& x, const LocalizedScalar& y, const WeightSystem& ws) {
    detail::require_univariate(ws, "localized gcd");
    if (x.is_zero() && y.is_zero()) throw InvalidInput("gcd of two zeros");
    IntPoly g = gcd(split_monomial(x.num).second, split_monomial(y.num).second);
    if (detail::leading_coefficient(g, ws) < 0) g = Integer(-1) * g;
    return localized(detail::from_int_poly(g, ws.nvars()));
}

/// x / y is a unit.
inline bool associates(const LocalizedScalar& x, const LocalizedScalar& y, const WeightSystem& ws) {
    detail::require_univariate(ws, "associate test");
    if (x.is_zero() && y.is_zero()) throw std::domain_error("associate test of zero and zero");
    if (x.is_zero() || y.is_zero()) return false;
    auto [p, q] = detail::reduced_fraction(x.num * y.den, x.den * y.num, ws);
    return abs_value(detail::leading_coefficient(p, ws)) == 1 && abs_value(detail::leading_coefficient(q, ws)) == 1;
}

/// x divides y in the localized ring.
inline bool divides(const LocalizedScalar& x, const LocalizedScalar& y, const WeightSystem& ws) {
    detail::require_univariate(ws, "divisibility test");
    if (y.is_zero()) return true;
    if (x.is_zero()) return false;
    auto [p, q] = detail::reduced_fraction(y.num * x.den, y.den * x.num, ws);
    return abs_value(detail::leading_coefficient(q, ws)) == 1;
}

/// y / x when x divides y, reduced.
inline LocalizedScalar quotient(const LocalizedScalar& y, const LocalizedScalar& x, const WeightSystem& ws) {
    detail::require_univariate(ws, "localized division");
    if (x.is_zero()) throw std::domain_error("division by zero");
    auto [p, q] = detail::reduced_fraction(y.num * x.den, y.den * x.num, ws);
    if (abs_value(detail::leading_coefficient(q, ws)) != 1) throw std::logic_error("quotient is not in the localized ring");
    return make_localized(detail::from_int_poly(p, ws.nvars()), detail::from_int_poly(q, ws.nvars()), ws);
}

inline LocalizedScalar operator*(const LocalizedScalar& a, const LocalizedScalar& b) { return {a.num * b.num, a.den * b.den}; }

}  // namespace novikov
