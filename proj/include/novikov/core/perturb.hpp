#pragma once

// Rank-1 approximation of a class: every irrational symbol is replaced by its
// decimal shadow rounded to a fixed number of digits.

#include "novikov/orbifold/periods.hpp"

namespace novikov {

/// Round half away from zero to `digits` decimal places.
inline Rational round_decimal(const Rational& x, unsigned digits) {
    Integer scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    Rational y = x * scale;
    Integer n = numerator_of(y), d = denominator_of(y);
    Integer q = (abs_value(n) * 2 + d) / (2 * d);
    return Rational(n < 0 ? Integer(-q) : q, scale);
}

inline RationalCochain1 rank1_perturb(const SimplicialComplex& x, const RationalCochain1& xi, const PeriodHom& per, unsigned digits) {
    if (per.rank() == 0) throw InvalidInput("class has rank 0; nothing to perturb");
    if (per.rank() == 1) return xi;
    std::vector<Rational> value(xi.space.dimension());
    value[0] = 1;
    for (std::size_t s = 0; s < xi.space.symbols.size(); ++s) {
        if (!xi.space.shadows[s]) throw InvalidInput("symbol " + xi.space.symbols[s] + " has no decimal shadow");
        value[s + 1] = round_decimal(*xi.space.shadows[s], digits);
    }
    RationalCochain1 out = RationalCochain1::zero(x, PeriodSpace{});
    for (std::size_t e = 0; e < xi.values.size(); ++e) {
        Rational total = 0;
        for (std::size_t i = 0; i < value.size(); ++i) total += xi.values[e][i] * value[i];
        out.values[e] = {total};
    }
    if (period_homomorphism(x, out).rank() == 0)
        throw ValidationError("rounded periods all vanish; increase the precision");
    return out;
}

}  // namespace novikov
