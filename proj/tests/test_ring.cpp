#include "novikov/complex/smith.hpp"
#include "novikov/ring/laurent_matrix.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace novikov;

namespace {

const WeightSystem W1 = WeightSystem::single(1);

LaurentPoly poly(std::initializer_list<long> low_to_high, long shift = 0) {
    LaurentPoly p(1);
    long e = shift;
    for (long c : low_to_high) p.add_term({e++}, c);
    return p;
}

LocalizedScalar lz(std::initializer_list<long> c, long shift = 0) { return localized(poly(c, shift)); }

LaurentPoly random_poly(std::mt19937_64& rng, std::size_t nvars, int terms, long spread, long coeff) {
    LaurentPoly p(nvars);
    for (int t = 0; t < terms; ++t) {
        Exponent e(nvars);
        for (auto& x : e) x = static_cast<long>(rng() % static_cast<unsigned long>(2 * spread + 1)) - spread;
        p.add_term(e, static_cast<long>(rng() % static_cast<unsigned long>(2 * coeff + 1)) - coeff);
    }
    return p;
}

LaurentMatrix random_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n, std::size_t nvars, int zero_bias) {
    LaurentMatrix a(m, n, nvars);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (static_cast<int>(rng() % 10) >= zero_bias) a(i, j) = random_poly(rng, nvars, 1 + static_cast<int>(rng() % 3), 2, 3);
    return a;
}

}  // namespace

TEST(LaurentPoly, ArithmeticAndPrinting) {
    LaurentPoly t = LaurentPoly::variable(1, 0);
    LaurentPoly one = LaurentPoly::constant(1, 1);
    EXPECT_EQ((t - one) * (t + one), t * t - one);
    EXPECT_EQ(poly({3, 0, -2}, -1).str(), "-2*T + 3*T^-1");
    EXPECT_EQ((t - t).str(), "0");
    LaurentPoly xy = LaurentPoly::monomial({1, -1}, -1);
    EXPECT_EQ(xy.str(), "-T1*T2^-1");
    EXPECT_EQ(poly({1, 1}).evaluate({Rational(2)}), 3);
    EXPECT_EQ(poly({0, 1}, -2).evaluate({Rational(2)}), Rational(1, 2));
}

TEST(LaurentPoly, ExactDivision) {
    EXPECT_EQ(*divide_exact(poly({-1, 0, 1}), poly({-1, 1})), poly({1, 1}));
    EXPECT_EQ(*divide_exact(poly({2, 4}, 3), poly({1, 2}, -1)), poly({2}, 4));
    EXPECT_FALSE(divide_exact(poly({1, 0, 1}), poly({-1, 1})).has_value());
    EXPECT_FALSE(divide_exact(poly({1, 1}), poly({2})).has_value());
    // two variables: T1 is not a multiple of T1 + T2, and the search must stop
    LaurentPoly a = LaurentPoly::variable(2, 0), b = LaurentPoly::variable(2, 0) + LaurentPoly::variable(2, 1);
    EXPECT_FALSE(divide_exact(a, b).has_value());
    EXPECT_EQ(*divide_exact(a * b * b, b), a * b);
}

TEST(LaurentPoly, RandomProductsDivideBack) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t nvars = 1 + rng() % 3;
        LaurentPoly a = random_poly(rng, nvars, 4, 3, 5), b = random_poly(rng, nvars, 3, 2, 4);
        if (b.is_zero()) continue;
        auto q = divide_exact(a * b, b);
        ASSERT_TRUE(q.has_value());
        EXPECT_EQ(*q, a);
    }
}

TEST(WeightSystem, RejectsDependentWeights) {
    EXPECT_THROW(WeightSystem({{Rational(1)}, {Rational(2)}}), ValidationError);
    EXPECT_THROW(WeightSystem({{Rational(1), Rational(1)}, {Rational(-2), Rational(-2)}}), ValidationError);
    EXPECT_NO_THROW(WeightSystem({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}));
}

TEST(WeightSystem, LeadingTermFollowsTheWeights) {
    LaurentPoly p = poly({5, 0, 7});
    EXPECT_EQ(W1.leading_coefficient(p), 7);
    EXPECT_EQ(WeightSystem::single(-1).leading_coefficient(p), 5);
    // weights (1, 0) and (0, 1): the first coordinate dominates, so T1 beats T2^5
    WeightSystem ws({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
    LaurentPoly q = LaurentPoly::monomial({1, 0}, 3) + LaurentPoly::monomial({0, 5}, 2);
    EXPECT_EQ(ws.leading_coefficient(q), 3);
}

TEST(WeightSystem, MaximalMonomialIsUnique) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 10000; ++trial) {
        std::size_t r = 1 + rng() % 3, k = r + rng() % 2;
        std::vector<WeightVector> w;
        for (std::size_t j = 0; j < r; ++j) {
            WeightVector v(k);
            for (auto& x : v) x = Rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
            w.push_back(v);
        }
        std::optional<WeightSystem> ws;
        try {
            ws.emplace(w);
        } catch (const ValidationError&) {
            continue;
        }
        LaurentPoly p = random_poly(rng, r, 6, 4, 3);
        if (p.is_zero()) continue;
        Exponent top = ws->leading_exponent(p);
        int at_max = 0;
        for (const auto& [e, c] : p.terms()) {
            EXPECT_FALSE(ws->weight(top) < ws->weight(e));
            if (ws->weight(e) == ws->weight(top)) ++at_max;
        }
        EXPECT_EQ(at_max, 1);
    }
}

TEST(IntPoly, SubresultantGcd) {
    IntPoly a({-1, 0, 1}), b({-1, 1});
    EXPECT_EQ(gcd(a, b), b);
    EXPECT_EQ(gcd(IntPoly({1, 2}), IntPoly::constant(2)), IntPoly::constant(1));
    EXPECT_EQ(gcd(IntPoly::constant(4), IntPoly::constant(6)), IntPoly::constant(2));
    // Knuth's example: coprime polynomials of degree 8 and 6
    IntPoly u({-5, 2, 8, -3, -3, 0, 1, 0, 1}), v({21, -9, -4, 0, 5, 0, 3});
    EXPECT_EQ(gcd(u, v), IntPoly::constant(1));
}

TEST(IntPoly, GcdOfRandomProducts) {
    std::mt19937_64 rng(7);
    auto random_int_poly = [&](int deg) {
        std::vector<Integer> c;
        for (int i = 0; i <= deg; ++i) c.emplace_back(static_cast<long>(rng() % 11) - 5);
        return IntPoly(c);
    };
    for (int trial = 0; trial < 200; ++trial) {
        IntPoly g = random_int_poly(static_cast<int>(rng() % 3)), a = random_int_poly(static_cast<int>(rng() % 4)),
                b = random_int_poly(static_cast<int>(rng() % 4));
        if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
        IntPoly d = gcd(g * a, g * b);
        EXPECT_TRUE(divide_exact(g * a, d).has_value());
        EXPECT_TRUE(divide_exact(g * b, d).has_value());
        EXPECT_TRUE(divide_exact(d, g).has_value());
        EXPECT_GT(d.lead(), 0);
    }
}

TEST(Localized, IsUnitExamples) {
    EXPECT_TRUE(is_unit(lz({-1, 1}), W1));
    EXPECT_FALSE(is_unit(lz({1, 2}), W1));
    EXPECT_TRUE(is_unit(lz({1}), W1));
    EXPECT_FALSE(is_unit(lz({}), W1));
    EXPECT_TRUE(is_unit(lz({1, 2}), WeightSystem::single(-1)));
}

TEST(Localized, GcdExamples) {
    EXPECT_EQ(localized_gcd(lz({2}), lz({4}), W1).num, poly({2}));
    auto g = localized_gcd(lz({-1, 1}), lz({-1, 0, 1}), W1);
    EXPECT_EQ(g.num, poly({-1, 1}));
    EXPECT_TRUE(is_unit(g, W1));
    EXPECT_TRUE(associates(g, lz({1}), W1));
    EXPECT_EQ(localized_gcd(lz({1, 2}), lz({2}), W1).num, poly({1}));
    EXPECT_THROW(localized_gcd(lz({}), lz({}), W1), InvalidInput);
}

TEST(Localized, AssociatesExamples) {
    EXPECT_TRUE(associates(lz({-1, 1}), lz({1}), W1));
    EXPECT_FALSE(associates(lz({2}), lz({6}), W1));
    EXPECT_TRUE(associates(lz({2}), lz({0, 2}), W1));
    EXPECT_FALSE(associates(lz({1, 2}), lz({1}), W1));
    EXPECT_TRUE(associates(lz({1, 2}), lz({1}), WeightSystem::single(-1)));
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPoly p = random_poly(rng, 1, 4, 3, 5);
        if (p.is_zero()) continue;
        EXPECT_TRUE(associates(localized(p), localized(p), W1));
    }
}

TEST(Localized, DenominatorsMustLieInTheMultiplicativeSet) {
    EXPECT_THROW(make_localized(poly({1}), poly({1, 2}), W1), ValidationError);
    auto x = make_localized(poly({-1, 0, 1}), poly({1, -1}), W1);  // (T^2 - 1) / (1 - T)
    EXPECT_EQ(x.num, poly({-1, -1}));
    EXPECT_EQ(x.den, poly({1}));
}

TEST(Localized, UnitsAreMultiplicative) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        WeightSystem ws = WeightSystem::single(rng() % 2 ? 1 : -1);
        auto x = localized(random_poly(rng, 1, 3, 3, 2)), y = localized(random_poly(rng, 1, 3, 3, 2));
        if (x.is_zero() || y.is_zero()) continue;
        EXPECT_EQ(is_unit(x * y, ws), is_unit(x, ws) && is_unit(y, ws));
    }
    // same in two variables under a lexicographic order
    WeightSystem ws2({{Rational(1), Rational(0)}, {Rational(3), Rational(1)}});
    for (int trial = 0; trial < 300; ++trial) {
        auto x = localized(random_poly(rng, 2, 3, 2, 2)), y = localized(random_poly(rng, 2, 3, 2, 2));
        if (x.is_zero() || y.is_zero()) continue;
        EXPECT_EQ(is_unit(x * y, ws2), is_unit(x, ws2) && is_unit(y, ws2));
    }
}

TEST(Localized, GcdLaws) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        auto x = localized(random_poly(rng, 1, 3, 2, 4)), y = localized(random_poly(rng, 1, 3, 2, 4)),
             z = localized(random_poly(rng, 1, 3, 2, 4));
        if (x.is_zero() || y.is_zero() || z.is_zero()) continue;
        auto g = localized_gcd(x, y, W1);
        EXPECT_TRUE(associates(g, localized_gcd(y, x, W1), W1));
        EXPECT_TRUE(divides(g, x, W1));
        EXPECT_TRUE(divides(g, y, W1));
        EXPECT_TRUE(associates(localized_gcd(g, z, W1), localized_gcd(x, localized_gcd(y, z, W1), W1), W1));
    }
}

TEST(Localized, MultivariateTorsionIsUnsupported) {
    WeightSystem ws({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
    auto x = localized(LaurentPoly::constant(2, 2));
    EXPECT_THROW(localized_gcd(x, x, ws), UnsupportedOperation);
    EXPECT_THROW(associates(x, x, ws), UnsupportedOperation);
    LaurentMatrix a(1, 1, 2);
    a(0, 0) = x.num;
    EXPECT_THROW(invariant_factors(a, ws), UnsupportedOperation);
    EXPECT_EQ(fraction_field_rank(a), 1u);
}

TEST(FractionFieldRank, Examples) {
    LaurentMatrix a(1, 1, 1);
    a(0, 0) = poly({-1, 1});
    EXPECT_EQ(fraction_field_rank(a), 1u);
    LaurentMatrix b(2, 2, 1);
    b(0, 0) = poly({0, 1});
    b(0, 1) = poly({1});
    b(1, 0) = poly({0, 0, 1});
    b(1, 1) = poly({0, 1});
    EXPECT_EQ(fraction_field_rank(b), 1u);
    EXPECT_EQ(fraction_field_rank(b, false), 1u);
    EXPECT_EQ(fraction_field_rank(LaurentMatrix(3, 4, 1)), 0u);
    EXPECT_EQ(fraction_field_rank(LaurentMatrix(0, 4, 1)), 0u);
}

TEST(FractionFieldRank, IntegerMatricesMatchRationalRank) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t m = 1 + rng() % 6, n = 1 + rng() % 6;
        IntMatrix x(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) x(i, j) = static_cast<long>(rng() % 5) - 2;
        EXPECT_EQ(fraction_field_rank(LaurentMatrix::from_integers(x)), rank_over_rationals(x));
    }
}

TEST(FractionFieldRank, PrepassAgreesWithPlainBareiss) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t nvars = 1 + rng() % 2;
        auto a = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5, nvars, 4);
        // plant a dependent row
        if (a.rows() > 1)
            for (std::size_t j = 0; j < a.cols(); ++j) a(a.rows() - 1, j) = LaurentPoly::variable(nvars, 0) * a(0, j);
        EXPECT_EQ(fraction_field_rank(a, true), fraction_field_rank(a, false));
    }
}

TEST(FractionFieldRank, SchwartzZippelSanity) {
    std::mt19937_64 rng(15);
    int agree = 0, total = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t nvars = 1 + rng() % 2;
        auto a = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5, nvars, 5);
        std::size_t symbolic = fraction_field_rank(a);
        std::vector<Rational> t(nvars);
        for (auto& x : t) x = 50 + static_cast<long>(rng() % 1000);
        std::size_t numeric = rank_over_rationals(a.evaluated(t));
        EXPECT_LE(numeric, symbolic);
        ++total;
        if (numeric == symbolic) ++agree;
    }
    EXPECT_GE(agree * 100, total * 95);
}

TEST(InvariantFactors, Examples) {
    LaurentMatrix a(2, 2, 1);
    a(0, 0) = poly({-1, 1});
    a(1, 1) = poly({2});
    auto f = invariant_factors(a, W1);
    EXPECT_EQ(f.rank, 2u);
    EXPECT_EQ(f.nonunit_count, 1u);
    ASSERT_EQ(f.factors.size(), 2u);
    EXPECT_TRUE(is_unit(f.factors[0], W1));
    EXPECT_EQ(f.factors[1].num, poly({2}));

    LaurentMatrix circle(1, 1, 1);
    circle(0, 0) = poly({-1, 1});
    auto c = invariant_factors(circle, W1);
    EXPECT_EQ(c.rank, 1u);
    EXPECT_EQ(c.nonunit_count, 0u);

    auto z = invariant_factors(LaurentMatrix(2, 3, 1), W1);
    EXPECT_EQ(z.rank, 0u);
    EXPECT_TRUE(z.factors.empty());
}

TEST(InvariantFactors, DeterminantalStageFindsTwoTMinusOne) {
    // (2T - 1) is not a unit for positive weight; diag(2T - 1, 2T - 1) has two nonunit factors
    LaurentMatrix a(2, 2, 1);
    a(0, 0) = poly({-1, 2});
    a(1, 1) = poly({-1, 2});
    auto f = invariant_factors(a, W1);
    EXPECT_EQ(f.nonunit_count, 2u);
    // and none once the weight is negative: the maximal-weight coefficient is then -1
    EXPECT_EQ(invariant_factors(a, WeightSystem::single(-1)).nonunit_count, 0u);
    // [[2, 2T+1]] is a row whose entries generate the unit ideal
    LaurentMatrix b(1, 2, 1);
    b(0, 0) = poly({2});
    b(0, 1) = poly({1, 2});
    auto g = invariant_factors(b, W1);
    EXPECT_EQ(g.rank, 1u);
    EXPECT_EQ(g.nonunit_count, 0u);
}

TEST(InvariantFactors, IntegerMatricesMatchSmithForm) {
    std::mt19937_64 rng(16);
    const WeightSystem w0;
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t m = 1 + rng() % 6, n = 1 + rng() % 6;
        IntMatrix x(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) x(i, j) = rng() % 3 ? static_cast<long>(rng() % 9) - 4 : 0;
        auto snf = smith_normal_form(x);
        auto f = invariant_factors(LaurentMatrix::from_integers(x), w0);
        EXPECT_EQ(f.rank, snf.rank);
        std::vector<Integer> ring_nonunits;
        for (const auto& d : f.factors)
            if (!is_unit(d, w0)) ring_nonunits.push_back(abs_value(d.num.terms().begin()->second));
        EXPECT_EQ(ring_nonunits, snf.nonunit_factors()) << x.str();
    }
}

TEST(InvariantFactors, UnitStageDoesNotChangeTheAnswer) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        WeightSystem ws = WeightSystem::single(rng() % 2 ? 1 : -1);
        auto a = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5, 1, 4);
        auto with = invariant_factors(a, ws, {true, 8});
        auto without = invariant_factors(a, ws, {false, 8});
        EXPECT_EQ(with.rank, without.rank);
        EXPECT_EQ(with.nonunit_count, without.nonunit_count);
        ASSERT_EQ(with.factors.size(), without.factors.size());
        for (std::size_t i = 0; i < with.factors.size(); ++i) EXPECT_TRUE(associates(with.factors[i], without.factors[i], ws));
        EXPECT_EQ(with.rank, fraction_field_rank(a));
    }
}

TEST(InvariantFactors, ResidualCapIsEnforced) {
    LaurentMatrix a = LaurentMatrix::from_integers(IntMatrix(9, 9), 1);
    for (std::size_t i = 0; i < 9; ++i) a(i, i) = poly({2});
    EXPECT_THROW(invariant_factors(a, W1), UnsupportedOperation);
    for (std::size_t i = 0; i < 9; ++i) a(i, i) = poly({1});
    EXPECT_EQ(invariant_factors(a, W1).rank, 9u);
}
