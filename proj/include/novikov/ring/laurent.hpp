#pragma once

// Laurent polynomials over Z in r variables and the weight systems that order
// their monomials.

#include "novikov/complex/int_matrix.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace novikov {

using Exponent = std::vector<long>;
using WeightVector = std::vector<Rational>;

inline Exponent operator+(Exponent a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}
inline Exponent operator-(Exponent a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}
inline Exponent operator-(Exponent a) {
    for (auto& x : a) x = -x;
    return a;
}

/// Element of Z[T_1^{+-1}, ..., T_r^{+-1}].  Terms are kept in a map keyed by the
/// exponent vector (lexicographic order), zero coefficients are never stored.
class LaurentPoly {
public:
    explicit LaurentPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static LaurentPoly constant(std::size_t nvars, const Integer& c) {
        LaurentPoly p(nvars);
        p.add_term(Exponent(nvars, 0), c);
        return p;
    }
    static LaurentPoly monomial(const Exponent& e, const Integer& c = 1) {
        LaurentPoly p(e.size());
        p.add_term(e, c);
        return p;
    }
    static LaurentPoly variable(std::size_t nvars, std::size_t j, long power = 1) {
        Exponent e(nvars, 0);
        e.at(j) = power;
        return monomial(e);
    }

    std::size_t nvars() const { return nvars_; }
    const std::map<Exponent, Integer>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    bool is_monomial() const { return terms_.size() == 1; }
    /// +-T^e
    bool is_monomial_unit() const { return is_monomial() && abs_value(terms_.begin()->second) == 1; }

    Integer coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    void add_term(const Exponent& e, const Integer& c) {
        if (e.size() != nvars_) throw InvalidInput("exponent length does not match the number of variables");
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Multiplies by T^e.
    LaurentPoly shifted(const Exponent& e) const {
        LaurentPoly out(nvars_);
        for (const auto& [x, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), x + e, c);
        return out;
    }

    /// Largest and smallest exponent in each coordinate (the Newton box).
    std::pair<Exponent, Exponent> exponent_box() const {
        Exponent lo(nvars_, 0), hi(nvars_, 0);
        bool first = true;
        for (const auto& [e, c] : terms_) {
            for (std::size_t j = 0; j < nvars_; ++j) {
                lo[j] = first ? e[j] : std::min(lo[j], e[j]);
                hi[j] = first ? e[j] : std::max(hi[j], e[j]);
            }
            first = false;
        }
        return {lo, hi};
    }

    Rational evaluate(const std::vector<Rational>& t) const {
        Rational total = 0;
        for (const auto& [e, c] : terms_) {
            Rational m = c;
            for (std::size_t j = 0; j < nvars_; ++j) {
                Rational base = e[j] >= 0 ? t[j] : Rational(1) / t[j];
                for (long k = 0; k < (e[j] >= 0 ? e[j] : -e[j]); ++k) m *= base;
            }
            total += m;
        }
        return total;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(LaurentPoly a) {
        for (auto& [e, c] : a.terms_) c = -c;
        return a;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_vars(b);
        LaurentPoly out(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
        return out;
    }
    friend LaurentPoly operator*(const Integer& s, LaurentPoly a) {
        if (s == 0) return LaurentPoly(a.nvars_);
        for (auto& [e, c] : a.terms_) c *= s;
        return a;
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

    /// "T^2 - 2*T^-1 + 3" for one variable, "T1*T2^-1" style otherwise.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            std::string mono;
            for (std::size_t j = 0; j < nvars_; ++j) {
                if (e[j] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += nvars_ == 1 ? "T" : "T" + std::to_string(j + 1);
                if (e[j] != 1) mono += "^" + std::to_string(e[j]);
            }
            Integer mag = abs_value(c);
            std::string term = mono.empty() ? mag.str() : (mag == 1 ? mono : mag.str() + "*" + mono);
            if (out.empty()) out = c < 0 ? "-" + term : term;
            else out += (c < 0 ? " - " : " + ") + term;
        }
        return out;
    }

private:
    void check_vars(const LaurentPoly& o) const {
        if (o.nvars_ != nvars_) throw InvalidInput("Laurent polynomials over different variable counts");
    }

    std::size_t nvars_;
    std::map<Exponent, Integer> terms_;
};

/// Exact quotient a / b in the Laurent ring, or nullopt when b does not divide a.
/// Long division by lexicographic leading terms; every quotient exponent must lie
/// in the Newton box difference, which bounds the loop.
inline std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    LaurentPoly q(a.nvars());
    if (a.is_zero()) return q;
    const auto [alo, ahi] = a.exponent_box();
    const auto [blo, bhi] = b.exponent_box();
    const Exponent qlo = alo - blo, qhi = ahi - bhi;
    for (std::size_t j = 0; j < qlo.size(); ++j)
        if (qlo[j] > qhi[j]) return std::nullopt;
    const auto& [eb, cb] = *b.terms().rbegin();
    if (b.is_monomial()) {
        for (const auto& [e, c] : a.terms())
            if (c % cb != 0) return std::nullopt;
        LaurentPoly out(a.nvars());
        for (const auto& [e, c] : a.terms()) out.add_term(e - eb, c / cb);
        return out;
    }
    LaurentPoly rem = a;
    while (!rem.is_zero()) {
        const auto& [ea, ca] = *rem.terms().rbegin();
        if (ca % cb != 0) return std::nullopt;
        const Exponent e = ea - eb;
        for (std::size_t j = 0; j < e.size(); ++j)
            if (e[j] < qlo[j] || e[j] > qhi[j]) return std::nullopt;
        const LaurentPoly step = LaurentPoly::monomial(e, ca / cb);
        q += step;
        rem -= step * b;
    }
    return q;
}

/// Weights w_1..w_r in Q^k of the variables.  Monomials are ordered by the weight
/// of their exponent, compared lexicographically in Q^k.
class WeightSystem {
public:
    WeightSystem() = default;
    explicit WeightSystem(std::vector<WeightVector> weights) : weights_(std::move(weights)) {
        if (weights_.empty()) return;
        const std::size_t k = weights_.front().size();
        IntMatrix m(weights_.size(), k);
        for (std::size_t i = 0; i < weights_.size(); ++i) {
            if (weights_[i].size() != k) throw InvalidInput("weights of different dimension");
            Integer den = 1;
            for (const auto& x : weights_[i]) den = boost::multiprecision::lcm(den, denominator_of(x));
            for (std::size_t j = 0; j < k; ++j) m(i, j) = numerator_of(weights_[i][j] * den);
        }
        if (rank_over_rationals(m) != weights_.size()) throw ValidationError("weights are not linearly independent over Z");
    }

    /// One variable of weight w (a real rational weight).
    static WeightSystem single(const Rational& w = 1) { return WeightSystem({{w}}); }

    std::size_t nvars() const { return weights_.size(); }
    const std::vector<WeightVector>& weights() const { return weights_; }

    WeightVector weight(const Exponent& e) const {
        WeightVector out(weights_.empty() ? 0 : weights_.front().size());
        for (std::size_t j = 0; j < weights_.size(); ++j)
            for (std::size_t i = 0; i < out.size(); ++i) out[i] += e[j] * weights_[j][i];
        return out;
    }

    /// Exponent of the monomial of maximal weight.
    Exponent leading_exponent(const LaurentPoly& p) const {
        if (p.is_zero()) throw std::domain_error("zero polynomial has no leading term");
        if (p.nvars() != nvars()) throw InvalidInput("polynomial and weight system disagree on the variable count");
        auto it = p.terms().begin();
        Exponent best = it->first;
        WeightVector bw = weight(best);
        for (++it; it != p.terms().end(); ++it) {
            WeightVector w = weight(it->first);
            if (w == bw) throw std::logic_error("two monomials share a weight");
            if (bw < w) {
                best = it->first;
                bw = std::move(w);
            }
        }
        return best;
    }

    Integer leading_coefficient(const LaurentPoly& p) const { return p.coefficient(leading_exponent(p)); }

private:
    std::vector<WeightVector> weights_;
};

}  // namespace novikov
