#pragma once

// Univariate integer polynomials with a subresultant gcd.

#include "novikov/ring/laurent.hpp"

#include <utility>
#include <vector>

namespace novikov {

/// Coefficients low to high, no trailing zeros; the zero polynomial is empty.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> c) : c_(std::move(c)) { trim(); }
    static IntPoly constant(const Integer& x) { return IntPoly(std::vector<Integer>{x}); }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Integer>& coefficients() const { return c_; }
    const Integer& lead() const { return c_.back(); }
    Integer operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }

    Integer content() const {
        Integer g = 0;
        for (const auto& x : c_) g = gcd_value(g, x);
        return g;
    }
    /// Divided by its content, with positive leading coefficient.
    IntPoly primitive_part() const {
        if (is_zero()) return {};
        Integer g = content();
        if (lead() < 0) g = -g;
        return divided(g);
    }
    IntPoly divided(const Integer& s) const {
        IntPoly out = *this;
        for (auto& x : out.c_) {
            if (x % s != 0) throw std::logic_error("inexact scalar division of a polynomial");
            x /= s;
        }
        return out;
    }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Integer> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return IntPoly(std::move(c));
    }
    friend IntPoly operator*(const Integer& s, const IntPoly& a) { return IntPoly::constant(s) * a; }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
        return IntPoly(std::move(c));
    }
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    /// Pseudo-remainder of a by b: lead(b)^(deg a - deg b + 1) * a mod b.
    friend IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
        if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
        long e = a.degree() - b.degree() + 1;
        while (!a.is_zero() && a.degree() >= b.degree()) {
            std::vector<Integer> shift(static_cast<std::size_t>(a.degree() - b.degree()), 0);
            shift.push_back(a.lead());
            a = b.lead() * a - IntPoly(std::move(shift)) * b;
            --e;
        }
        for (; e > 0; --e) a = b.lead() * a;
        return a;
    }

    /// Quotient when b divides a exactly in Z[T].
    friend std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
        if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
        if (a.is_zero()) return IntPoly{};
        if (a.degree() < b.degree()) return std::nullopt;
        std::vector<Integer> rem = a.c_, q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
        for (long i = a.degree() - b.degree(); i >= 0; --i) {
            const Integer& top = rem[static_cast<std::size_t>(i + b.degree())];
            if (top % b.lead() != 0) return std::nullopt;
            Integer f = top / b.lead();
            q[static_cast<std::size_t>(i)] = f;
            for (long j = 0; j <= b.degree(); ++j) rem[static_cast<std::size_t>(i + j)] -= f * b.c_[static_cast<std::size_t>(j)];
        }
        for (const auto& x : rem)
            if (x != 0) return std::nullopt;
        return IntPoly(std::move(q));
    }

    std::string str() const { return to_laurent().str(); }

    LaurentPoly to_laurent(long shift = 0) const {
        LaurentPoly p(1);
        for (std::size_t i = 0; i < c_.size(); ++i) p.add_term({static_cast<long>(i) + shift}, c_[i]);
        return p;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Integer> c_;
};

/// gcd in Z[T] with positive leading coefficient: content gcd times the primitive
/// part of the last nonzero subresultant remainder.
inline IntPoly gcd(IntPoly a, IntPoly b) {
    if (a.is_zero()) return b.is_zero() ? IntPoly{} : b.content() * b.primitive_part();
    if (b.is_zero()) return a.content() * a.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    const Integer d = gcd_value(a.content(), b.content());
    a = a.primitive_part();
    b = b.primitive_part();
    Integer g = 1, h = 1;
    while (true) {
        const long delta = a.degree() - b.degree();
        IntPoly r = pseudo_remainder(a, b);
        if (r.is_zero()) break;
        if (r.degree() == 0) {
            b = IntPoly::constant(1);
            break;
        }
        Integer scale = g;
        for (long i = 0; i < delta; ++i) scale *= h;
        a = b;
        b = r.divided(scale);
        g = a.lead();
        if (delta == 0) continue;
        Integer hn = g;
        for (long i = 1; i < delta; ++i) hn *= g;
        Integer hd = 1;
        for (long i = 1; i < delta; ++i) hd *= h;
        h = hn / hd;
    }
    return d * b.primitive_part();
}

/// p = T^shift * poly with poly(0) != 0; requires at most one variable.
inline std::pair<long, IntPoly> split_monomial(const LaurentPoly& p) {
    if (p.nvars() > 1) throw UnsupportedOperation("univariate conversion of a multivariate polynomial");
    if (p.is_zero()) return {0, IntPoly{}};
    if (p.nvars() == 0) return {0, IntPoly::constant(p.terms().begin()->second)};
    const long lo = p.terms().begin()->first[0], hi = p.terms().rbegin()->first[0];
    std::vector<Integer> c(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [e, x] : p.terms()) c[static_cast<std::size_t>(e[0] - lo)] = x;
    return {lo, IntPoly(std::move(c))};
}

}  // namespace novikov
