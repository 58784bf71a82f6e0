#pragma once

// Rational 1-cochains valued in a finite-dimensional period space
// Q^k = Q{1, alpha_1, ..., alpha_{k-1}}, the alpha_i being formally
// Q-independent irrationals.

#include "novikov/complex/simplicial_complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace novikov {

using PeriodVector = std::vector<Rational>;

struct PeriodSpace {
    std::vector<std::string> symbols;               ///< alpha_1 .. alpha_{k-1}
    std::vector<std::optional<Rational>> shadows;   ///< advisory decimal values, same length as symbols

    std::size_t dimension() const { return 1 + symbols.size(); }
    PeriodVector zero() const { return PeriodVector(dimension()); }

    friend bool operator==(const PeriodSpace& a, const PeriodSpace& b) {
        return a.symbols == b.symbols && a.shadows == b.shadows;
    }
};

inline bool is_zero(const PeriodVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}
inline PeriodVector& operator+=(PeriodVector& a, const PeriodVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}
inline PeriodVector& operator-=(PeriodVector& a, const PeriodVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}
inline PeriodVector operator+(PeriodVector a, const PeriodVector& b) { return a += b; }
inline PeriodVector operator-(PeriodVector a, const PeriodVector& b) { return a -= b; }
inline PeriodVector operator-(PeriodVector a) {
    for (auto& x : a) x = -x;
    return a;
}
inline PeriodVector operator*(const Rational& s, PeriodVector a) {
    for (auto& x : a) x *= s;
    return a;
}

inline std::string to_string(const PeriodVector& v, const PeriodSpace& space) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        std::string coeff = to_string(v[i]);
        std::string term = i == 0 ? coeff : (v[i] == 1 ? space.symbols[i - 1] : v[i] == -1 ? "-" + space.symbols[i - 1] : coeff + "*" + space.symbols[i - 1]);
        if (!out.empty()) out += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
        else out = term;
    }
    return out.empty() ? "0" : out;
}

/// Values on edges of a fixed complex, stored on the edge oriented from the
/// lower to the higher vertex index; the reversed orientation reads the negation.
struct RationalCochain1 {
    PeriodSpace space;
    std::vector<PeriodVector> values;

    static RationalCochain1 zero(const SimplicialComplex& k, PeriodSpace space = {}) {
        RationalCochain1 c{std::move(space), {}};
        c.values.assign(k.count(1), c.space.zero());
        return c;
    }

    /// Value on the directed edge u -> v.
    PeriodVector at(const SimplicialComplex& k, int u, int v) const {
        auto idx = k.edge_index(u, v);
        if (!idx) throw InvalidInput("no edge between vertices " + k.vertex_name(u) + " and " + k.vertex_name(v));
        const PeriodVector& x = values[*idx];
        return u < v ? x : -x;
    }

    void set(const SimplicialComplex& k, int u, int v, const PeriodVector& x) {
        auto idx = k.edge_index(u, v);
        if (!idx) throw InvalidInput("no edge between vertices " + k.vertex_name(u) + " and " + k.vertex_name(v));
        values[*idx] = u < v ? x : -x;
    }

    RationalCochain1 scaled(const Rational& s) const {
        RationalCochain1 c = *this;
        for (auto& v : c.values) v = s * v;
        return c;
    }

    friend bool operator==(const RationalCochain1&, const RationalCochain1&) = default;
};

/// Vertex potential; its coboundary is f(v) - f(u) on u -> v.
inline RationalCochain1 coboundary(const SimplicialComplex& k, const std::vector<PeriodVector>& f, const PeriodSpace& space) {
    RationalCochain1 c = RationalCochain1::zero(k, space);
    const auto& edges = k.cells(1);
    for (std::size_t i = 0; i < edges.size(); ++i)
        c.values[i] = f[static_cast<std::size_t>(edges[i][1])] - f[static_cast<std::size_t>(edges[i][0])];
    return c;
}

inline RationalCochain1 operator+(RationalCochain1 a, const RationalCochain1& b) {
    for (std::size_t i = 0; i < a.values.size(); ++i) a.values[i] += b.values[i];
    return a;
}

/// First 2-simplex on which the cocycle condition fails, if any.
inline std::optional<Simplex> closedness_violation(const SimplicialComplex& k, const RationalCochain1& w) {
    if (w.values.size() != k.count(1)) throw InvalidInput("cochain does not match the complex's edges");
    for (const auto& t : k.cells(2)) {
        PeriodVector s = w.at(k, t[0], t[1]) + w.at(k, t[1], t[2]) - w.at(k, t[0], t[2]);
        if (!is_zero(s)) return t;
    }
    return std::nullopt;
}

inline bool is_closed(const SimplicialComplex& k, const RationalCochain1& w) { return !closedness_violation(k, w); }

inline void require_closed(const SimplicialComplex& k, const RationalCochain1& w) {
    if (auto t = closedness_violation(k, w))
        throw ValidationError("cochain is not closed on 2-simplex (" + k.vertex_name((*t)[0]) + "," +
                              k.vertex_name((*t)[1]) + "," + k.vertex_name((*t)[2]) + ")");
}

}  // namespace novikov
