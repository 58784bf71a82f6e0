#pragma once

// Truncated nerve double complex of the action groupoid Y x| G with the monomial
// local system T^z.
//
// A cell is a label string (h_1..h_n) together with an ordered simplex tau of Y.  The
// string is anchored at its last source: over a point y, g_n = (h_n^{-1}.y, h_n),
// g_{n-1} = (h_{n-1}^{-1}.t(g_n), h_{n-1}) and so on, with arrows as in gpath.hpp.
// Face maps: d_0 drops g_1, d_k composes g_k o g_{k+1} (label h_{k+1} h_k), d_n drops
// g_n and moves the anchor to t(g_n) = h_n^{-1}.tau.  In particular for n = 1,
// d_0 is the source and d_1 the target.  Arrows act trivially on ring values.

#include "novikov/core/integralize.hpp"
#include "novikov/orbifold/action.hpp"

#include <map>
#include <random>

namespace novikov {

struct NerveCell {
    std::vector<int> labels;   ///< h_1..h_n
    std::vector<int> simplex;  ///< ordered vertices of Y
    std::size_t n() const { return labels.size(); }
    std::size_t q() const { return simplex.size() - 1; }
    friend auto operator<=>(const NerveCell&, const NerveCell&) = default;
};

/// Finite sum of cells with Laurent coefficients; terms may have mixed bidegrees.
struct LocalChain {
    std::size_t nvars = 0;
    std::map<NerveCell, LaurentPoly> terms;

    void add(const NerveCell& c, const LaurentPoly& x) {
        if (x.is_zero()) return;
        auto [it, inserted] = terms.emplace(c, x);
        if (!inserted) {
            it->second += x;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const LocalChain& a, const LocalChain& b) { return a.terms == b.terms; }
    friend LocalChain operator+(LocalChain a, const LocalChain& b) {
        for (const auto& [c, x] : b.terms) a.add(c, x);
        return a;
    }
    friend LocalChain operator-(LocalChain a, const LocalChain& b) {
        for (const auto& [c, x] : b.terms) a.add(c, -x);
        return a;
    }
};

/// Pulls back a cocycle on the orbit complex to Y (collapsed edges get 0).
inline std::vector<Exponent> pullback_cocycle(const QuotientResult& q, const IntegralizedCocycle& zx) {
    const auto& y = q.effective_action.space();
    std::vector<Exponent> out;
    for (const auto& e : y.cells(1)) {
        int a = q.vertex_projection[static_cast<std::size_t>(e[0])], b = q.vertex_projection[static_cast<std::size_t>(e[1])];
        out.push_back(a == b ? Exponent(zx.rank, 0) : zx.at(a, b));
    }
    return out;
}

class NerveComplex {
public:
    /// z: one exponent vector per edge of Y (low -> high), a cocycle.
    NerveComplex(SimplicialAction action, std::vector<Exponent> z, std::size_t rank)
        : action_(std::move(action)), z_(std::move(z)), rank_(rank) {
        const auto& y = action_.space();
        if (z_.size() != y.count(1)) throw InvalidInput("cocycle needs one value per edge of Y");
        for (const auto& v : z_)
            if (v.size() != rank_) throw InvalidInput("cocycle value of the wrong rank");
        for (const auto& t : y.cells(2))
            if (this->z(t[0], t[1]) + this->z(t[1], t[2]) != this->z(t[0], t[2])) throw ValidationError("transport exponents are not a cocycle on Y");
    }

    /// Trivial local system.
    explicit NerveComplex(SimplicialAction action)
        : NerveComplex(action, std::vector<Exponent>(action.space().count(1)), 0) {}

    const SimplicialAction& action() const { return action_; }
    std::size_t rank() const { return rank_; }

    Exponent z(int u, int v) const {
        auto e = action_.space().edge_index(u, v);
        if (!e) throw InvalidInput("not an edge of Y");
        return u < v ? z_[*e] : -z_[*e];
    }

    /// z(g.u, g.v) == z(u, v) for every edge and group element.
    bool is_invariant() const {
        for (const auto& e : action_.space().cells(1))
            for (int g = 0; g < action_.group().order(); ++g)
                if (z(action_.act(g, e[0]), action_.act(g, e[1])) != z(e[0], e[1])) return false;
        return true;
    }

    void validate(const NerveCell& c) const {
        const auto& y = action_.space();
        for (int h : c.labels)
            if (h < 0 || h >= action_.group().order()) throw InvalidInput("nerve label out of range");
        if (c.simplex.empty()) throw InvalidInput("empty simplex");
        Simplex s = c.simplex;
        if (sort_with_parity(s) == 0 || !y.contains(s)) throw InvalidInput("nerve cell simplex is not a simplex of Y");
    }

    /// Horizontal boundary: sum_k (-1)^k d_k.
    LocalChain simplicial_boundary(const LocalChain& c) const {
        LocalChain out{rank_, {}};
        for (const auto& [cell, x] : c.terms) {
            const std::size_t n = cell.n();
            if (n == 0) throw InvalidInput("simplicial boundary needs nerve degree n >= 1");
            for (std::size_t k = 0; k <= n; ++k) {
                NerveCell f = cell;
                if (k == 0) {
                    f.labels.erase(f.labels.begin());
                } else if (k < n) {
                    f.labels[k - 1] = action_.group().product(cell.labels[k], cell.labels[k - 1]);
                    f.labels.erase(f.labels.begin() + static_cast<long>(k));
                } else {
                    const int back = action_.group().inverse(cell.labels[n - 1]);
                    f.labels.pop_back();
                    for (auto& v : f.simplex) v = action_.act(back, v);
                }
                out.add(f, k % 2 ? -x : x);
            }
        }
        return out;
    }

    /// Vertical boundary: T^{z(tau_0, tau_1)} d_0 + sum_{j >= 1} (-1)^j d_j.
    LocalChain local_boundary(const LocalChain& c) const {
        LocalChain out{rank_, {}};
        for (const auto& [cell, x] : c.terms) {
            const std::size_t q = cell.q();
            if (q == 0) throw InvalidInput("local boundary needs simplicial degree q >= 1");
            for (std::size_t j = 0; j <= q; ++j) {
                NerveCell f = cell;
                f.simplex.erase(f.simplex.begin() + static_cast<long>(j));
                if (j == 0) out.add(f, x * LaurentPoly::monomial(z(cell.simplex[0], cell.simplex[1])));
                else out.add(f, j % 2 ? -x : x);
            }
        }
        return out;
    }

    /// (-1)^{q+n} boundary + (-1)^q local boundary, termwise by bidegree; the
    /// horizontal part vanishes at n = 0 and the vertical part at q = 0.
    LocalChain total_differential(const LocalChain& c) const {
        LocalChain out{rank_, {}};
        for (const auto& [cell, x] : c.terms) {
            LocalChain single{rank_, {{cell, x}}};
            const long q = static_cast<long>(cell.q()), n = static_cast<long>(cell.n());
            if (n > 0) {
                LocalChain h = simplicial_boundary(single);
                for (const auto& [f, y] : h.terms) out.add(f, (q + n) % 2 ? -y : y);
            }
            if (q > 0) {
                LocalChain v = local_boundary(single);
                for (const auto& [f, y] : v.terms) out.add(f, q % 2 ? -y : y);
            }
        }
        return out;
    }

    /// Random chain of bidegree (q, n): ordered simplices in random vertex order.
    LocalChain random_chain(std::mt19937_64& rng, std::size_t q, std::size_t n, std::size_t terms) const {
        const auto& cells = action_.space().cells(static_cast<int>(q));
        LocalChain out{rank_, {}};
        if (cells.empty()) return out;
        for (std::size_t t = 0; t < terms; ++t) {
            NerveCell c;
            for (std::size_t i = 0; i < n; ++i) c.labels.push_back(static_cast<int>(rng() % static_cast<unsigned long>(action_.group().order())));
            c.simplex = cells[rng() % cells.size()];
            std::shuffle(c.simplex.begin(), c.simplex.end(), rng);
            LaurentPoly x(rank_);
            const int nterms = 1 + static_cast<int>(rng() % 2);
            for (int i = 0; i < nterms; ++i) {
                Exponent e(rank_);
                for (auto& v : e) v = static_cast<long>(rng() % 5) - 2;
                x.add_term(e, static_cast<long>(rng() % 7) - 3);
            }
            out.add(c, x);
        }
        return out;
    }

private:
    SimplicialAction action_;
    std::vector<Exponent> z_;
    std::size_t rank_;
};

struct NerveIdentityReport {
    std::size_t samples = 0;
    std::size_t boundary_square = 0;   ///< failures of each identity
    std::size_t local_square = 0;
    std::size_t commutation = 0;
    std::size_t total_square = 0;
    bool all_hold() const { return boundary_square + local_square + commutation + total_square == 0; }
};

/// Seeded samples over every bidegree with n <= max_n and q <= dim Y.
inline NerveIdentityReport check_commutation(const NerveComplex& nc, std::mt19937_64& rng, std::size_t samples_per_bidegree,
                                             std::size_t max_n = 3) {
    NerveIdentityReport r;
    const auto dim = static_cast<std::size_t>(nc.action().space().dimension());
    for (std::size_t n = 0; n <= max_n; ++n)
        for (std::size_t q = 0; q <= dim; ++q)
            for (std::size_t s = 0; s < samples_per_bidegree; ++s) {
                LocalChain c = nc.random_chain(rng, q, n, 1 + rng() % 3);
                ++r.samples;
                if (n >= 2 && !nc.simplicial_boundary(nc.simplicial_boundary(c)).is_zero()) ++r.boundary_square;
                if (q >= 2 && !nc.local_boundary(nc.local_boundary(c)).is_zero()) ++r.local_square;
                if (n >= 1 && q >= 1 && !(nc.simplicial_boundary(nc.local_boundary(c)) == nc.local_boundary(nc.simplicial_boundary(c))))
                    ++r.commutation;
                if (!nc.total_differential(nc.total_differential(c)).is_zero()) ++r.total_square;
            }
    return r;
}

}  // namespace novikov
