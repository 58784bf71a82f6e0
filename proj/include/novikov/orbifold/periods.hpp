#pragma once

// H_1 of the orbit complex with explicit cycle representatives, the
// homomorphism of periods, its image lattice and rank.

#include "novikov/complex/smith.hpp"
#include "novikov/orbifold/gpath.hpp"

#include <deque>
#include <numeric>
#include <vector>

namespace novikov {

/// Integer 1-chain on the edges of a complex (orientation low -> high).
using EdgeChain = std::vector<Integer>;

/// Deterministic breadth-first spanning forest; roots are the lowest-indexed
/// vertices of each component, neighbours visited in index order.
struct SpanningForest {
    std::vector<int> parent;                ///< -1 at roots
    std::vector<std::size_t> parent_edge;   ///< edge index to parent (unused at roots)
    std::vector<int> root;
    std::vector<bool> is_tree_edge;         ///< per edge index
    std::vector<int> order;                 ///< BFS visiting order

    static SpanningForest breadth_first(const SimplicialComplex& k) {
        const std::size_t n = k.vertex_count();
        SpanningForest f;
        f.parent.assign(n, -1);
        f.parent_edge.assign(n, 0);
        f.root.assign(n, -1);
        f.is_tree_edge.assign(k.count(1), false);
        std::vector<std::vector<int>> adj(n);
        for (const auto& e : k.cells(1)) {
            adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
            adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
        }
        for (auto& a : adj) std::sort(a.begin(), a.end());
        for (std::size_t s = 0; s < n; ++s) {
            if (f.root[s] >= 0) continue;
            f.root[s] = static_cast<int>(s);
            std::deque<int> queue{static_cast<int>(s)};
            while (!queue.empty()) {
                int v = queue.front();
                queue.pop_front();
                f.order.push_back(v);
                for (int w : adj[static_cast<std::size_t>(v)]) {
                    if (f.root[static_cast<std::size_t>(w)] >= 0) continue;
                    f.root[static_cast<std::size_t>(w)] = static_cast<int>(s);
                    f.parent[static_cast<std::size_t>(w)] = v;
                    std::size_t e = *k.edge_index(v, w);
                    f.parent_edge[static_cast<std::size_t>(w)] = e;
                    f.is_tree_edge[e] = true;
                    queue.push_back(w);
                }
            }
        }
        return f;
    }

    /// Potential vanishing at roots whose coboundary agrees with w on tree edges.
    std::vector<PeriodVector> potential(const SimplicialComplex& k, const RationalCochain1& w) const {
        std::vector<PeriodVector> phi(k.vertex_count(), w.space.zero());
        for (int v : order) {
            int p = parent[static_cast<std::size_t>(v)];
            if (p >= 0) phi[static_cast<std::size_t>(v)] = phi[static_cast<std::size_t>(p)] + w.at(k, p, v);
        }
        return phi;
    }

    /// Chain of the tree path from the root to v.
    EdgeChain root_path(const SimplicialComplex& k, int v) const {
        EdgeChain c(k.count(1));
        while (parent[static_cast<std::size_t>(v)] >= 0) {
            int p = parent[static_cast<std::size_t>(v)];
            c[parent_edge[static_cast<std::size_t>(v)]] += p < v ? 1 : -1;
            v = p;
        }
        return c;
    }
};

struct H1Generator {
    std::size_t slot = 0;   ///< row of the Smith left transform
    Integer order;          ///< 0 for a free generator
    EdgeChain cycle;        ///< representative 1-cycle on the complex
};

/// H_1(K; Z) presented on the fundamental cycles of a spanning forest.
struct H1Presentation {
    SpanningForest forest;
    std::vector<std::size_t> off_tree_edges;
    std::vector<EdgeChain> fundamental_cycles;  ///< one per off-tree edge
    IntMatrix left, left_inverse;               ///< Smith transforms of the relation matrix
    std::vector<Integer> diagonal;
    std::vector<H1Generator> generators;

    std::size_t betti() const {
        std::size_t b = 0;
        for (const auto& g : generators) b += g.order == 0;
        return b;
    }
    std::vector<Integer> torsion() const {
        std::vector<Integer> t;
        for (const auto& g : generators)
            if (g.order != 0) t.push_back(g.order);
        return t;
    }

    /// Coordinates of a 1-cycle in the generator basis (torsion entries reduced mod order).
    std::vector<Integer> coordinates(const SimplicialComplex& k, const EdgeChain& cycle) const {
        if (cycle.size() != k.count(1)) throw InvalidInput("chain does not match the complex's edges");
        std::vector<Integer> boundary(k.vertex_count());
        const auto& edges = k.cells(1);
        for (std::size_t e = 0; e < edges.size(); ++e) {
            boundary[static_cast<std::size_t>(edges[e][1])] += cycle[e];
            boundary[static_cast<std::size_t>(edges[e][0])] -= cycle[e];
        }
        for (const auto& b : boundary)
            if (b != 0) throw InvalidInput("chain is not a cycle");
        std::vector<Integer> y;
        for (std::size_t e : off_tree_edges) y.push_back(cycle[e]);
        std::vector<Integer> z = left * y;
        std::vector<Integer> out;
        for (const auto& g : generators) {
            Integer c = z[g.slot];
            if (g.order != 0) {
                c %= g.order;
                if (c < 0) c += g.order;
            }
            out.push_back(c);
        }
        return out;
    }
};

inline H1Presentation first_homology(const SimplicialComplex& k) {
    H1Presentation h;
    h.forest = SpanningForest::breadth_first(k);
    const auto& edges = k.cells(1);
    std::vector<long> slot_of(edges.size(), -1);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (h.forest.is_tree_edge[e]) continue;
        slot_of[e] = static_cast<long>(h.off_tree_edges.size());
        h.off_tree_edges.push_back(e);
        int u = edges[e][0], v = edges[e][1];
        EdgeChain c(edges.size());
        c[e] = 1;
        EdgeChain to_u = h.forest.root_path(k, u), to_v = h.forest.root_path(k, v);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += to_u[i] - to_v[i];
        h.fundamental_cycles.push_back(std::move(c));
    }
    const std::size_t m = h.off_tree_edges.size();
    const auto& tris = k.cells(2);
    IntMatrix relations(m, tris.size());
    for (std::size_t t = 0; t < tris.size(); ++t)
        for (std::size_t j = 0; j < 3; ++j) {
            Simplex face = tris[t];
            face.erase(face.begin() + static_cast<long>(j));
            long s = slot_of[*k.index_of(face)];
            if (s >= 0) relations(static_cast<std::size_t>(s), t) += (j % 2 == 0) ? 1 : -1;
        }
    SNFResult snf = smith_normal_form(relations, true);
    h.left = std::move(*snf.left);
    h.left_inverse = std::move(*snf.left_inverse);
    h.diagonal = snf.diagonal;
    for (std::size_t i = 0; i < m; ++i) {
        Integer d = i < h.diagonal.size() ? h.diagonal[i] : Integer(0);
        if (d == 1) continue;
        H1Generator g;
        g.slot = i;
        g.order = d;
        g.cycle.assign(edges.size(), 0);
        for (std::size_t j = 0; j < m; ++j) {
            const Integer& c = h.left_inverse(j, i);
            if (c == 0) continue;
            for (std::size_t e = 0; e < edges.size(); ++e)
                if (h.fundamental_cycles[j][e] != 0) g.cycle[e] += c * h.fundamental_cycles[j][e];
        }
        h.generators.push_back(std::move(g));
    }
    return h;
}

inline PeriodVector evaluate(const SimplicialComplex& k, const RationalCochain1& w, const EdgeChain& c) {
    PeriodVector total = w.space.zero();
    const auto& edges = k.cells(1);
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (c[e] != 0) total += Rational(c[e]) * w.values[e];
    return total;
}

struct PeriodHom {
    H1Presentation h1;
    PeriodSpace space;
    std::vector<PeriodVector> periods;      ///< one per H_1 generator
    std::vector<PeriodVector> gamma_basis;  ///< Z-basis of the image
    IntMatrix change_of_basis;              ///< periods[i] = sum_j C(i, j) gamma_basis[j]

    std::size_t rank() const { return gamma_basis.size(); }

    /// Per(class) for a class given in generator coordinates.
    PeriodVector evaluate(const std::vector<Integer>& coords) const {
        PeriodVector total = space.zero();
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (h1.generators[i].order == 0) total += Rational(coords[i]) * periods[i];
        return total;
    }

    /// Integer coordinates of a period vector in gamma_basis; nullopt when it is
    /// not in the lattice.
    std::optional<std::vector<Integer>> lattice_coordinates(const PeriodVector& p) const {
        // gamma_basis is in echelon form: solve by forward elimination on pivots.
        std::vector<Integer> out;
        PeriodVector rest = p;
        for (const auto& g : gamma_basis) {
            std::size_t pivot = 0;
            while (g[pivot] == 0) ++pivot;
            Rational c = rest[pivot] / g[pivot];
            if (!is_integer(c)) return std::nullopt;
            rest -= c * g;
            out.push_back(numerator_of(c));
        }
        if (!is_zero(rest)) return std::nullopt;
        return out;
    }
};

/// Per_xi on H_1(X; Z) for a closed cochain on X, with the image lattice Gamma_xi.
inline PeriodHom period_homomorphism(const SimplicialComplex& x, const RationalCochain1& xi) {
    require_closed(x, xi);
    PeriodHom p;
    p.h1 = first_homology(x);
    p.space = xi.space;
    const std::size_t k = xi.space.dimension();
    std::vector<std::size_t> free_rows;
    for (std::size_t i = 0; i < p.h1.generators.size(); ++i) {
        const auto& g = p.h1.generators[i];
        PeriodVector v = novikov::evaluate(x, xi, g.cycle);
        if (g.order != 0 && !is_zero(v)) throw ValidationError("nonzero period on a torsion class");
        if (g.order == 0) free_rows.push_back(i);
        p.periods.push_back(std::move(v));
    }
    Integer denom = 1;
    for (std::size_t i : free_rows)
        for (const auto& c : p.periods[i]) denom = boost::multiprecision::lcm(denom, denominator_of(c));
    IntMatrix lattice(free_rows.size(), k);
    for (std::size_t r = 0; r < free_rows.size(); ++r)
        for (std::size_t j = 0; j < k; ++j) lattice(r, j) = numerator_of(p.periods[free_rows[r]][j] * Rational(denom));
    HermiteResult hnf = row_hermite(lattice);
    for (std::size_t r = 0; r < hnf.rank; ++r) {
        PeriodVector g(k);
        for (std::size_t j = 0; j < k; ++j) g[j] = Rational(hnf.form(r, j), denom);
        p.gamma_basis.push_back(std::move(g));
    }
    p.change_of_basis = IntMatrix(p.h1.generators.size(), hnf.rank);
    for (std::size_t r = 0; r < free_rows.size(); ++r)
        for (std::size_t j = 0; j < hnf.rank; ++j) p.change_of_basis(free_rows[r], j) = hnf.transform_inverse(r, j);
    for (std::size_t i = 0; i < p.periods.size(); ++i) {
        PeriodVector check = p.space.zero();
        for (std::size_t j = 0; j < hnf.rank; ++j) check += Rational(p.change_of_basis(i, j)) * p.gamma_basis[j];
        if (check != p.periods[i]) throw std::logic_error("period lattice change of basis does not reproduce the periods");
    }
    return p;
}

/// Every period is an integer with no irrational component.
inline bool is_integral(const PeriodHom& p) {
    for (const auto& v : p.periods) {
        if (!is_integer(v[0])) return false;
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i] != 0) return false;
    }
    return true;
}

/// xi == delta(f) for some vertex potential f, by exact solve along a spanning forest.
inline bool is_exact(const SimplicialComplex& x, const RationalCochain1& xi) {
    SpanningForest f = SpanningForest::breadth_first(x);
    return coboundary(x, f.potential(x, xi), xi.space) == xi;
}

/// Projects a G-loop on the effective total space to a 1-cycle on the orbit complex.
inline EdgeChain project_gloop(const QuotientResult& q, const GPath& s) {
    if (!s.is_loop()) throw InvalidInput("G-path is not a loop");
    validate_gpath(q.effective_action, s);
    const auto& x = q.orbit_complex;
    EdgeChain c(x.count(1));
    for (const auto& p : s.paths)
        for (std::size_t i = 1; i < p.size(); ++i) {
            int u = q.vertex_projection[static_cast<std::size_t>(p[i - 1])];
            int v = q.vertex_projection[static_cast<std::size_t>(p[i])];
            if (u == v) continue;
            c[*x.edge_index(u, v)] += u < v ? 1 : -1;
        }
    return c;
}

/// Hurewicz image of a G-loop in H_1 of the orbit complex (generator coordinates).
inline std::vector<Integer> hurewicz_class(const QuotientResult& q, const H1Presentation& h1, const GPath& s) {
    return h1.coordinates(q.orbit_complex, project_gloop(q, s));
}

}  // namespace novikov
