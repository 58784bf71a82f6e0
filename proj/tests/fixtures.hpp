#pragma once

// Hand-built complexes and actions shared by the unit suites.

#include "novikov/orbifold/action.hpp"

#include <vector>

namespace novikov::fixtures {

inline SimplicialComplex hollow_triangle() { return SimplicialComplex::from_indices(3, {{0, 1}, {1, 2}, {0, 2}}); }

inline SimplicialComplex cycle(int n) {
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return SimplicialComplex::from_indices(n, edges);
}

/// Minimal 6-vertex real projective plane.
inline SimplicialComplex rp2() {
    return SimplicialComplex::from_indices(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                               {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}});
}

/// 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.  Edge i -> i+k
/// (k = 1, 2, 3) is the lattice step (1,0), (-1,1), (0,1) under (a, b) -> a + 3b mod 7.
inline SimplicialComplex torus7() {
    std::vector<std::vector<int>> t;
    for (int i = 0; i < 7; ++i) {
        t.push_back({i, (i + 1) % 7, (i + 3) % 7});
        t.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return SimplicialComplex::from_indices(7, t);
}

/// Grid triangulation with a twisted identification (a, y) ~ (0, -y): Klein bottle.
inline SimplicialComplex klein(int a = 3, int b = 3) {
    auto v = [&](int i, int j) {
        if (i == a) return ((b - j % b) % b);
        return i * b + ((j % b) + b) % b;
    };
    std::vector<std::vector<int>> t;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) {
            t.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
            t.push_back({v(i, j), v(i, j + 1), v(i + 1, j + 1)});
        }
    return SimplicialComplex::from_indices(a * b, t);
}

/// n x n grid torus; `alternate` flips the diagonal on odd rows.
inline SimplicialComplex grid_torus(int a, int b, bool alternate) {
    auto v = [&](int i, int j) { return ((i % a + a) % a) * b + ((j % b + b) % b); };
    std::vector<std::vector<int>> t;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) {
            if (!alternate || j % 2 == 0) {
                t.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
                t.push_back({v(i, j), v(i, j + 1), v(i + 1, j + 1)});
            } else {
                t.push_back({v(i, j), v(i + 1, j), v(i, j + 1)});
                t.push_back({v(i + 1, j), v(i, j + 1), v(i + 1, j + 1)});
            }
        }
    return SimplicialComplex::from_indices(a * b, t);
}

inline SimplicialAction cyclic_rotation(int n, int step, int order) {
    std::vector<std::vector<int>> maps;
    for (int g = 0; g < order; ++g) {
        std::vector<int> m;
        for (int v = 0; v < n; ++v) m.push_back((v + g * step) % n);
        maps.push_back(std::move(m));
    }
    return SimplicialAction(FiniteGroup::cyclic(order), cycle(n), std::move(maps));
}

/// Z/2 rotating a hexagon by three steps (free).
inline SimplicialAction hexagon_z2() { return cyclic_rotation(6, 3, 2); }

/// Z/2 reflecting a square across the diagonal through vertices 0 and 2.
inline SimplicialAction mirror_square() {
    return SimplicialAction(FiniteGroup::cyclic(2), cycle(4), {{0, 1, 2, 3}, {0, 3, 2, 1}});
}

/// Z/2 reflecting a square across the midpoints of edges 01 and 23 (flips those edges).
inline SimplicialAction mirror_square_edges() {
    return SimplicialAction(FiniteGroup::cyclic(2), cycle(4), {{0, 1, 2, 3}, {1, 0, 3, 2}});
}

/// Z/2 acting on the 4 x 4 grid torus by (i, j) -> (-i, -j).
inline SimplicialAction pillowcase() {
    const int n = 4;
    std::vector<int> id, inv;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            id.push_back(i * n + j);
            inv.push_back(((n - i) % n) * n + (n - j) % n);
        }
    return SimplicialAction(FiniteGroup::cyclic(2), grid_torus(n, n, false), {id, inv});
}

/// S^1 x (S^1 / reflection): Z/2 acting on the 3 x 4 alternating grid torus by (i, j) -> (i, -j).
inline SimplicialAction mirror_cylinder() {
    const int a = 3, b = 4;
    std::vector<int> id, refl;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) {
            id.push_back(i * b + j);
            refl.push_back(i * b + (b - j) % b);
        }
    return SimplicialAction(FiniteGroup::cyclic(2), grid_torus(a, b, true), {id, refl});
}

}  // namespace novikov::fixtures

namespace novikov::fixtures {

inline PeriodVector pv(std::initializer_list<Rational> xs) { return PeriodVector(xs); }

/// Cochain on cycle(n) with value `step` on every directed edge i -> i+1.
inline RationalCochain1 cycle_form(int n, const PeriodVector& step, const PeriodSpace& space = {}) {
    auto k = cycle(n);
    auto w = RationalCochain1::zero(k, space);
    for (int i = 0; i < n; ++i) w.set(k, i, (i + 1) % n, step);
    return w;
}

/// a * e1 + b * e2 on torus7, where e1, e2 have periods (1,0), (0,1) on the lattice
/// basis (3,-1), (1,2).  Per step k (edge i -> i+k): e1 = (2, -3, -1)/7, e2 = (1, 2, 3)/7.
inline RationalCochain1 torus7_form(const PeriodVector& a, const PeriodVector& b, const PeriodSpace& space = {}) {
    auto k = torus7();
    auto w = RationalCochain1::zero(k, space);
    const Rational e1[4] = {0, Rational(2, 7), Rational(-3, 7), Rational(-1, 7)};
    const Rational e2[4] = {0, Rational(1, 7), Rational(2, 7), Rational(3, 7)};
    for (const auto& e : k.cells(1)) {
        int d = (e[1] - e[0] + 7) % 7;
        int sgn = 1;
        if (d > 3) {
            d = 7 - d;
            sgn = -1;
        }
        PeriodVector v = e1[d] * a + e2[d] * b;
        w.set(k, e[0], e[1], Rational(sgn) * v);
    }
    return w;
}

/// dx on the Klein bottle: 1/a per step in the first grid direction.
inline RationalCochain1 klein_dx(int a = 3, int b = 3) {
    auto k = klein(a, b);
    auto w = RationalCochain1::zero(k);
    for (const auto& e : k.cells(1)) {
        int cu = e[0] / b, cv = e[1] / b;
        if (cu == cv) continue;
        Rational step(1, a);
        w.set(k, e[0], e[1], {(cv == (cu + 1) % a) ? step : Rational(-step)});
    }
    return w;
}

/// Pulls back a per-vertex "column" potential: value on u -> v is 1/a per column step.
inline RationalCochain1 grid_dx(const SimplicialComplex& k, int a, int b) {
    auto w = RationalCochain1::zero(k);
    for (const auto& e : k.cells(1)) {
        int cu = e[0] / b, cv = e[1] / b;
        if (cu == cv) continue;
        w.set(k, e[0], e[1], {(cv == (cu + 1) % a) ? Rational(1, a) : Rational(-1, a)});
    }
    return w;
}

}  // namespace novikov::fixtures
