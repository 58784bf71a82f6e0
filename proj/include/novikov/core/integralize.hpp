#pragma once

// Integer-valued cocycles z on the edges of X with values in Z^r, the lattice of
// periods written in its basis.

#include "novikov/orbifold/periods.hpp"
#include "novikov/ring/laurent.hpp"

namespace novikov {

struct IntegralizedCocycle {
    SimplicialComplex complex;
    std::size_t rank = 0;
    std::vector<Exponent> z;  ///< per edge index, oriented low -> high
    WeightSystem weights;
    std::vector<bool> tree_edge;  ///< empty when z was supplied directly

    Exponent at(int u, int v) const {
        auto e = complex.edge_index(u, v);
        if (!e) throw InvalidInput("not an edge");
        return u < v ? z[*e] : -z[*e];
    }
};

inline void validate_cocycle(const IntegralizedCocycle& c) {
    if (c.z.size() != c.complex.count(1)) throw ValidationError("cocycle has the wrong number of edge values");
    for (const auto& v : c.z)
        if (v.size() != c.rank) throw ValidationError("cocycle value of the wrong rank");
    if (c.weights.nvars() != c.rank) throw ValidationError("weight system does not match the cocycle rank");
    for (const auto& t : c.complex.cells(2))
        if (c.at(t[0], t[1]) + c.at(t[1], t[2]) != c.at(t[0], t[2]))
            throw ValidationError("cocycle condition fails on triangle " + c.complex.vertex_name(t[0]) + c.complex.vertex_name(t[1]) +
                                  c.complex.vertex_name(t[2]));
}

/// z from explicit edge values.
inline IntegralizedCocycle make_cocycle(const SimplicialComplex& k, std::vector<Exponent> z, WeightSystem weights) {
    IntegralizedCocycle c{k, weights.nvars(), std::move(z), std::move(weights), {}};
    validate_cocycle(c);
    return c;
}

/// z + delta(c) for an integer 0-cochain c (one vector per vertex).
inline IntegralizedCocycle gauge_shift(const IntegralizedCocycle& z, const std::vector<Exponent>& c) {
    IntegralizedCocycle out = z;
    out.tree_edge.clear();
    const auto& edges = z.complex.cells(1);
    for (std::size_t e = 0; e < edges.size(); ++e)
        out.z[e] = z.z[e] + c[static_cast<std::size_t>(edges[e][1])] - c[static_cast<std::size_t>(edges[e][0])];
    return out;
}

/// Subtracts the tree potential from xi; every off-tree value is then the period of
/// that edge's fundamental cycle and is rewritten in gamma_basis coordinates.
inline IntegralizedCocycle integralize(const SimplicialComplex& x, const RationalCochain1& xi, const PeriodHom& per) {
    require_closed(x, xi);
    const auto& forest = per.h1.forest;
    const auto pot = forest.potential(x, xi);
    IntegralizedCocycle out;
    out.complex = x;
    out.rank = per.rank();
    out.weights = WeightSystem(per.gamma_basis);
    out.tree_edge = forest.is_tree_edge;
    const auto& edges = x.cells(1);
    out.z.assign(edges.size(), Exponent(out.rank, 0));
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (forest.is_tree_edge[e]) continue;
        const auto u = static_cast<std::size_t>(edges[e][0]), v = static_cast<std::size_t>(edges[e][1]);
        PeriodVector value = xi.values[e] + pot[u] - pot[v];
        auto coords = per.lattice_coordinates(value);
        if (!coords) throw std::logic_error("edge period is not in the period lattice");
        for (std::size_t j = 0; j < out.rank; ++j) {
            if (abs_value((*coords)[j]) > Integer(std::numeric_limits<long>::max())) throw UnsupportedOperation("exponent too large");
            out.z[e][j] = static_cast<long>((*coords)[j]);
        }
    }
    validate_cocycle(out);
    for (std::size_t g = 0; g < per.h1.generators.size(); ++g) {
        Exponent sum(out.rank, 0);
        const auto& cyc = per.h1.generators[g].cycle;
        for (std::size_t e = 0; e < edges.size(); ++e)
            for (std::size_t j = 0; j < out.rank; ++j) sum[j] += static_cast<long>(cyc[e]) * out.z[e][j];
        for (std::size_t j = 0; j < out.rank; ++j)
            if (Integer(sum[j]) != per.change_of_basis(g, j)) throw std::logic_error("integralized cocycle disagrees with the periods");
    }
    return out;
}

}  // namespace novikov
