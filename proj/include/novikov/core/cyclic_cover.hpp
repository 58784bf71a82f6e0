#pragma once

// Finite check of the twisted complex: the p-fold cyclic cover built explicitly
// against the twisted complex with T acting as the cyclic shift on Z^p.

#include "novikov/complex/homology.hpp"
#include "novikov/core/twisted_complex.hpp"

namespace novikov {

struct CyclicCoverReport {
    std::size_t p = 0;
    IntHomology cover;        ///< homology of the explicit cover X_p
    IntHomology specialized;  ///< homology of the twisted complex at T = shift
    bool agree() const { return cover == specialized; }
};

/// X_p: vertices (v, i) for i in Z/p; simplex s = (v_0..v_q) on sheet i lifts to the
/// vertices (v_j, i + z(v_0, v_j)).
inline SimplicialComplex cyclic_cover(const IntegralizedCocycle& z, std::size_t p) {
    const auto& k = z.complex;
    const long pp = static_cast<long>(p);
    auto sheet = [&](long i) { return ((i % pp) + pp) % pp; };
    std::vector<std::string> names;
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t v = 0; v < k.vertex_count(); ++v) names.push_back(k.vertex_name(static_cast<int>(v)) + "#" + std::to_string(i));
    auto lift = [&](int v, long i) { return static_cast<int>(sheet(i) * static_cast<long>(k.vertex_count()) + v); };
    std::vector<std::vector<int>> simplices;
    for (int q = 0; q <= k.dimension(); ++q)
        for (const auto& s : k.cells(q))
            for (long i = 0; i < pp; ++i) {
                std::vector<int> up;
                for (int v : s) up.push_back(lift(v, i + (v == s[0] ? 0 : z.at(s[0], v)[0])));
                simplices.push_back(std::move(up));
            }
    return SimplicialComplex::from_indices(std::move(names), simplices);
}

/// Integer chain complex of c with each Laurent entry sum c_m T^m replaced by the
/// p x p block sum c_m S^m, S the cyclic shift.
inline IntChainComplex specialize_at_shift(const TwistedComplex& c, std::size_t p) {
    IntChainComplex out;
    for (auto r : c.ranks) out.ranks.push_back(r * p);
    const long pp = static_cast<long>(p);
    for (const auto& m : c.boundaries) {
        IntMatrix x(m.rows() * p, m.cols() * p);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                for (const auto& [e, coeff] : m(i, j).terms()) {
                    const long shift = ((e[0] % pp) + pp) % pp;
                    for (long a = 0; a < pp; ++a)
                        x(i * p + static_cast<std::size_t>((a + shift) % pp), j * p + static_cast<std::size_t>(a)) += coeff;
                }
        out.boundaries.push_back(std::move(x));
    }
    return out;
}

inline constexpr std::size_t kCyclicCoverCap = 12;

inline CyclicCoverReport cyclic_cover_oracle(const IntegralizedCocycle& z, std::size_t p, std::size_t cap = kCyclicCoverCap) {
    if (z.rank != 1) throw InvalidInput("cyclic cover check needs a rank-1 class (rank is " + std::to_string(z.rank) + ")");
    if (p < 2) throw InvalidInput("cover degree must be at least 2");
    if (p > cap) throw UnsupportedOperation("cover degree " + std::to_string(p) + " exceeds the cap of " + std::to_string(cap));
    CyclicCoverReport r;
    r.p = p;
    r.cover = integer_homology(cyclic_cover(z, p));
    r.specialized = integer_homology(specialize_at_shift(twisted_complex(z), p));
    return r;
}

}  // namespace novikov
