#pragma once

// Chain complex of the cover over Z[T^{+-1}]: one basis element per simplex of X;
// the face opposite the first vertex carries T^{z(v0, v1)}.

#include "novikov/core/integralize.hpp"
#include "novikov/ring/laurent_matrix.hpp"

namespace novikov {

struct TwistedComplex {
    std::vector<std::size_t> ranks;
    std::vector<LaurentMatrix> boundaries;  ///< boundaries[q]: C_q -> C_{q-1}; boundaries[0] is 0 x ranks[0]
    WeightSystem weights;

    std::size_t top_degree() const { return ranks.empty() ? 0 : ranks.size() - 1; }
    LaurentMatrix boundary(std::size_t q) const {
        const std::size_t nvars = weights.nvars();
        if (q < boundaries.size()) return boundaries[q];
        return LaurentMatrix(q - 1 < ranks.size() ? ranks[q - 1] : 0, 0, nvars);
    }
};

inline void require_square_zero(const TwistedComplex& c) {
    for (std::size_t q = 2; q < c.boundaries.size(); ++q)
        if (!(c.boundaries[q - 1] * c.boundaries[q]).is_zero())
            throw std::logic_error("twisted boundaries do not square to zero in degree " + std::to_string(q));
}

inline TwistedComplex twisted_complex(const IntegralizedCocycle& z) {
    validate_cocycle(z);
    const auto& k = z.complex;
    const std::size_t r = z.rank;
    TwistedComplex out;
    out.weights = z.weights;
    for (int q = 0; q <= k.dimension(); ++q) out.ranks.push_back(k.count(q));
    out.boundaries.emplace_back(0, out.ranks.empty() ? 0 : out.ranks[0], r);
    for (std::size_t q = 1; q < out.ranks.size(); ++q) {
        LaurentMatrix m(out.ranks[q - 1], out.ranks[q], r);
        const auto& cells = k.cells(static_cast<int>(q));
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const Simplex& s = cells[c];
            for (std::size_t j = 0; j <= q; ++j) {
                Simplex face = s;
                face.erase(face.begin() + static_cast<long>(j));
                const std::size_t row = *k.index_of(face);
                if (j == 0) m(row, c) += LaurentPoly::monomial(z.at(s[0], s[1]));
                else m(row, c) += LaurentPoly::constant(r, j % 2 ? -1 : 1);
            }
        }
        out.boundaries.push_back(std::move(m));
    }
    require_square_zero(out);
    return out;
}

}  // namespace novikov
