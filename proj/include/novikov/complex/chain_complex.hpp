#pragma once

#include "novikov/complex/int_matrix.hpp"
#include "novikov/complex/simplicial_complex.hpp"

#include <vector>

namespace novikov {

/// boundaries[q] maps degree-q chains to degree-(q-1) chains
/// (rows = ranks[q-1], cols = ranks[q]); boundaries[0] is 0 x ranks[0].
struct IntChainComplex {
    std::vector<std::size_t> ranks;
    std::vector<IntMatrix> boundaries;

    int top_degree() const { return static_cast<int>(ranks.size()) - 1; }

    /// Empty matrix of the right shape outside the stored range.
    IntMatrix boundary(int q) const {
        if (q >= 0 && q < static_cast<int>(boundaries.size())) return boundaries[static_cast<std::size_t>(q)];
        const std::size_t cols = (q >= 0 && q < static_cast<int>(ranks.size())) ? ranks[static_cast<std::size_t>(q)] : 0;
        const std::size_t rows = (q - 1 >= 0 && q - 1 < static_cast<int>(ranks.size())) ? ranks[static_cast<std::size_t>(q - 1)] : 0;
        return IntMatrix(rows, cols);
    }

    /// Checks shapes and d_{q-1} d_q = 0.
    bool is_valid() const {
        if (boundaries.size() != ranks.size()) return false;
        for (std::size_t q = 0; q < ranks.size(); ++q) {
            const auto& d = boundaries[q];
            if (d.cols() != ranks[q] || d.rows() != (q == 0 ? 0 : ranks[q - 1])) return false;
            if (q >= 2 && !(boundaries[q - 1] * d).is_zero()) return false;
        }
        return true;
    }
};

/// Simplicial chain complex: entry (face, simplex) is (-1)^j for deleting vertex j.
inline IntChainComplex chain_complex(const SimplicialComplex& k) {
    IntChainComplex c;
    const int dim = k.dimension();
    for (int q = 0; q <= dim; ++q) c.ranks.push_back(k.count(q));
    c.boundaries.emplace_back(0, k.count(0));
    for (int q = 1; q <= dim; ++q) {
        IntMatrix d(k.count(q - 1), k.count(q));
        const auto& cells = k.cells(q);
        for (std::size_t col = 0; col < cells.size(); ++col) {
            const Simplex& s = cells[col];
            for (std::size_t j = 0; j < s.size(); ++j) {
                Simplex face = s;
                face.erase(face.begin() + static_cast<long>(j));
                d(*k.index_of(face), col) = (j % 2 == 0) ? 1 : -1;
            }
        }
        c.boundaries.push_back(std::move(d));
    }
    return c;
}

}  // namespace novikov
