#pragma once

#include "novikov/complex/chain_complex.hpp"
#include "novikov/complex/smith.hpp"

#include <vector>

namespace novikov {

struct IntHomology {
    std::vector<long> betti;
    /// Invariant factors > 1 per degree, in divisibility order.
    std::vector<std::vector<Integer>> torsion;

    long euler_characteristic() const {
        long chi = 0;
        for (std::size_t q = 0; q < betti.size(); ++q) chi += (q % 2 == 0 ? 1 : -1) * betti[q];
        return chi;
    }

    friend bool operator==(const IntHomology&, const IntHomology&) = default;
};

/// H_q = ker d_q / im d_{q+1}, read off the Smith forms of the two boundaries.
inline IntHomology integer_homology(const IntChainComplex& c) {
    const int top = c.top_degree();
    IntHomology h;
    std::vector<SNFResult> snf;
    for (int q = 0; q <= top + 1; ++q) snf.push_back(smith_normal_form(c.boundary(q)));
    for (int q = 0; q <= top; ++q) {
        const long rank_q = static_cast<long>(c.ranks[static_cast<std::size_t>(q)]);
        h.betti.push_back(rank_q - static_cast<long>(snf[static_cast<std::size_t>(q)].rank) -
                          static_cast<long>(snf[static_cast<std::size_t>(q) + 1].rank));
        h.torsion.push_back(snf[static_cast<std::size_t>(q) + 1].nonunit_factors());
    }
    return h;
}

inline IntHomology integer_homology(const SimplicialComplex& k) { return integer_homology(chain_complex(k)); }

}  // namespace novikov
