#pragma once

// Novikov Betti and torsion numbers of a closed 1-cochain on the orbit complex.

#include "novikov/complex/homology.hpp"
#include "novikov/core/twisted_complex.hpp"

namespace novikov {

enum class NovikovRoute { IntegerHomology, LocalizedFactors, BettiOnly };

inline std::string to_string(NovikovRoute r) {
    switch (r) {
        case NovikovRoute::IntegerHomology: return "integer-homology";
        case NovikovRoute::LocalizedFactors: return "localized-invariant-factors";
        case NovikovRoute::BettiOnly: return "betti-only";
    }
    return "?";
}

struct NovikovNumbers {
    std::vector<std::size_t> b;
    std::optional<std::vector<std::size_t>> q;  ///< absent when rank >= 2
    std::size_t rank_xi = 0;
    NovikovRoute route = NovikovRoute::IntegerHomology;
    std::string note;

    long euler_characteristic() const {
        long chi = 0;
        for (std::size_t j = 0; j < b.size(); ++j) chi += (j % 2 ? -1 : 1) * static_cast<long>(b[j]);
        return chi;
    }
};

struct NovikovOptions {
    InvariantFactorOptions factors;
};

/// From a twisted complex of rank >= 1.
inline NovikovNumbers novikov_numbers(const TwistedComplex& c, const NovikovOptions& opt = {}) {
    NovikovNumbers out;
    out.rank_xi = c.weights.nvars();
    const std::size_t top = c.ranks.size();
    std::vector<std::size_t> rk(top + 1, 0);  // rk[q] = rank of boundary q
    for (std::size_t q = 1; q < top; ++q) rk[q] = fraction_field_rank(c.boundaries[q]);
    for (std::size_t j = 0; j < top; ++j) out.b.push_back(c.ranks[j] - rk[j] - rk[j + 1]);
    if (out.rank_xi <= 1) {
        out.route = out.rank_xi == 0 ? NovikovRoute::IntegerHomology : NovikovRoute::LocalizedFactors;
        std::vector<std::size_t> q(top, 0);
        for (std::size_t j = 0; j + 1 < top; ++j) {
            auto f = invariant_factors(c.boundaries[j + 1], c.weights, opt.factors);
            if (f.rank != rk[j + 1]) throw std::logic_error("invariant factor rank disagrees with the fraction-field rank");
            q[j] = f.nonunit_count;
        }
        out.q = std::move(q);
    } else {
        out.route = NovikovRoute::BettiOnly;
        out.note = "torsion numbers need rank <= 1 (rank is " + std::to_string(out.rank_xi) +
                   "); use a rank-1 perturbation to study torsion";
    }
    return out;
}

inline NovikovNumbers novikov_numbers(const SimplicialComplex& x, const RationalCochain1& xi, const NovikovOptions& opt = {}) {
    PeriodHom per = period_homomorphism(x, xi);
    if (per.rank() == 0) {
        IntHomology h = integer_homology(x);
        NovikovNumbers out;
        out.route = NovikovRoute::IntegerHomology;
        std::vector<std::size_t> q;
        for (std::size_t j = 0; j < h.betti.size(); ++j) {
            out.b.push_back(static_cast<std::size_t>(h.betti[j]));
            q.push_back(h.torsion[j].size());
        }
        out.q = std::move(q);
        return out;
    }
    return novikov_numbers(twisted_complex(integralize(x, xi, per)), opt);
}

}  // namespace novikov
