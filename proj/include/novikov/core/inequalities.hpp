#pragma once

// Novikov inequalities against declared critical data.

#include "novikov/core/numbers.hpp"

#include <map>

namespace novikov {

struct CriticalData {
    std::map<std::size_t, std::size_t> counts;  ///< stacky index -> number of critical points
    std::string provenance;

    std::size_t count(std::size_t j) const {
        auto it = counts.find(j);
        return it == counts.end() ? 0 : it->second;
    }
};

struct InequalityVerdict {
    std::size_t degree = 0;
    long lhs = 0, rhs = 0;
    bool holds() const { return lhs >= rhs; }
    long slack() const { return lhs - rhs; }
};

struct InequalityReport {
    std::vector<InequalityVerdict> weak;    ///< c_j >= b_j + q_j + q_{j-1}
    std::vector<InequalityVerdict> strong;  ///< alternating sums, plus q_j
    bool betti_only = false;                ///< q unavailable: q terms dropped

    bool all_hold() const {
        for (const auto* family : {&weak, &strong})
            for (const auto& v : *family)
                if (!v.holds()) return false;
        return true;
    }
};

inline InequalityReport check_inequalities(const NovikovNumbers& n, const CriticalData& c) {
    const std::size_t top = n.b.size();
    for (const auto& [j, count] : c.counts)
        if (j >= top && count != 0) throw InvalidInput("critical point index " + std::to_string(j) + " exceeds the dimension");
    InequalityReport r;
    r.betti_only = !n.q.has_value();
    auto q = [&](long j) -> long {
        if (!n.q || j < 0 || j >= static_cast<long>(top)) return 0;
        return static_cast<long>((*n.q)[static_cast<std::size_t>(j)]);
    };
    for (std::size_t j = 0; j < top; ++j) {
        const long jj = static_cast<long>(j);
        r.weak.push_back({j, static_cast<long>(c.count(j)), static_cast<long>(n.b[j]) + q(jj) + q(jj - 1)});
        long alt_c = 0, alt_b = 0;
        for (std::size_t k = 0; k <= j; ++k) {
            const long sign = k % 2 ? -1 : 1;
            alt_c += sign * static_cast<long>(c.count(j - k));
            alt_b += sign * static_cast<long>(n.b[j - k]);
        }
        r.strong.push_back({j, alt_c, q(jj) + alt_b});
    }
    return r;
}

}  // namespace novikov
