#pragma once

// Matrices over Z[T^{+-1}]: rank over the fraction field and invariant factors over
// the localized ring.

#include "novikov/ring/localized.hpp"

#include <functional>
#include <numeric>

namespace novikov {

class LaurentMatrix {
public:
    LaurentMatrix() = default;
    LaurentMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
        : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, LaurentPoly(nvars)) {}

    static LaurentMatrix from_integers(const IntMatrix& m, std::size_t nvars = 0) {
        LaurentMatrix out(m.rows(), m.cols(), nvars);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = LaurentPoly::constant(nvars, m(i, j));
        return out;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nvars() const { return nvars_; }

    LaurentPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const LaurentPoly& p) { return p.is_zero(); });
    }

    /// Sub-matrix on the given rows and columns.
    LaurentMatrix select(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
        LaurentMatrix out(rs.size(), cs.size(), nvars_);
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j) out(i, j) = (*this)(rs[i], cs[j]);
        return out;
    }

    /// Drops row p and column q.
    LaurentMatrix without(std::size_t p, std::size_t q) const {
        std::vector<std::size_t> rs, cs;
        for (std::size_t i = 0; i < rows_; ++i)
            if (i != p) rs.push_back(i);
        for (std::size_t j = 0; j < cols_; ++j)
            if (j != q) cs.push_back(j);
        return select(rs, cs);
    }

    /// Entries evaluated at T = t, rows scaled to clear denominators.
    IntMatrix evaluated(const std::vector<Rational>& t) const {
        IntMatrix out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            std::vector<Rational> row(cols_);
            Integer den = 1;
            for (std::size_t j = 0; j < cols_; ++j) {
                row[j] = (*this)(i, j).evaluate(t);
                den = boost::multiprecision::lcm(den, denominator_of(row[j]));
            }
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = numerator_of(row[j] * den);
        }
        return out;
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < rows_; ++i) {
            out += "[";
            for (std::size_t j = 0; j < cols_; ++j) out += (j ? ", " : "") + (*this)(i, j).str();
            out += "]\n";
        }
        return out;
    }

private:
    std::size_t rows_ = 0, cols_ = 0, nvars_ = 0;
    std::vector<LaurentPoly> data_;
};

inline LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.cols() != b.rows() || a.nvars() != b.nvars()) throw InvalidInput("matrix shapes do not compose");
    LaurentMatrix out(a.rows(), b.cols(), a.nvars());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

inline bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.nvars() != b.nvars()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}

namespace detail {

/// Clears column q with the monomial unit at (p, q) and drops row p, column q.
inline LaurentMatrix eliminate_monomial_pivot(const LaurentMatrix& a, std::size_t p, std::size_t q) {
    const auto& [e, c] = *a(p, q).terms().begin();
    const LaurentPoly inv = LaurentPoly::monomial(-e, c);  // c = +-1 is its own inverse
    LaurentMatrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i == p || a(i, q).is_zero()) continue;
        const LaurentPoly f = a(i, q) * inv;
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(p, j).is_zero()) out(i, j) -= f * a(p, j);
    }
    return out.without(p, q);
}

/// Clears column q with a unit pivot u at (p, q): row_i <- u row_i - a_iq row_p, which
/// only rescales rows by units.  Drops row p and column q.
inline LaurentMatrix eliminate_unit_pivot(const LaurentMatrix& a, std::size_t p, std::size_t q) {
    if (a(p, q).is_monomial_unit()) return eliminate_monomial_pivot(a, p, q);
    const LaurentPoly& u = a(p, q);
    LaurentMatrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i == p || a(i, q).is_zero()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = u * a(i, j) - a(i, q) * a(p, j);
    }
    return out.without(p, q);
}

inline std::optional<std::pair<std::size_t, std::size_t>> find_monomial_unit(const LaurentMatrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j).is_monomial_unit()) return std::pair{i, j};
    return std::nullopt;
}

/// Rank by fraction-free (Bareiss) elimination; every division is exact.
inline std::size_t bareiss_rank(LaurentMatrix a) {
    const std::size_t m = a.rows(), n = a.cols();
    LaurentPoly prev = LaurentPoly::constant(a.nvars(), 1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::optional<std::size_t> best;
        for (std::size_t i = rank; i < m; ++i)
            if (!a(i, col).is_zero() && (!best || a(i, col).term_count() < a(*best, col).term_count())) best = i;
        if (!best) continue;
        if (*best != rank)
            for (std::size_t j = 0; j < n; ++j) std::swap(a(*best, j), a(rank, j));
        for (std::size_t i = rank + 1; i < m; ++i) {
            for (std::size_t j = col + 1; j < n; ++j) {
                LaurentPoly t = a(rank, col) * a(i, j) - a(i, col) * a(rank, j);
                auto q = divide_exact(t, prev);
                if (!q) throw std::logic_error("Bareiss step is not exact");
                a(i, j) = std::move(*q);
            }
            a(i, col) = LaurentPoly(a.nvars());
        }
        prev = a(rank, col);
        ++rank;
    }
    return rank;
}

inline LaurentPoly determinant(LaurentMatrix a) {
    const std::size_t n = a.rows();
    if (n == 0) return LaurentPoly::constant(a.nvars(), 1);
    LaurentPoly prev = LaurentPoly::constant(a.nvars(), 1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k).is_zero()) ++p;
        if (p == n) return LaurentPoly(a.nvars());
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                auto q = divide_exact(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
                if (!q) throw std::logic_error("Bareiss step is not exact");
                a(i, j) = std::move(*q);
            }
        }
        prev = a(k, k);
    }
    return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

}  // namespace detail

/// Rank over the fraction field Q(T_1..T_r).  Monomial units are eliminated first
/// (exactly, in the Laurent ring), then Bareiss finishes the residual matrix.
inline std::size_t fraction_field_rank(LaurentMatrix a, bool monomial_prepass = true) {
    std::size_t rank = 0;
    if (monomial_prepass)
        while (auto pos = detail::find_monomial_unit(a)) {
            a = detail::eliminate_monomial_pivot(a, pos->first, pos->second);
            ++rank;
        }
    return rank + detail::bareiss_rank(std::move(a));
}

struct InvariantFactors {
    std::size_t rank = 0;
    std::vector<LocalizedScalar> factors;  ///< d_1 | d_2 | ... ; units first
    std::size_t nonunit_count = 0;
};

struct InvariantFactorOptions {
    bool unit_stage = true;
    std::size_t minor_cap = 8;  ///< largest residual dimension for the determinantal stage
};

namespace detail {

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        if (!f(idx)) return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// gcd of all k x k minors; zero when every minor vanishes.
inline LocalizedScalar determinantal_divisor(const LaurentMatrix& a, std::size_t k, const WeightSystem& ws) {
    std::optional<LocalizedScalar> g;
    const LocalizedScalar one = localized(LaurentPoly::constant(a.nvars(), 1));
    for_each_subset(a.rows(), k, [&](const std::vector<std::size_t>& rs) {
        bool go_on = true;
        for_each_subset(a.cols(), k, [&](const std::vector<std::size_t>& cs) {
            LaurentPoly d = determinant(a.select(rs, cs));
            if (d.is_zero()) return true;
            g = g ? localized_gcd(*g, localized(d), ws) : localized_gcd(localized(d), localized(d), ws);
            if (is_unit(*g, ws)) {
                g = one;
                go_on = false;
            }
            return go_on;
        });
        return go_on;
    });
    return g ? *g : localized(LaurentPoly(a.nvars()));
}

}  // namespace detail

/// Invariant factors over the localized ring (r <= 1).  Stage 1 removes unit pivots
/// one at a time; stage 2 takes quotients of determinantal divisors of what is left.
inline InvariantFactors invariant_factors(LaurentMatrix a, const WeightSystem& ws, const InvariantFactorOptions& opt = {}) {
    detail::require_univariate(ws, "torsion (invariant factors)");
    if (a.nvars() != ws.nvars()) throw InvalidInput("matrix and weight system disagree on the variable count");
    InvariantFactors out;
    const LocalizedScalar one = localized(LaurentPoly::constant(a.nvars(), 1));
    if (opt.unit_stage) {
        while (true) {
            std::optional<std::pair<std::size_t, std::size_t>> best;
            for (std::size_t i = 0; i < a.rows(); ++i)
                for (std::size_t j = 0; j < a.cols(); ++j) {
                    const auto& x = a(i, j);
                    if (x.is_zero() || abs_value(ws.leading_coefficient(x)) != 1) continue;
                    if (!best || x.term_count() < a(best->first, best->second).term_count()) best = std::pair{i, j};
                }
            if (!best) break;
            a = detail::eliminate_unit_pivot(a, best->first, best->second);
            out.factors.push_back(one);
            ++out.rank;
        }
    }
    std::vector<std::size_t> rs, cs;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero()) {
                rs.push_back(i);
                break;
            }
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (!a(i, j).is_zero()) {
                cs.push_back(j);
                break;
            }
    a = a.select(rs, cs);
    if (a.rows() > opt.minor_cap || a.cols() > opt.minor_cap)
        throw UnsupportedOperation("residual matrix " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                   " exceeds the determinantal cap of " + std::to_string(opt.minor_cap));
    LocalizedScalar prev = one;
    for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
        LocalizedScalar delta = detail::determinantal_divisor(a, k, ws);
        if (delta.is_zero()) break;
        LocalizedScalar d = localized(quotient(delta, prev, ws).num);  // the denominator is a unit
        if (!out.factors.empty() && !divides(out.factors.back(), d, ws)) throw std::logic_error("invariant factors do not form a divisibility chain");
        out.factors.push_back(is_unit(d, ws) ? one : d);
        ++out.rank;
        prev = delta;
    }
    for (const auto& d : out.factors)
        if (!is_unit(d, ws)) ++out.nonunit_count;
    return out;
}

}  // namespace novikov
