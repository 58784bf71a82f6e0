#pragma once

// Smith and Hermite normal forms over the integers.

#include "novikov/complex/int_matrix.hpp"

#include <optional>
#include <vector>

namespace novikov {

struct SNFResult {
    /// min(rows, cols) entries d_1 | d_2 | ... , nonnegative, zeros last.
    std::vector<Integer> diagonal;
    std::size_t rank = 0;
    /// When retained: left * A * right == diag(diagonal) (padded to A's shape).
    std::optional<IntMatrix> left;
    std::optional<IntMatrix> right;
    /// Inverse of `left`, retained alongside it (used to read off cycle representatives).
    std::optional<IntMatrix> left_inverse;

    /// Diagonal entries other than 0 and 1.
    std::vector<Integer> nonunit_factors() const {
        std::vector<Integer> out;
        for (const auto& d : diagonal)
            if (d > 1) out.push_back(d);
        return out;
    }
};

namespace detail {

// Tracks the row/column operations applied to the working matrix.
struct SmithTracker {
    bool enabled;
    IntMatrix left, left_inv, right;

    SmithTracker(bool on, std::size_t m, std::size_t n)
        : enabled(on),
          left(on ? IntMatrix::identity(m) : IntMatrix()),
          left_inv(on ? IntMatrix::identity(m) : IntMatrix()),
          right(on ? IntMatrix::identity(n) : IntMatrix()) {}

    void swap_rows(std::size_t a, std::size_t b) {
        if (!enabled) return;
        left.swap_rows(a, b);
        left_inv.swap_cols(a, b);
    }
    void add_row(std::size_t dst, std::size_t src, const Integer& f) {
        if (!enabled) return;
        left.add_row(dst, src, f);
        left_inv.add_col(src, dst, -f);
    }
    void negate_row(std::size_t i) {
        if (!enabled) return;
        left.negate_row(i);
        for (std::size_t r = 0; r < left_inv.rows(); ++r) left_inv(r, i) = -left_inv(r, i);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (enabled) right.swap_cols(a, b);
    }
    void add_col(std::size_t dst, std::size_t src, const Integer& f) {
        if (enabled) right.add_col(dst, src, f);
    }
};

}  // namespace detail

/// Smith normal form with minimal-absolute-value pivoting.
inline SNFResult smith_normal_form(const IntMatrix& input, bool keep_transforms = false) {
    IntMatrix a = input;
    const std::size_t m = a.rows(), n = a.cols();
    detail::SmithTracker tr(keep_transforms, m, n);

    auto row_op = [&](std::size_t dst, std::size_t src, const Integer& f) {
        a.add_row(dst, src, f);
        tr.add_row(dst, src, f);
    };
    auto col_op = [&](std::size_t dst, std::size_t src, const Integer& f) {
        a.add_col(dst, src, f);
        tr.add_col(dst, src, f);
    };
    auto rswap = [&](std::size_t x, std::size_t y) {
        a.swap_rows(x, y);
        tr.swap_rows(x, y);
    };
    auto cswap = [&](std::size_t x, std::size_t y) {
        a.swap_cols(x, y);
        tr.swap_cols(x, y);
    };

    const std::size_t steps = std::min(m, n);
    std::size_t t = 0;
    for (; t < steps; ++t) {
        // minimal |entry| in the trailing block; a unit ends the search early
        std::size_t pi = m, pj = n;
        Integer best;
        for (std::size_t i = t; i < m && !(pi < m && best == 1); ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (a(i, j) == 0) continue;
                Integer v = abs_value(a(i, j));
                if (pi == m || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                    if (best == 1) break;
                }
            }
        if (pi == m) break;
        rswap(t, pi);
        cswap(t, pj);

        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a(i, t) == 0) continue;
                Integer q = a(i, t) / a(t, t);
                row_op(i, t, -q);
                if (a(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(t, j) == 0) continue;
                Integer q = a(t, j) / a(t, t);
                col_op(j, t, -q);
                if (a(t, j) != 0) dirty = true;
            }
            if (dirty) {
                // move the smallest leftover in row/column t onto the pivot
                std::size_t bi = t, bj = t;
                Integer bv = abs_value(a(t, t));
                for (std::size_t i = t + 1; i < m; ++i)
                    if (a(i, t) != 0 && abs_value(a(i, t)) < bv) bv = abs_value(a(i, t)), bi = i, bj = t;
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a(t, j) != 0 && abs_value(a(t, j)) < bv) bv = abs_value(a(t, j)), bi = t, bj = j;
                rswap(t, bi);
                cswap(t, bj);
                continue;
            }
            // divisibility of the trailing block by the pivot
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == m) break;
            row_op(t, bad, Integer(1));
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            tr.negate_row(t);
        }
    }

    SNFResult res;
    res.rank = t;
    res.diagonal.resize(steps);
    for (std::size_t i = 0; i < steps; ++i) res.diagonal[i] = a(i, i);
    if (keep_transforms) {
        res.left = std::move(tr.left);
        res.left_inverse = std::move(tr.left_inv);
        res.right = std::move(tr.right);
    }
    return res;
}

struct HermiteResult {
    IntMatrix form;       ///< row echelon, positive pivots, entries above pivots reduced
    IntMatrix transform;  ///< unimodular, transform * input == form
    IntMatrix transform_inverse;
    std::size_t rank = 0;
};

/// Row-style Hermite normal form: the nonzero rows of `form` are a Z-basis
/// of the row lattice of the input.
inline HermiteResult row_hermite(const IntMatrix& input) {
    IntMatrix a = input;
    const std::size_t m = a.rows(), n = a.cols();
    IntMatrix u = IntMatrix::identity(m), uinv = IntMatrix::identity(m);
    auto row_op = [&](std::size_t dst, std::size_t src, const Integer& f) {
        a.add_row(dst, src, f);
        u.add_row(dst, src, f);
        uinv.add_col(src, dst, -f);
    };
    auto rswap = [&](std::size_t x, std::size_t y) {
        a.swap_rows(x, y);
        u.swap_rows(x, y);
        uinv.swap_cols(x, y);
    };

    std::size_t r = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        for (;;) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i)
                if (a(i, col) != 0 && (best == m || abs_value(a(i, col)) < abs_value(a(best, col)))) best = i;
            if (best == m) break;
            rswap(r, best);
            bool done = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (a(i, col) == 0) continue;
                row_op(i, r, -(a(i, col) / a(r, col)));
                if (a(i, col) != 0) done = false;
            }
            if (done) break;
        }
        if (r >= m || a(r, col) == 0) continue;
        if (a(r, col) < 0) {
            a.negate_row(r);
            u.negate_row(r);
            for (std::size_t i = 0; i < m; ++i) uinv(i, r) = -uinv(i, r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            // floor division keeps the reduced entry in [0, pivot)
            Integer q = a(i, col) / a(r, col);
            if (a(i, col) - q * a(r, col) < 0) q -= 1;
            row_op(i, r, -q);
        }
        pivot_cols.push_back(col);
        ++r;
    }
    return {std::move(a), std::move(u), std::move(uinv), r};
}

}  // namespace novikov
