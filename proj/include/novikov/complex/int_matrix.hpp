#pragma once

#include "novikov/complex/arith.hpp"

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace novikov {

/// Dense row-major integer matrix.  Empty shapes (0 x n, m x 0) are valid.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw InvalidInput("ragged matrix literal");
            for (long v : row) data_.emplace_back(v);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0) return false;
        return true;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    /// row[dst] += factor * row[src]
    void add_row(std::size_t dst, std::size_t src, const Integer& factor) {
        if (factor == 0) return;
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(src, j) != 0) (*this)(dst, j) += factor * (*this)(src, j);
    }
    /// col[dst] += factor * col[src]
    void add_col(std::size_t dst, std::size_t src, const Integer& factor) {
        if (factor == 0) return;
        for (std::size_t i = 0; i < rows_; ++i)
            if ((*this)(i, src) != 0) (*this)(i, dst) += factor * (*this)(i, src);
    }
    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
    }

    IntMatrix transposed() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string str() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
            os << ']';
        }
        os << ']';
        return os.str();
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw InvalidInput("matrix product shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Integer& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0) c(i, j) += x * b(k, j);
        }
    return c;
}

inline std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& v) {
    if (a.cols() != v.size()) throw InvalidInput("matrix-vector shape mismatch");
    std::vector<Integer> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0 && v[j] != 0) out[i] += a(i, j) * v[j];
    return out;
}

/// Rank over Q by fraction-free elimination on a copy.
inline std::size_t rank_over_rationals(IntMatrix m) {
    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        m.swap_rows(rank, pivot);
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            for (std::size_t j = col + 1; j < m.cols(); ++j)
                m(i, j) = (m(rank, col) * m(i, j) - m(i, col) * m(rank, j)) / prev;
            m(i, col) = 0;
        }
        prev = m(rank, col);
        ++rank;
    }
    return rank;
}

}  // namespace novikov
