#pragma once

#include "novikov/complex/arith.hpp"

#include <string>
#include <vector>

namespace novikov {

/// Finite group given by its multiplication table over element indices.
/// product(a, b) is "a then b" in the table's own convention; actions must
/// satisfy act(product(a, b), v) = act(a, act(b, v)).
class FiniteGroup {
public:
    FiniteGroup() : FiniteGroup({"e"}, {{0}}) {}

    FiniteGroup(std::vector<std::string> names, std::vector<std::vector<int>> table)
        : names_(std::move(names)), table_(std::move(table)) {
        const std::size_t n = names_.size();
        if (n == 0) throw InvalidInput("group has no elements");
        if (table_.size() != n) throw InvalidInput("group table has wrong number of rows");
        for (const auto& row : table_) {
            if (row.size() != n) throw InvalidInput("group table row has wrong length");
            for (int x : row)
                if (x < 0 || static_cast<std::size_t>(x) >= n) throw InvalidInput("group table entry out of range");
        }
        const int sz = static_cast<int>(n);
        for (int a = 0; a < sz; ++a)
            for (int b = 0; b < sz; ++b)
                for (int c = 0; c < sz; ++c)
                    if (product(product(a, b), c) != product(a, product(b, c)))
                        throw ValidationError("group table is not associative");
        identity_ = -1;
        for (int e = 0; e < sz && identity_ < 0; ++e) {
            bool ok = true;
            for (int a = 0; a < sz && ok; ++a) ok = product(e, a) == a && product(a, e) == a;
            if (ok) identity_ = e;
        }
        if (identity_ < 0) throw ValidationError("group table has no identity");
        inverses_.assign(n, -1);
        for (int a = 0; a < sz; ++a)
            for (int b = 0; b < sz; ++b)
                if (product(a, b) == identity_ && product(b, a) == identity_) inverses_[static_cast<std::size_t>(a)] = b;
        for (int inv : inverses_)
            if (inv < 0) throw ValidationError("group table has an element without inverse");
    }

    static FiniteGroup cyclic(int order) {
        std::vector<std::string> names;
        std::vector<std::vector<int>> table(static_cast<std::size_t>(order));
        for (int i = 0; i < order; ++i) {
            names.push_back(i == 0 ? "e" : "r" + std::to_string(i));
            for (int j = 0; j < order; ++j) table[static_cast<std::size_t>(i)].push_back((i + j) % order);
        }
        return FiniteGroup(std::move(names), std::move(table));
    }

    int order() const { return static_cast<int>(names_.size()); }
    int identity() const { return identity_; }
    int product(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    int inverse(int a) const { return inverses_[static_cast<std::size_t>(a)]; }
    const std::string& name(int a) const { return names_.at(static_cast<std::size_t>(a)); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<std::vector<int>>& table() const { return table_; }

    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return static_cast<int>(i);
        throw InvalidInput("unknown group element '" + name + "'");
    }

private:
    std::vector<std::string> names_;
    std::vector<std::vector<int>> table_;
    int identity_ = 0;
    std::vector<int> inverses_;
};

}  // namespace novikov
