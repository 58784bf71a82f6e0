#pragma once

#include "novikov/complex/arith.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace novikov {

/// Vertices are indices into the declared vertex list; a simplex is a
/// strictly increasing index tuple.
using Simplex = std::vector<int>;

/// Sorts a vertex tuple in place; returns the permutation sign (+1/-1),
/// or 0 when a vertex repeats.
inline int sort_with_parity(Simplex& s) {
    int sign = 1;
    for (std::size_t i = 1; i < s.size(); ++i)
        for (std::size_t j = i; j > 0 && s[j - 1] > s[j]; --j) {
            std::swap(s[j - 1], s[j]);
            sign = -sign;
        }
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] == s[i]) return 0;
    return sign;
}

/// Finite abstract simplicial complex, closed under faces.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Builds the downward closure of `simplices` (given as vertex-index tuples in
    /// any order) over `vertex_names`.  Every declared vertex is a 0-cell.
    static SimplicialComplex from_indices(std::vector<std::string> vertex_names,
                                          const std::vector<std::vector<int>>& simplices) {
        if (simplices.empty() && vertex_names.empty()) throw InvalidInput("empty simplex list");
        SimplicialComplex k;
        k.names_ = std::move(vertex_names);
        const int n = static_cast<int>(k.names_.size());
        std::vector<std::vector<Simplex>> by_dim(1);
        for (int v = 0; v < n; ++v) by_dim[0].push_back({v});
        for (const auto& raw : simplices) {
            if (raw.empty()) throw InvalidInput("empty simplex tuple");
            Simplex s = raw;
            for (int v : s)
                if (v < 0 || v >= n) throw InvalidInput("unknown vertex index " + std::to_string(v));
            if (sort_with_parity(s) == 0) throw InvalidInput("simplex with repeated vertex");
            add_closure(s, by_dim);
        }
        for (auto& level : by_dim) {
            std::sort(level.begin(), level.end());
            level.erase(std::unique(level.begin(), level.end()), level.end());
        }
        while (by_dim.size() > 1 && by_dim.back().empty()) by_dim.pop_back();
        k.cells_ = std::move(by_dim);
        k.rebuild_index();
        return k;
    }

    /// Builds from named vertex tuples; vertex order is the declaration order.
    static SimplicialComplex build(std::vector<std::string> vertex_names,
                                   const std::vector<std::vector<std::string>>& simplex_list) {
        if (simplex_list.empty()) throw InvalidInput("empty simplex list");
        std::unordered_map<std::string, int> idx;
        for (std::size_t i = 0; i < vertex_names.size(); ++i)
            if (!idx.emplace(vertex_names[i], static_cast<int>(i)).second)
                throw InvalidInput("duplicate vertex identifier '" + vertex_names[i] + "'");
        std::vector<std::vector<int>> tuples;
        for (const auto& t : simplex_list) {
            std::vector<int> s;
            for (const auto& name : t) {
                auto it = idx.find(name);
                if (it == idx.end()) throw InvalidInput("unknown vertex identifier '" + name + "'");
                s.push_back(it->second);
            }
            tuples.push_back(std::move(s));
        }
        return from_indices(std::move(vertex_names), tuples);
    }

    /// Vertex names default to "0", "1", ...
    static SimplicialComplex from_indices(int vertex_count, const std::vector<std::vector<int>>& simplices) {
        std::vector<std::string> names;
        for (int i = 0; i < vertex_count; ++i) names.push_back(std::to_string(i));
        return from_indices(std::move(names), simplices);
    }

    int dimension() const { return static_cast<int>(cells_.size()) - 1; }
    std::size_t vertex_count() const { return names_.size(); }
    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::string& vertex_name(int v) const { return names_.at(static_cast<std::size_t>(v)); }

    std::optional<int> vertex_index(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return static_cast<int>(i);
        return std::nullopt;
    }

    /// Cells of dimension q in canonical (lexicographic) order; empty outside 0..dim.
    const std::vector<Simplex>& cells(int q) const {
        static const std::vector<Simplex> none;
        if (q < 0 || q > dimension()) return none;
        return cells_[static_cast<std::size_t>(q)];
    }
    std::size_t count(int q) const { return cells(q).size(); }

    std::vector<std::size_t> f_vector() const {
        std::vector<std::size_t> f;
        for (const auto& level : cells_) f.push_back(level.size());
        return f;
    }

    /// Index of a sorted simplex among cells of its dimension.
    std::optional<std::size_t> index_of(const Simplex& s) const {
        if (s.empty() || static_cast<int>(s.size()) - 1 > dimension()) return std::nullopt;
        const auto& m = index_[s.size() - 1];
        auto it = m.find(s);
        if (it == m.end()) return std::nullopt;
        return it->second;
    }
    bool contains(const Simplex& s) const { return index_of(s).has_value(); }

    /// Index of the edge {u, v} (any order).
    std::optional<std::size_t> edge_index(int u, int v) const {
        if (u == v) return std::nullopt;
        return index_of(u < v ? Simplex{u, v} : Simplex{v, u});
    }

    long euler_characteristic() const {
        long chi = 0;
        for (std::size_t q = 0; q < cells_.size(); ++q)
            chi += (q % 2 == 0 ? 1 : -1) * static_cast<long>(cells_[q].size());
        return chi;
    }

    /// Disjoint union; vertices of `other` are appended after ours.
    SimplicialComplex disjoint_union(const SimplicialComplex& other) const {
        std::vector<std::string> names = names_;
        const int shift = static_cast<int>(names_.size());
        for (const auto& n : other.names_) names.push_back(n + "'");
        std::vector<std::vector<int>> tuples;
        for (const auto& level : cells_)
            for (const auto& s : level) tuples.push_back(s);
        for (const auto& level : other.cells_)
            for (auto s : level) {
                for (int& v : s) v += shift;
                tuples.push_back(std::move(s));
            }
        return from_indices(std::move(names), tuples);
    }

    /// Maximal simplices as vertex-index tuples.
    std::vector<Simplex> facets() const {
        std::vector<Simplex> out;
        for (int q = dimension(); q >= 0; --q)
            for (const auto& s : cells(q)) {
                bool maximal = true;
                if (q < dimension())
                    for (const auto& t : cells(q + 1))
                        if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                            maximal = false;
                            break;
                        }
                if (maximal) out.push_back(s);
            }
        return out;
    }

private:
    static void add_closure(const Simplex& s, std::vector<std::vector<Simplex>>& by_dim) {
        const std::size_t k = s.size();
        if (by_dim.size() < k) by_dim.resize(k);
        // all nonempty subsets
        for (unsigned long mask = 1; mask < (1UL << k); ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1UL << i)) face.push_back(s[i]);
            by_dim[face.size() - 1].push_back(std::move(face));
        }
    }

    void rebuild_index() {
        index_.assign(cells_.size(), {});
        for (std::size_t q = 0; q < cells_.size(); ++q)
            for (std::size_t i = 0; i < cells_[q].size(); ++i) index_[q].emplace(cells_[q][i], i);
    }

    std::vector<std::string> names_;
    std::vector<std::vector<Simplex>> cells_;
    std::vector<std::map<Simplex, std::size_t>> index_;
};

}  // namespace novikov
