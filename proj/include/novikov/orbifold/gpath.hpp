#pragma once

// Discrete G-paths in the action groupoid Y x| group: edge-paths in Y
// alternating with arrows.  The arrow (v, g) runs from g.v to v.

#include "novikov/orbifold/action.hpp"

#include <deque>
#include <random>
#include <vector>

namespace novikov {

struct GroupArrow {
    int vertex = 0;   ///< target
    int element = 0;  ///< source is act(element, vertex)
    friend bool operator==(const GroupArrow&, const GroupArrow&) = default;
};

/// paths.size() == arrows.size() + 1; arrows[i] joins the end of paths[i] to the
/// start of paths[i + 1].  Each path is a nonempty vertex sequence; a single vertex
/// is the constant path.
struct GPath {
    std::vector<std::vector<int>> paths;
    std::vector<GroupArrow> arrows;

    int start() const { return paths.front().front(); }
    int end() const { return paths.back().back(); }
    bool is_loop() const { return start() == end(); }

    static GPath constant(int v) { return GPath{{{v}}, {}}; }

    friend bool operator==(const GPath&, const GPath&) = default;
};

inline void validate_gpath(const SimplicialAction& a, const GPath& s) {
    if (s.paths.empty() || s.paths.size() != s.arrows.size() + 1) throw InvalidInput("malformed G-path segment counts");
    const auto& k = a.space();
    const int n = static_cast<int>(k.vertex_count());
    for (const auto& p : s.paths) {
        if (p.empty()) throw InvalidInput("G-path segment without vertices");
        for (int v : p)
            if (v < 0 || v >= n) throw InvalidInput("G-path vertex out of range");
        for (std::size_t i = 1; i < p.size(); ++i)
            if (!k.edge_index(p[i - 1], p[i])) throw InvalidInput("G-path uses a non-edge");
    }
    for (std::size_t i = 0; i < s.arrows.size(); ++i) {
        const auto& ar = s.arrows[i];
        if (ar.element < 0 || ar.element >= a.group().order()) throw InvalidInput("G-path arrow element out of range");
        if (s.paths[i].back() != a.act(ar.element, ar.vertex) || s.paths[i + 1].front() != ar.vertex)
            throw InvalidInput("G-path arrow does not connect consecutive segments");
    }
}

/// Sum of w over every edge of every segment; arrows contribute nothing.
inline PeriodVector gpath_period(const SimplicialComplex& k, const GPath& s, const RationalCochain1& w) {
    PeriodVector total = w.space.zero();
    for (const auto& p : s.paths)
        for (std::size_t i = 1; i < p.size(); ++i) total += w.at(k, p[i - 1], p[i]);
    return total;
}

/// s first, then t, joined by a unit arrow.
inline GPath concatenate(const SimplicialAction& a, const GPath& s, const GPath& t) {
    if (s.end() != t.start()) throw InvalidInput("G-paths are not composable");
    GPath out = s;
    out.arrows.push_back({t.start(), a.group().identity()});
    out.paths.insert(out.paths.end(), t.paths.begin(), t.paths.end());
    out.arrows.insert(out.arrows.end(), t.arrows.begin(), t.arrows.end());
    return out;
}

inline GPath inverse(const SimplicialAction& a, const GPath& s) {
    GPath out;
    for (auto it = s.paths.rbegin(); it != s.paths.rend(); ++it) out.paths.emplace_back(it->rbegin(), it->rend());
    for (auto it = s.arrows.rbegin(); it != s.arrows.rend(); ++it)
        out.arrows.push_back({a.act(it->element, it->vertex), a.group().inverse(it->element)});
    return out;
}

/// Splits segment `seg` after position `pos` and inserts a unit arrow there.
inline GPath insert_unit_arrow(const SimplicialAction& a, const GPath& s, std::size_t seg, std::size_t pos) {
    GPath out = s;
    auto& p = out.paths.at(seg);
    if (pos >= p.size()) throw InvalidInput("split position out of range");
    std::vector<int> tail(p.begin() + static_cast<long>(pos), p.end());
    p.erase(p.begin() + static_cast<long>(pos) + 1, p.end());
    const int at = p.back();
    out.paths.insert(out.paths.begin() + static_cast<long>(seg) + 1, std::move(tail));
    out.arrows.insert(out.arrows.begin() + static_cast<long>(seg), GroupArrow{at, a.group().identity()});
    return out;
}

/// Concatenation equivalence: removes every unit arrow by merging its neighbours.
inline GPath remove_unit_arrows(const SimplicialAction& a, const GPath& s) {
    GPath out{{s.paths.front()}, {}};
    for (std::size_t i = 0; i < s.arrows.size(); ++i) {
        const auto& next = s.paths[i + 1];
        if (s.arrows[i].element == a.group().identity()) {
            out.paths.back().insert(out.paths.back().end(), next.begin() + 1, next.end());
        } else {
            out.arrows.push_back(s.arrows[i]);
            out.paths.push_back(next);
        }
    }
    return out;
}

/// Multiplication equivalence: an interior constant segment between two arrows is
/// dropped and the arrows are composed.
inline GPath merge_constant_segments(const SimplicialAction& a, const GPath& s) {
    GPath out{{s.paths.front()}, {}};
    for (std::size_t i = 0; i < s.arrows.size(); ++i) {
        const auto& next = s.paths[i + 1];
        if (!out.arrows.empty() && out.paths.back().size() == 1) {
            // (x, g1) then constant x then (y, g2) with act(g2, y) == x
            const GroupArrow first = out.arrows.back();
            const GroupArrow& second = s.arrows[i];
            out.arrows.back() = GroupArrow{second.vertex, a.group().product(first.element, second.element)};
            out.paths.back() = next;
        } else {
            out.arrows.push_back(s.arrows[i]);
            out.paths.push_back(next);
        }
    }
    return out;
}

namespace detail {

inline std::vector<std::vector<int>> adjacency(const SimplicialComplex& k) {
    std::vector<std::vector<int>> adj(k.vertex_count());
    for (const auto& e : k.cells(1)) {
        adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
        adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
    }
    return adj;
}

inline std::size_t uniform_below(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

}  // namespace detail

/// Shortest G-path from `from` to `to` using edges and arrows (breadth first).
inline GPath connecting_gpath(const SimplicialAction& a, int from, int to) {
    const auto adj = detail::adjacency(a.space());
    const std::size_t n = a.space().vertex_count();
    // parent step: (previous vertex, element or -1 for an edge move)
    std::vector<std::pair<int, int>> parent(n, {-2, -1});
    std::deque<int> queue{from};
    parent[static_cast<std::size_t>(from)] = {-1, -1};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (v == to) break;
        for (int w : adj[static_cast<std::size_t>(v)])
            if (parent[static_cast<std::size_t>(w)].first == -2) {
                parent[static_cast<std::size_t>(w)] = {v, -1};
                queue.push_back(w);
            }
        for (int g = 0; g < a.group().order(); ++g) {
            // arrow (w, g) runs from act(g, w) = v to w
            int w = a.act(a.group().inverse(g), v);
            if (parent[static_cast<std::size_t>(w)].first == -2) {
                parent[static_cast<std::size_t>(w)] = {v, g};
                queue.push_back(w);
            }
        }
    }
    if (parent[static_cast<std::size_t>(to)].first == -2) throw InvalidInput("vertices are not G-connected");
    std::vector<std::pair<int, int>> steps;  // (vertex reached, element or -1)
    for (int v = to; v != from; v = parent[static_cast<std::size_t>(v)].first)
        steps.emplace_back(v, parent[static_cast<std::size_t>(v)].second);
    GPath out{{{from}}, {}};
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        if (it->second < 0) {
            out.paths.back().push_back(it->first);
        } else {
            out.arrows.push_back({it->first, it->second});
            out.paths.push_back({it->first});
        }
    }
    return out;
}

/// Random G-loop at `base`: a random walk mixing edge steps and arrows, closed up by
/// a shortest G-path back to the base.
inline GPath random_gloop(const SimplicialAction& a, int base, std::mt19937_64& rng, std::size_t steps) {
    const auto adj = detail::adjacency(a.space());
    GPath s{{{base}}, {}};
    int v = base;
    for (std::size_t i = 0; i < steps; ++i) {
        const bool arrow = a.group().order() > 1 && detail::uniform_below(rng, 4) == 0;
        if (arrow || adj[static_cast<std::size_t>(v)].empty()) {
            int g = static_cast<int>(detail::uniform_below(rng, static_cast<std::size_t>(a.group().order())));
            int w = a.act(a.group().inverse(g), v);
            s.arrows.push_back({w, g});
            s.paths.push_back({w});
            v = w;
        } else {
            const auto& nb = adj[static_cast<std::size_t>(v)];
            v = nb[detail::uniform_below(rng, nb.size())];
            s.paths.back().push_back(v);
        }
    }
    GPath back = connecting_gpath(a, v, base);
    GPath out = s;
    out.paths.back().insert(out.paths.back().end(), back.paths.front().begin() + 1, back.paths.front().end());
    out.paths.insert(out.paths.end(), back.paths.begin() + 1, back.paths.end());
    out.arrows.insert(out.arrows.end(), back.arrows.begin(), back.arrows.end());
    return out;
}

}  // namespace novikov
