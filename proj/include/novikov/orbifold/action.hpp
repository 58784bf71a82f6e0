#pragma once

// Global-quotient presentations: a finite group acting simplicially on a
// complex Y, its orbit complex X = Y / group, and descent of basic cochains.

#include "novikov/orbifold/cochain.hpp"
#include "novikov/orbifold/finite_group.hpp"

#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace novikov {

class SimplicialAction {
public:
    SimplicialAction() = default;

    /// vertex_maps[g][v] is the image of vertex v under g; composition must follow
    /// the table: act(product(a, b), v) == act(a, act(b, v)).
    SimplicialAction(FiniteGroup group, SimplicialComplex space, std::vector<std::vector<int>> vertex_maps)
        : group_(std::move(group)), space_(std::move(space)), maps_(std::move(vertex_maps)) {
        const std::size_t n = space_.vertex_count();
        if (maps_.size() != static_cast<std::size_t>(group_.order()))
            throw InvalidInput("need one vertex map per group element");
        for (const auto& m : maps_) {
            if (m.size() != n) throw InvalidInput("vertex map has wrong length");
            std::vector<bool> seen(n, false);
            for (int v : m) {
                if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)])
                    throw InvalidInput("vertex map is not a permutation");
                seen[static_cast<std::size_t>(v)] = true;
            }
        }
        for (int g = 0; g < group_.order(); ++g)
            for (int q = 1; q <= space_.dimension(); ++q)
                for (const auto& s : space_.cells(q))
                    if (!space_.contains(image(g, s)))
                        throw ValidationError("vertex map of '" + group_.name(g) + "' is not simplicial");
        for (int a = 0; a < group_.order(); ++a)
            for (int b = 0; b < group_.order(); ++b)
                for (std::size_t v = 0; v < n; ++v)
                    if (act(group_.product(a, b), static_cast<int>(v)) != act(a, act(b, static_cast<int>(v))))
                        throw ValidationError("vertex maps do not respect the group table at (" + group_.name(a) + "," +
                                              group_.name(b) + ")");
    }

    static SimplicialAction trivial(const SimplicialComplex& k) {
        std::vector<int> id(k.vertex_count());
        std::iota(id.begin(), id.end(), 0);
        return SimplicialAction(FiniteGroup(), k, {id});
    }

    const FiniteGroup& group() const { return group_; }
    const SimplicialComplex& space() const { return space_; }
    const std::vector<std::vector<int>>& vertex_maps() const { return maps_; }

    int act(int g, int v) const { return maps_[static_cast<std::size_t>(g)][static_cast<std::size_t>(v)]; }

    /// Sorted image of a simplex.
    Simplex image(int g, const Simplex& s) const {
        Simplex t;
        for (int v : s) t.push_back(act(g, v));
        std::sort(t.begin(), t.end());
        return t;
    }

    /// Orbit id per vertex; ids are numbered by smallest member.
    std::vector<int> vertex_orbits() const {
        const std::size_t n = space_.vertex_count();
        std::vector<int> orbit(n, -1);
        int next = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (orbit[v] >= 0) continue;
            for (int g = 0; g < group_.order(); ++g) orbit[static_cast<std::size_t>(act(g, static_cast<int>(v)))] = next;
            ++next;
        }
        return orbit;
    }

    /// Regular in the sense needed for the orbit complex to be simplicial with cells
    /// in bijection with simplex orbits: no simplex has two vertices in one orbit, and
    /// simplices with the same set of vertex orbits lie in one simplex orbit.
    bool is_regular() const {
        const auto orbit = vertex_orbits();
        std::map<Simplex, Simplex> representative;  // orbit-vertex set -> one simplex
        for (int q = 1; q <= space_.dimension(); ++q)
            for (const auto& s : space_.cells(q)) {
                Simplex img;
                for (int v : s) img.push_back(orbit[static_cast<std::size_t>(v)]);
                if (sort_with_parity(img) == 0) return false;
                auto [it, inserted] = representative.emplace(img, s);
                if (inserted) continue;
                bool same_orbit = false;
                for (int g = 0; g < group_.order() && !same_orbit; ++g) same_orbit = image(g, it->second) == s;
                if (!same_orbit) return false;
            }
        return true;
    }

    /// Setwise-fixed simplices that are not fixed pointwise.
    bool has_flipped_simplex() const {
        for (int q = 1; q <= space_.dimension(); ++q)
            for (const auto& s : space_.cells(q))
                for (int g = 0; g < group_.order(); ++g) {
                    if (image(g, s) != s) continue;
                    for (int v : s)
                        if (act(g, v) != v) return true;
                }
        return false;
    }

private:
    FiniteGroup group_;
    SimplicialComplex space_;
    std::vector<std::vector<int>> maps_;
};

/// Barycentric subdivision.  New vertex i corresponds to `barycenters[i]`, a
/// simplex of the old complex; new vertices are ordered by (dimension, old order).
struct Subdivision {
    SimplicialComplex complex;
    std::vector<Simplex> barycenters;
};

inline Subdivision barycentric_subdivision(const SimplicialComplex& k) {
    Subdivision sd;
    std::map<Simplex, int> id;
    std::vector<std::string> names;
    for (int q = 0; q <= k.dimension(); ++q)
        for (const auto& s : k.cells(q)) {
            id.emplace(s, static_cast<int>(sd.barycenters.size()));
            sd.barycenters.push_back(s);
            std::string name;
            if (q == 0) {
                name = k.vertex_name(s[0]);
            } else {
                name = "[";
                for (std::size_t i = 0; i < s.size(); ++i) name += (i ? "," : "") + k.vertex_name(s[i]);
                name += "]";
            }
            names.push_back(std::move(name));
        }
    // maximal flags through each facet
    std::vector<std::vector<int>> flags;
    for (const auto& top : k.facets()) {
        std::vector<int> order(top.size());
        std::iota(order.begin(), order.end(), 0);
        do {
            std::vector<int> flag;
            Simplex face;
            for (int i : order) {
                face.push_back(top[static_cast<std::size_t>(i)]);
                Simplex sorted = face;
                std::sort(sorted.begin(), sorted.end());
                flag.push_back(id.at(sorted));
            }
            flags.push_back(std::move(flag));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    sd.complex = SimplicialComplex::from_indices(std::move(names), flags);
    return sd;
}

/// Subdivided action: g maps the barycenter of s to the barycenter of g.s.
inline SimplicialAction subdivide(const SimplicialAction& a, const Subdivision& sd) {
    std::map<Simplex, int> id;
    for (std::size_t i = 0; i < sd.barycenters.size(); ++i) id.emplace(sd.barycenters[i], static_cast<int>(i));
    std::vector<std::vector<int>> maps;
    for (int g = 0; g < a.group().order(); ++g) {
        std::vector<int> m;
        for (const auto& s : sd.barycenters) m.push_back(id.at(a.image(g, s)));
        maps.push_back(std::move(m));
    }
    return SimplicialAction(a.group(), sd.complex, std::move(maps));
}

/// Transports a closed cochain to the subdivision by integrating the piecewise-linear
/// form: the barycenter of s gets the average of a local potential over s's vertices.
inline RationalCochain1 subdivide(const SimplicialComplex& k, const RationalCochain1& w, const Subdivision& sd) {
    RationalCochain1 out = RationalCochain1::zero(sd.complex, w.space);
    const auto& edges = sd.complex.cells(1);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const Simplex& lo = sd.barycenters[static_cast<std::size_t>(edges[e][0])];
        const Simplex& hi = sd.barycenters[static_cast<std::size_t>(edges[e][1])];
        const Simplex& big = lo.size() > hi.size() ? lo : hi;
        // potential on `big` anchored at its first vertex
        auto average = [&](const Simplex& s) {
            PeriodVector acc = w.space.zero();
            for (int v : s)
                if (v != big[0]) acc += w.at(k, big[0], v);
            return Rational(1, static_cast<long>(s.size())) * acc;
        };
        out.values[e] = average(hi) - average(lo);
    }
    return out;
}

struct QuotientResult {
    SimplicialComplex orbit_complex;
    /// The action actually quotiented (the input, or its second barycentric subdivision).
    SimplicialAction effective_action;
    std::vector<int> vertex_projection;  ///< effective Y vertex -> X vertex
    bool subdivided = false;
    /// When subdivided, the two successive subdivisions of the input space.
    std::vector<Subdivision> subdivisions;

    Simplex project(const Simplex& s) const {
        Simplex t;
        for (int v : s) t.push_back(vertex_projection[static_cast<std::size_t>(v)]);
        return t;
    }
};

namespace detail {

inline QuotientResult quotient_of_regular(const SimplicialAction& a) {
    QuotientResult r;
    r.vertex_projection = a.vertex_orbits();
    int orbits = 0;
    for (int o : r.vertex_projection) orbits = std::max(orbits, o + 1);
    std::vector<std::string> names(static_cast<std::size_t>(orbits));
    for (std::size_t v = 0; v < r.vertex_projection.size(); ++v) {
        auto& name = names[static_cast<std::size_t>(r.vertex_projection[v])];
        if (name.empty()) name = a.space().vertex_name(static_cast<int>(v));
    }
    std::vector<std::vector<int>> images;
    for (int q = 1; q <= a.space().dimension(); ++q)
        for (const auto& s : a.space().cells(q)) {
            Simplex t;
            for (int v : s) t.push_back(r.vertex_projection[static_cast<std::size_t>(v)]);
            images.push_back(std::move(t));
        }
    r.orbit_complex = SimplicialComplex::from_indices(std::move(names), images);
    r.effective_action = a;
    return r;
}

}  // namespace detail

/// Orbit complex X = Y / group with its vertex projection.  A non-regular action is
/// first replaced by its second barycentric subdivision (reported via `subdivided`).
inline QuotientResult quotient_complex(const SimplicialAction& a) {
    if (a.is_regular()) return detail::quotient_of_regular(a);
    Subdivision first = barycentric_subdivision(a.space());
    SimplicialAction a1 = subdivide(a, first);
    Subdivision second = barycentric_subdivision(a1.space());
    SimplicialAction a2 = subdivide(a1, second);
    if (!a2.is_regular()) throw ValidationError("second barycentric subdivision failed to regularize the action");
    QuotientResult r = detail::quotient_of_regular(a2);
    r.subdivided = true;
    r.subdivisions = {std::move(first), std::move(second)};
    return r;
}

/// True when w(g.u, g.v) == w(u, v) for every directed edge and group element.
inline bool is_basic(const SimplicialAction& a, const RationalCochain1& w) {
    const auto& k = a.space();
    for (const auto& e : k.cells(1))
        for (int g = 0; g < a.group().order(); ++g)
            if (w.at(k, a.act(g, e[0]), a.act(g, e[1])) != w.at(k, e[0], e[1])) return false;
    return true;
}

/// Transports a cochain on the input space to the effective (possibly subdivided) space.
inline RationalCochain1 to_effective(const QuotientResult& q, const SimplicialComplex& original, const RationalCochain1& w) {
    if (!q.subdivided) return w;
    RationalCochain1 w1 = subdivide(original, w, q.subdivisions[0]);
    return subdivide(q.subdivisions[0].complex, w1, q.subdivisions[1]);
}

struct DescendResult {
    RationalCochain1 cochain;  ///< on q.orbit_complex
    QuotientResult quotient;
    RationalCochain1 effective_cochain;  ///< on q.effective_action.space()
};

/// Pushes a basic closed cochain on Y down to the orbit complex.
inline DescendResult descend_cochain(const SimplicialAction& a, const RationalCochain1& w) {
    const auto& y = a.space();
    if (w.values.size() != y.count(1)) throw InvalidInput("cochain does not match the total space's edges");
    if (!is_basic(a, w)) throw ValidationError("cochain is not basic (not invariant under the group)");
    require_closed(y, w);
    const auto orbit = a.vertex_orbits();
    for (const auto& e : y.cells(1))
        if (orbit[static_cast<std::size_t>(e[0])] == orbit[static_cast<std::size_t>(e[1])] && !is_zero(w.at(y, e[0], e[1])))
            throw ValidationError("nonzero value on edge (" + y.vertex_name(e[0]) + "," + y.vertex_name(e[1]) +
                                  ") whose endpoints share an orbit");

    DescendResult r{RationalCochain1{}, quotient_complex(a), RationalCochain1{}};
    r.effective_cochain = to_effective(r.quotient, y, w);
    const auto& x = r.quotient.orbit_complex;
    const auto& ye = r.quotient.effective_action.space();
    r.cochain = RationalCochain1::zero(x, w.space);
    std::vector<bool> assigned(x.count(1), false);
    for (const auto& e : ye.cells(1)) {
        int u = r.quotient.vertex_projection[static_cast<std::size_t>(e[0])];
        int v = r.quotient.vertex_projection[static_cast<std::size_t>(e[1])];
        PeriodVector val = r.effective_cochain.at(ye, e[0], e[1]);
        std::size_t idx = *x.edge_index(u, v);
        PeriodVector oriented = u < v ? val : -val;
        if (assigned[idx] && r.cochain.values[idx] != oriented)
            throw ValidationError("cochain takes different values on one edge orbit");
        r.cochain.values[idx] = std::move(oriented);
        assigned[idx] = true;
    }
    return r;
}

}  // namespace novikov
