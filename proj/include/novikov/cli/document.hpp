#pragma once

// JSON orbifold documents: an orbit complex or a group action, named rational
// 1-cocycles and declared critical data.  Rationals are "p/q" strings; a value in
// the irrational basis (1, alpha_1, ...) is an array of such strings.

#include "novikov/core/inequalities.hpp"
#include "novikov/orbifold/action.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace novikov::cli {

using Json = nlohmann::ordered_json;

struct CocycleEntry {
    std::string u, v;
    PeriodVector value;
};

struct CriticalBlock {
    std::string cls;
    CriticalData data;
};

struct OrbifoldDocument {
    std::string name, description;
    std::optional<SimplicialComplex> orbit;
    std::optional<SimplicialAction> action;
    PeriodSpace space;
    std::map<std::string, std::vector<CocycleEntry>> cocycles;
    std::map<std::string, CriticalBlock> critical;

    /// The complex cocycles live on: Y for actions, X otherwise.
    const SimplicialComplex& carrier() const { return action ? action->space() : *orbit; }
};

namespace detail {

[[noreturn]] inline void fail(const std::string& path, const std::string& what) { throw InvalidInput(path + ": " + what); }

inline const Json& field(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path, "missing field '" + key + "'");
    return *it;
}

inline std::string text(const Json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

inline Rational rational(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) fail(path, "expected an exact rational string such as \"3/7\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const InvalidInput& e) {
        fail(path, e.what());
    }
}

inline std::vector<std::string> names(const Json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of names");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(text(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

inline SimplicialComplex complex(const Json& j, const std::string& path) {
    auto vertices = names(field(j, "vertices", path), path + ".vertices");
    const Json& s = field(j, "simplices", path);
    if (!s.is_array()) fail(path + ".simplices", "expected an array");
    std::vector<std::vector<std::string>> simplices;
    for (std::size_t i = 0; i < s.size(); ++i) simplices.push_back(names(s[i], path + ".simplices[" + std::to_string(i) + "]"));
    try {
        return SimplicialComplex::build(std::move(vertices), simplices);
    } catch (const InvalidInput& e) {
        fail(path, e.what());
    }
}

inline int vertex(const SimplicialComplex& k, const Json& j, const std::string& path) {
    auto name = text(j, path);
    auto v = k.vertex_index(name);
    if (!v) fail(path, "unknown vertex '" + name + "'");
    return *v;
}

inline SimplicialAction action(const Json& j, const std::string& path) {
    const Json& g = field(j, "group", path);
    auto elements = names(field(g, "elements", path + ".group"), path + ".group.elements");
    const Json& t = field(g, "table", path + ".group");
    if (!t.is_array() || t.size() != elements.size()) fail(path + ".group.table", "expected one row per element");
    std::vector<std::vector<int>> table;
    auto element_index = [&](const std::string& name, const std::string& where) {
        auto it = std::find(elements.begin(), elements.end(), name);
        if (it == elements.end()) fail(where, "unknown group element '" + name + "'");
        return static_cast<int>(it - elements.begin());
    };
    for (std::size_t a = 0; a < t.size(); ++a) {
        const std::string row_path = path + ".group.table[" + std::to_string(a) + "]";
        auto row = names(t[a], row_path);
        if (row.size() != elements.size()) fail(row_path, "expected one entry per element");
        std::vector<int> r;
        for (std::size_t b = 0; b < row.size(); ++b) r.push_back(element_index(row[b], row_path + "[" + std::to_string(b) + "]"));
        table.push_back(std::move(r));
    }
    FiniteGroup group(elements, table);
    SimplicialComplex y = complex(field(j, "space", path), path + ".space");
    const Json& maps = field(j, "vertex_maps", path);
    if (!maps.is_object()) fail(path + ".vertex_maps", "expected an object keyed by group element");
    std::vector<std::vector<int>> vm(elements.size());
    for (auto it = maps.begin(); it != maps.end(); ++it) {
        const std::string mp = path + ".vertex_maps." + it.key();
        const int g = element_index(it.key(), mp);
        if (!it.value().is_object()) fail(mp, "expected an object from vertex to vertex");
        std::vector<int> m(y.vertex_count(), -1);
        for (auto v = it.value().begin(); v != it.value().end(); ++v) {
            auto from = y.vertex_index(v.key());
            if (!from) fail(mp, "unknown vertex '" + v.key() + "'");
            m[static_cast<std::size_t>(*from)] = vertex(y, v.value(), mp + "." + v.key());
        }
        for (std::size_t v = 0; v < m.size(); ++v)
            if (m[v] < 0) fail(mp, "no image for vertex '" + y.vertex_name(static_cast<int>(v)) + "'");
        vm[static_cast<std::size_t>(g)] = std::move(m);
    }
    for (std::size_t g = 0; g < vm.size(); ++g) {
        if (!vm[g].empty()) continue;
        if (static_cast<int>(g) != group.identity()) fail(path + ".vertex_maps", "no vertex map for element '" + elements[g] + "'");
        for (std::size_t v = 0; v < y.vertex_count(); ++v) vm[g].push_back(static_cast<int>(v));
    }
    return SimplicialAction(std::move(group), std::move(y), std::move(vm));
}

/// Exact decimal text when the denominator divides a power of ten.
inline std::optional<std::string> decimal_text(const Rational& x) {
    Integer d = denominator_of(x), scale = 1;
    unsigned digits = 0;
    while (scale % d != 0) {
        scale *= 10;
        if (++digits > 60) return std::nullopt;
    }
    Integer n = abs_value(numerator_of(x) * (scale / d));
    std::string s = n.str();
    if (digits > 0) {
        if (s.size() <= digits) s = std::string(digits + 1 - s.size(), '0') + s;
        s.insert(s.size() - digits, ".");
    }
    return (x < 0 ? "-" : "") + s;
}

}  // namespace detail

inline Json value_json(const PeriodVector& v) {
    if (v.size() == 1) return to_string(v[0]);
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

inline OrbifoldDocument parse_document(const Json& j) {
    if (!j.is_object()) throw InvalidInput("document: expected a JSON object");
    OrbifoldDocument d;
    if (j.contains("name")) d.name = detail::text(j["name"], "name");
    if (j.contains("description")) d.description = detail::text(j["description"], "description");
    const bool has_orbit = j.contains("orbit"), has_action = j.contains("action");
    if (has_orbit == has_action) throw InvalidInput("document: exactly one of 'orbit' and 'action' must be present");
    if (has_orbit) d.orbit = detail::complex(j["orbit"], "orbit");
    else d.action = detail::action(j["action"], "action");
    if (j.contains("period_basis")) {
        const Json& pb = j["period_basis"];
        if (!pb.is_array()) detail::fail("period_basis", "expected an array");
        for (std::size_t i = 0; i < pb.size(); ++i) {
            const std::string p = "period_basis[" + std::to_string(i) + "]";
            auto sym = detail::text(detail::field(pb[i], "symbol", p), p + ".symbol");
            if (std::find(d.space.symbols.begin(), d.space.symbols.end(), sym) != d.space.symbols.end())
                detail::fail(p, "duplicate symbol '" + sym + "'");
            d.space.symbols.push_back(sym);
            d.space.shadows.push_back(pb[i].contains("shadow") ? std::optional(detail::rational(pb[i]["shadow"], p + ".shadow")) : std::nullopt);
        }
    }
    const std::size_t k = d.space.dimension();
    const auto& carrier = d.carrier();
    if (j.contains("cocycles")) {
        const Json& cs = j["cocycles"];
        if (!cs.is_object()) detail::fail("cocycles", "expected an object keyed by class name");
        for (auto it = cs.begin(); it != cs.end(); ++it) {
            const std::string p = "cocycles." + it.key();
            const Json& vals = detail::field(it.value(), "values", p);
            if (!vals.is_array()) detail::fail(p + ".values", "expected an array");
            std::vector<CocycleEntry> entries;
            for (std::size_t i = 0; i < vals.size(); ++i) {
                const std::string vp = p + ".values[" + std::to_string(i) + "]";
                const Json& edge = detail::field(vals[i], "edge", vp);
                if (!edge.is_array() || edge.size() != 2) detail::fail(vp + ".edge", "expected a vertex pair");
                int u = detail::vertex(carrier, edge[0], vp + ".edge[0]"), v = detail::vertex(carrier, edge[1], vp + ".edge[1]");
                if (!carrier.edge_index(u, v)) detail::fail(vp + ".edge", "not an edge of the complex");
                const Json& x = detail::field(vals[i], "value", vp);
                PeriodVector value(k);
                if (x.is_array()) {
                    if (x.size() != k) detail::fail(vp + ".value", "expected " + std::to_string(k) + " coordinates");
                    for (std::size_t c = 0; c < k; ++c) value[c] = detail::rational(x[c], vp + ".value[" + std::to_string(c) + "]");
                } else {
                    value[0] = detail::rational(x, vp + ".value");
                }
                entries.push_back({carrier.vertex_name(u), carrier.vertex_name(v), value});
            }
            d.cocycles[it.key()] = std::move(entries);
        }
    }
    if (j.contains("critical_data")) {
        const Json& cd = j["critical_data"];
        if (!cd.is_object()) detail::fail("critical_data", "expected an object keyed by name");
        for (auto it = cd.begin(); it != cd.end(); ++it) {
            const std::string p = "critical_data." + it.key();
            CriticalBlock b;
            b.cls = detail::text(detail::field(it.value(), "class", p), p + ".class");
            if (!d.cocycles.count(b.cls)) detail::fail(p + ".class", "unknown class '" + b.cls + "'");
            const Json& counts = detail::field(it.value(), "counts", p);
            if (!counts.is_array()) detail::fail(p + ".counts", "expected an array of counts by index");
            for (std::size_t i = 0; i < counts.size(); ++i) {
                if (!counts[i].is_number_integer() || counts[i].get<long long>() < 0)
                    detail::fail(p + ".counts[" + std::to_string(i) + "]", "expected a nonnegative integer");
                if (counts[i].get<long long>() > 0) b.data.counts[i] = counts[i].get<std::size_t>();
            }
            if (it.value().contains("provenance")) b.data.provenance = detail::text(it.value()["provenance"], p + ".provenance");
            d.critical[it.key()] = std::move(b);
        }
    }
    return d;
}

inline OrbifoldDocument parse_document_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    return parse_document(j);
}

inline OrbifoldDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_document_text(buf.str());
}

/// The cochain a named class defines on the carrier complex.
inline RationalCochain1 cochain(const OrbifoldDocument& d, const std::string& cls) {
    auto it = d.cocycles.find(cls);
    if (it == d.cocycles.end()) throw InvalidInput("unknown class '" + cls + "'");
    const auto& k = d.carrier();
    auto w = RationalCochain1::zero(k, d.space);
    for (const auto& e : it->second) {
        int u = *k.vertex_index(e.u), v = *k.vertex_index(e.v);
        w.set(k, u, v, w.at(k, u, v) + e.value);
    }
    return w;
}

namespace detail {

inline Json complex_json(const SimplicialComplex& k) {
    Json out;
    out["vertices"] = k.vertex_names();
    Json s = Json::array();
    for (const auto& f : k.facets()) {
        Json t = Json::array();
        for (int v : f) t.push_back(k.vertex_name(v));
        s.push_back(t);
    }
    out["simplices"] = s;
    return out;
}

}  // namespace detail

/// Canonical form: facets only, cocycle values per edge in complex order (low ->
/// high, zeros dropped), counts up to the last nonzero index.
inline Json serialize(const OrbifoldDocument& d) {
    Json j;
    if (!d.name.empty()) j["name"] = d.name;
    if (!d.description.empty()) j["description"] = d.description;
    if (d.orbit) {
        j["orbit"] = detail::complex_json(*d.orbit);
    } else {
        const auto& a = *d.action;
        Json g;
        std::vector<std::string> el;
        for (int x = 0; x < a.group().order(); ++x) el.push_back(a.group().name(x));
        g["elements"] = el;
        Json table = Json::array();
        for (int x = 0; x < a.group().order(); ++x) {
            Json row = Json::array();
            for (int y = 0; y < a.group().order(); ++y) row.push_back(a.group().name(a.group().product(x, y)));
            table.push_back(row);
        }
        g["table"] = table;
        Json maps = Json::object();
        for (int x = 0; x < a.group().order(); ++x) {
            if (x == a.group().identity()) continue;
            Json m = Json::object();
            for (std::size_t v = 0; v < a.space().vertex_count(); ++v)
                m[a.space().vertex_name(static_cast<int>(v))] = a.space().vertex_name(a.act(x, static_cast<int>(v)));
            maps[a.group().name(x)] = m;
        }
        j["action"] = {{"group", g}, {"space", detail::complex_json(a.space())}, {"vertex_maps", maps}};
    }
    if (!d.space.symbols.empty()) {
        Json pb = Json::array();
        for (std::size_t i = 0; i < d.space.symbols.size(); ++i) {
            Json s = {{"symbol", d.space.symbols[i]}};
            if (d.space.shadows[i]) {
                auto dec = detail::decimal_text(*d.space.shadows[i]);
                s["shadow"] = dec ? *dec : to_string(*d.space.shadows[i]);
            }
            pb.push_back(s);
        }
        j["period_basis"] = pb;
    }
    Json cs = Json::object();
    const auto& k = d.carrier();
    for (const auto& [name, entries] : d.cocycles) {
        auto w = cochain(d, name);
        Json vals = Json::array();
        const auto& edges = k.cells(1);
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (!is_zero(w.values[e]))
                vals.push_back({{"edge", {k.vertex_name(edges[e][0]), k.vertex_name(edges[e][1])}}, {"value", value_json(w.values[e])}});
        cs[name] = {{"values", vals}};
    }
    j["cocycles"] = cs;
    if (!d.critical.empty()) {
        Json cd = Json::object();
        for (const auto& [name, b] : d.critical) {
            std::size_t top = b.data.counts.empty() ? 0 : b.data.counts.rbegin()->first + 1;
            Json counts = Json::array();
            for (std::size_t i = 0; i < top; ++i) counts.push_back(b.data.count(i));
            Json block = {{"class", b.cls}, {"counts", counts}};
            if (!b.data.provenance.empty()) block["provenance"] = b.data.provenance;
            cd[name] = block;
        }
        j["critical_data"] = cd;
    }
    return j;
}

/// A class brought down to the orbit complex X.
struct ClassOnX {
    SimplicialComplex x;
    RationalCochain1 xi;
    std::optional<QuotientResult> quotient;
    std::optional<RationalCochain1> effective;  ///< the class on the (possibly subdivided) Y
};

inline ClassOnX resolve_class(const OrbifoldDocument& d, const std::string& cls) {
    auto w = cochain(d, cls);
    if (d.orbit) {
        require_closed(*d.orbit, w);
        return {*d.orbit, w, std::nullopt, std::nullopt};
    }
    auto r = descend_cochain(*d.action, w);
    return {r.quotient.orbit_complex, r.cochain, r.quotient, r.effective_cochain};
}

/// X without any class.
inline SimplicialComplex orbit_complex(const OrbifoldDocument& d) {
    return d.orbit ? *d.orbit : quotient_complex(*d.action).orbit_complex;
}

}  // namespace novikov::cli
