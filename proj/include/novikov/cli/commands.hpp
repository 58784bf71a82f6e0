#pragma once

// The `novikov` command line: homology, periods, novikov, check-inequalities,
// validate, perturb.  Exit codes: 0 ok, 1 usage or input, 2 validation failure,
// 3 unsupported operation.

#include "novikov/cli/document.hpp"
#include "novikov/core/cyclic_cover.hpp"
#include "novikov/core/perturb.hpp"
#include "novikov/nerve/nerve.hpp"
#include "novikov/orbifold/gpath.hpp"

#include <CLI11.hpp>

#include <ostream>

namespace novikov::cli {

enum ExitCode { kOk = 0, kUsage = 1, kValidation = 2, kUnsupported = 3 };

namespace detail {

inline Json strings(const std::vector<Integer>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

inline Json matrix_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<Integer> r;
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
        rows.push_back(strings(r));
    }
    return rows;
}

inline std::string to_string_any(std::size_t x) { return std::to_string(x); }
inline std::string to_string_any(long x) { return std::to_string(x); }
inline std::string to_string_any(const Integer& x) { return x.str(); }

template <class T>
std::string tuple_text(const std::vector<T>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string_any(v[i]);
    return s + ")";
}

inline std::string braces(const std::vector<Integer>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s + "}";
}

inline Json numbers_json(const NovikovNumbers& n) {
    Json j;
    j["rank"] = n.rank_xi;
    j["route"] = to_string(n.route);
    j["b"] = n.b;
    j["q"] = n.q ? Json(*n.q) : Json(nullptr);
    j["euler_characteristic"] = n.euler_characteristic();
    if (!n.note.empty()) j["note"] = n.note;
    return j;
}

inline Json verdicts_json(const std::vector<InequalityVerdict>& vs) {
    Json a = Json::array();
    for (const auto& v : vs)
        a.push_back({{"degree", v.degree}, {"lhs", v.lhs}, {"rhs", v.rhs}, {"slack", v.slack()}, {"holds", v.holds()}});
    return a;
}

inline Json report_json(const std::string& name, const CriticalData& c, const InequalityReport& r) {
    std::size_t top = c.counts.empty() ? 0 : c.counts.rbegin()->first + 1;
    std::vector<std::size_t> counts;
    for (std::size_t i = 0; i < top; ++i) counts.push_back(c.count(i));
    Json j{{"critical", name}, {"counts", counts}};
    if (!c.provenance.empty()) j["provenance"] = c.provenance;
    j["betti_only"] = r.betti_only;
    j["weak"] = verdicts_json(r.weak);
    j["strong"] = verdicts_json(r.strong);
    j["all_hold"] = r.all_hold();
    return j;
}

inline void print_numbers(std::ostream& out, const NovikovNumbers& n) {
    out << "rank " << n.rank_xi << ", route " << to_string(n.route) << "\n";
    out << "b = " << tuple_text(n.b) << "\n";
    if (n.q) out << "q = " << tuple_text(*n.q) << "\n";
    else out << "q unavailable: " << n.note << "\n";
    out << "sum (-1)^j b_j = " << n.euler_characteristic() << "\n";
}

inline void print_report(std::ostream& out, const std::string& name, const InequalityReport& r) {
    out << "critical data '" << name << "'" << (r.betti_only ? " (Betti terms only)" : "") << "\n";
    auto rows = [&](const char* label, const std::vector<InequalityVerdict>& vs) {
        for (const auto& v : vs)
            out << "  " << label << " j=" << v.degree << ": " << v.lhs << " >= " << v.rhs << "  slack " << v.slack()
                << (v.holds() ? "" : "  VIOLATED") << "\n";
    };
    rows("weak  ", r.weak);
    rows("strong", r.strong);
    out << "  " << (r.all_hold() ? "all inequalities hold" : "inequalities violated") << "\n";
}

inline std::vector<std::string> symbols_of(const PeriodSpace& s) {
    std::vector<std::string> out{"1"};
    out.insert(out.end(), s.symbols.begin(), s.symbols.end());
    return out;
}

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

}  // namespace detail

struct CliContext {
    std::ostream& out;
    bool json = false;

    void emit(const Json& j) const { out << j.dump(2) << "\n"; }
};

inline int cmd_homology(const CliContext& cx, const OrbifoldDocument& d, bool transforms) {
    auto q = d.action ? std::optional(quotient_complex(*d.action)) : std::nullopt;
    const SimplicialComplex x = q ? q->orbit_complex : *d.orbit;
    const auto cc = chain_complex(x);
    const IntHomology h = integer_homology(cc);
    Json j;
    j["document"] = d.name;
    j["complex"] = {{"vertices", x.vertex_count()}, {"f_vector", x.f_vector()}, {"euler_characteristic", x.euler_characteristic()}};
    if (q) j["complex"]["subdivided"] = q->subdivided;
    j["betti"] = h.betti;
    Json tor = Json::array();
    for (const auto& t : h.torsion) tor.push_back(detail::strings(t));
    j["torsion"] = tor;
    if (transforms) {
        Json ts = Json::array();
        for (int k = 1; k <= cc.top_degree(); ++k) {
            auto snf = smith_normal_form(cc.boundary(k), true);
            ts.push_back({{"degree", k}, {"diagonal", detail::strings(snf.diagonal)}, {"left", detail::matrix_json(*snf.left)},
                          {"right", detail::matrix_json(*snf.right)}});
        }
        j["transforms"] = ts;
    }
    if (cx.json) {
        cx.emit(j);
        return kOk;
    }
    cx.out << "orbit complex: " << x.vertex_count() << " vertices, f-vector " << detail::tuple_text(x.f_vector())
           << (q && q->subdivided ? " (after second barycentric subdivision)" : "") << "\n";
    cx.out << "betti " << detail::tuple_text(h.betti) << "\n";
    for (std::size_t k = 0; k < h.torsion.size(); ++k)
        if (!h.torsion[k].empty()) cx.out << "torsion in degree " << k << ": " << detail::braces(h.torsion[k]) << "\n";
    if (transforms)
        for (const auto& t : j["transforms"]) {
            cx.out << "boundary " << t["degree"].get<int>() << ": diagonal " << t["diagonal"].dump() << "\n";
            cx.out << "  left  " << t["left"].dump() << "\n  right " << t["right"].dump() << "\n";
        }
    return kOk;
}

inline int cmd_periods(const CliContext& cx, const OrbifoldDocument& d, const std::string& cls) {
    auto c = resolve_class(d, cls);
    auto per = period_homomorphism(c.x, c.xi);
    Json j{{"class", cls}, {"basis", detail::symbols_of(per.space)}, {"rank", per.rank()}, {"integral", is_integral(per)},
           {"exact", per.rank() == 0}};
    Json gens = Json::array();
    for (std::size_t i = 0; i < per.h1.generators.size(); ++i)
        gens.push_back({{"order", per.h1.generators[i].order.str()}, {"period", value_json(per.periods[i])}});
    j["h1_generators"] = gens;
    Json lattice = Json::array();
    for (const auto& g : per.gamma_basis) lattice.push_back(value_json(g));
    j["lattice_basis"] = lattice;
    if (cx.json) {
        cx.emit(j);
        return kOk;
    }
    cx.out << "class '" << cls << "': rank " << per.rank() << (is_integral(per) ? ", integral" : ", not integral")
           << (per.rank() == 0 ? ", exact" : "") << "\n";
    for (std::size_t i = 0; i < per.h1.generators.size(); ++i) {
        const auto& g = per.h1.generators[i];
        cx.out << "  generator " << i << (g.order == 0 ? " (free)" : " (order " + g.order.str() + ")") << ": period "
               << to_string(per.periods[i], per.space) << "\n";
    }
    for (const auto& g : per.gamma_basis) cx.out << "  lattice basis vector " << to_string(g, per.space) << "\n";
    return kOk;
}

/// Critical blocks to check for `cls`: the named ones, or every block on that class.
inline std::vector<std::pair<std::string, CriticalData>> critical_for(const OrbifoldDocument& d, const std::string& cls,
                                                                      const std::vector<std::string>& names) {
    std::vector<std::pair<std::string, CriticalData>> out;
    if (names.empty()) {
        for (const auto& [n, b] : d.critical)
            if (b.cls == cls) out.emplace_back(n, b.data);
        return out;
    }
    for (const auto& n : names) {
        auto it = d.critical.find(n);
        if (it == d.critical.end()) throw InvalidInput("unknown critical data '" + n + "'");
        if (it->second.cls != cls)
            throw InvalidInput("critical data '" + n + "' belongs to class '" + it->second.cls + "', not '" + cls + "'");
        out.emplace_back(n, it->second.data);
    }
    return out;
}

inline CriticalData counts_data(const std::vector<std::size_t>& counts) {
    CriticalData c;
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i]) c.counts[i] = counts[i];
    c.provenance = "command line";
    return c;
}

inline int cmd_novikov(const CliContext& cx, const OrbifoldDocument& d, const std::string& cls,
                       const std::vector<std::string>& critical, const std::optional<std::vector<std::size_t>>& counts) {
    auto c = resolve_class(d, cls);
    auto per = period_homomorphism(c.x, c.xi);
    auto n = novikov_numbers(c.x, c.xi);
    auto blocks = critical_for(d, cls, critical);
    if (counts) blocks.emplace_back("command-line", counts_data(*counts));
    Json j{{"class", cls}, {"periods", {{"rank", per.rank()}, {"integral", is_integral(per)}}}, {"numbers", detail::numbers_json(n)}};
    Json reports = Json::array();
    std::vector<InequalityReport> rs;
    for (const auto& [name, data] : blocks) {
        rs.push_back(check_inequalities(n, data));
        reports.push_back(detail::report_json(name, data, rs.back()));
    }
    j["inequalities"] = reports;
    if (cx.json) {
        cx.emit(j);
    } else {
        cx.out << "class '" << cls << "': period rank " << per.rank() << (is_integral(per) ? ", integral" : ", not integral") << "\n";
        detail::print_numbers(cx.out, n);
        for (std::size_t i = 0; i < rs.size(); ++i) detail::print_report(cx.out, blocks[i].first, rs[i]);
    }
    return n.q ? kOk : kUnsupported;
}

inline int cmd_check(const CliContext& cx, const OrbifoldDocument& d, const std::vector<std::string>& critical,
                     const std::optional<std::string>& cls, const std::optional<std::vector<std::size_t>>& counts) {
    std::vector<std::tuple<std::string, std::string, CriticalData>> jobs;
    if (counts) {
        if (!cls) throw InvalidInput("--counts needs --class");
        jobs.emplace_back("command-line", *cls, counts_data(*counts));
    }
    if (!critical.empty()) {
        for (const auto& name : critical) {
            auto it = d.critical.find(name);
            if (it == d.critical.end()) throw InvalidInput("unknown critical data '" + name + "'");
            jobs.emplace_back(name, it->second.cls, it->second.data);
        }
    } else if (!counts) {
        for (const auto& [name, b] : d.critical)
            if (!cls || b.cls == *cls) jobs.emplace_back(name, b.cls, b.data);
    }
    if (jobs.empty()) throw InvalidInput("no critical data to check");
    bool ok = true;
    Json reports = Json::array();
    for (const auto& [name, c, data] : jobs) {
        auto r = resolve_class(d, c);
        auto n = novikov_numbers(r.x, r.xi);
        auto rep = check_inequalities(n, data);
        ok = ok && rep.all_hold();
        Json j = detail::report_json(name, data, rep);
        j["class"] = c;
        j["numbers"] = detail::numbers_json(n);
        reports.push_back(j);
        if (!cx.json) {
            cx.out << "class '" << c << "': b = " << detail::tuple_text(n.b);
            if (n.q) cx.out << ", q = " << detail::tuple_text(*n.q);
            cx.out << "\n";
            detail::print_report(cx.out, name, rep);
        }
    }
    if (cx.json) cx.emit({{"reports", reports}, {"all_hold", ok}});
    return ok ? kOk : kValidation;
}

struct ValidateOptions {
    std::size_t depth = 3;
    std::vector<std::size_t> cyclic{2, 3, 5};
    std::uint64_t seed = 1;
    std::size_t samples = 100;
    std::size_t loops = 50;
};

inline int cmd_validate(const CliContext& cx, const OrbifoldDocument& d, const ValidateOptions& opt) {
    for (std::size_t p : opt.cyclic)
        if (p > kCyclicCoverCap)
            throw UnsupportedOperation("cover degree " + std::to_string(p) + " exceeds the cap of " + std::to_string(kCyclicCoverCap));
    std::vector<detail::Check> checks;
    auto run = [&](const std::string& name, auto&& body) {
        detail::Check c{name, false, ""};
        try {
            c.detail = body(c.passed);
        } catch (const std::exception& e) {
            c.passed = false;
            c.detail = e.what();
        }
        checks.push_back(std::move(c));
        return checks.back().passed;
    };
    const auto& carrier = d.carrier();
    std::size_t class_index = 0;
    for (const auto& [cls, entries] : d.cocycles) {
        std::mt19937_64 rng(opt.seed * 1000003u + class_index++);
        const RationalCochain1 w = cochain(d, cls);
        const std::string tag = "class " + cls + ": ";
        bool closed = run(tag + "closed", [&](bool& ok) -> std::string {
            auto bad = closedness_violation(carrier, w);
            ok = !bad;
            if (!bad) return "";
            std::string s = "coboundary nonzero on (";
            for (std::size_t i = 0; i < bad->size(); ++i) s += (i ? "," : "") + carrier.vertex_name((*bad)[i]);
            return s + ")";
        });
        if (!closed) continue;
        if (d.action && !run(tag + "basic", [&](bool& ok) -> std::string {
                ok = is_basic(*d.action, w);
                return ok ? "" : "not invariant under the group";
            }))
            continue;
        std::optional<ClassOnX> c;
        std::optional<PeriodHom> per;
        std::optional<IntegralizedCocycle> z;
        if (!run(tag + "integralize", [&](bool& ok) -> std::string {
                c = resolve_class(d, cls);
                per = period_homomorphism(c->x, c->xi);
                z = integralize(c->x, c->xi, *per);
                ok = true;
                return "rank " + std::to_string(z->rank);
            }))
            continue;
        run(tag + "nerve identities (depth " + std::to_string(opt.depth) + ")", [&](bool& ok) -> std::string {
            const SimplicialAction act = c->quotient ? c->quotient->effective_action : SimplicialAction::trivial(c->x);
            const auto exps = c->quotient ? pullback_cocycle(*c->quotient, *z) : z->z;
            NerveComplex nc(act, exps, z->rank);
            const std::size_t bidegrees = (opt.depth + 1) * static_cast<std::size_t>(act.space().dimension() + 1);
            const std::size_t per_bidegree = (opt.samples + bidegrees - 1) / bidegrees;
            auto r = check_commutation(nc, rng, per_bidegree, opt.depth);
            ok = r.all_hold() && r.samples >= opt.samples;
            return std::to_string(r.samples) + " samples, failures: boundary^2 " + std::to_string(r.boundary_square) +
                   ", local^2 " + std::to_string(r.local_square) + ", commutation " + std::to_string(r.commutation) +
                   ", total^2 " + std::to_string(r.total_square);
        });
        if (z->rank == 1)
            for (std::size_t p : opt.cyclic)
                run(tag + "cyclic cover p=" + std::to_string(p), [&](bool& ok) -> std::string {
                    auto r = cyclic_cover_oracle(*z, p);
                    ok = r.agree();
                    return "cover betti " + detail::tuple_text(r.cover.betti) + ", specialized betti " +
                           detail::tuple_text(r.specialized.betti);
                });
        if (c->quotient)
            run(tag + "Hurewicz factorization", [&](bool& ok) -> std::string {
                const auto& q = *c->quotient;
                const auto& ye = q.effective_action.space();
                std::size_t mismatches = 0;
                for (std::size_t i = 0; i < opt.loops; ++i) {
                    int base = static_cast<int>(rng() % ye.vertex_count());
                    GPath s = random_gloop(q.effective_action, base, rng, 1 + rng() % 12);
                    if (per->evaluate(hurewicz_class(q, per->h1, s)) != gpath_period(ye, s, *c->effective)) ++mismatches;
                }
                ok = mismatches == 0;
                return std::to_string(opt.loops) + " loops, " + std::to_string(mismatches) + " mismatches";
            });
    }
    std::size_t failed = 0;
    for (const auto& c : checks) failed += c.passed ? 0 : 1;
    if (cx.json) {
        Json a = Json::array();
        for (const auto& c : checks) a.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        cx.emit({{"document", d.name}, {"seed", opt.seed}, {"checks", a}, {"failed", failed}});
    } else {
        for (const auto& c : checks)
            cx.out << (c.passed ? "PASS  " : "FAIL  ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
        cx.out << (failed ? std::to_string(failed) + " of " + std::to_string(checks.size()) + " checks failed"
                          : "all " + std::to_string(checks.size()) + " checks passed")
               << "\n";
    }
    return failed ? kValidation : kOk;
}

inline int cmd_perturb(const CliContext& cx, const OrbifoldDocument& d, const std::string& cls, unsigned digits) {
    auto c = resolve_class(d, cls);
    auto per = period_homomorphism(c.x, c.xi);
    auto w = rank1_perturb(c.x, c.xi, per, digits);
    auto n = novikov_numbers(c.x, w);
    Json subs = Json::object();
    for (std::size_t s = 0; s < c.xi.space.symbols.size(); ++s) {
        auto r = round_decimal(*c.xi.space.shadows[s], digits);
        auto dec = detail::decimal_text(r);
        subs[c.xi.space.symbols[s]] = dec ? *dec : to_string(r);
    }
    Json values = Json::array();
    const auto& edges = c.x.cells(1);
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (!is_zero(w.values[e]))
            values.push_back({{"edge", {c.x.vertex_name(edges[e][0]), c.x.vertex_name(edges[e][1])}}, {"value", value_json(w.values[e])}});
    Json j{{"class", cls}, {"precision", digits}, {"original_rank", per.rank()}, {"substitution", subs},
           {"cocycle", {{"values", values}}}, {"numbers", detail::numbers_json(n)}};
    if (cx.json) {
        cx.emit(j);
        return kOk;
    }
    cx.out << "class '" << cls << "' has rank " << per.rank() << "\n";
    for (auto it = subs.begin(); it != subs.end(); ++it) cx.out << "  " << it.key() << " -> " << it.value().get<std::string>() << "\n";
    cx.out << "perturbed class on the orbit complex:\n";
    for (const auto& v : values)
        cx.out << "  " << v["edge"][0].get<std::string>() << " -> " << v["edge"][1].get<std::string>() << ": "
               << v["value"].get<std::string>() << "\n";
    detail::print_numbers(cx.out, n);
    return kOk;
}

/// Parses `args` (without the program name) and runs one command.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Novikov numbers and inequalities on combinatorial orbifolds", "novikov"};
    app.require_subcommand(1);
    std::string file, cls;
    bool json = false, transforms = false;
    std::vector<std::string> critical;
    std::vector<std::size_t> counts;
    ValidateOptions vopt;
    unsigned precision = 6;

    auto add_file = [&](CLI::App* s) {
        s->add_option("file", file, "orbifold document (JSON)")->required();
        s->add_flag("--json", json, "machine-readable output");
    };
    auto* homology = app.add_subcommand("homology", "integer homology of the orbit complex");
    add_file(homology);
    homology->add_flag("--transforms", transforms, "include Smith normal form change-of-basis matrices");
    auto* periods = app.add_subcommand("periods", "period homomorphism of a class");
    add_file(periods);
    periods->add_option("--class", cls, "cocycle name")->required();
    auto* novikov = app.add_subcommand("novikov", "Novikov Betti and torsion numbers of a class");
    add_file(novikov);
    novikov->add_option("--class", cls, "cocycle name")->required();
    novikov->add_option("--critical", critical, "critical data block to check (repeatable)");
    auto* novikov_counts = novikov->add_option("--counts", counts, "critical point counts c_0 c_1 ...")->delimiter(',');
    auto* check = app.add_subcommand("check-inequalities", "check critical data against the Novikov inequalities");
    add_file(check);
    auto* check_class = check->add_option("--class", cls, "restrict to one class, or the class for --counts");
    check->add_option("--critical", critical, "critical data block (repeatable; default all)");
    auto* check_counts = check->add_option("--counts", counts, "critical point counts c_0 c_1 ...")->delimiter(',');
    auto* validate = app.add_subcommand("validate", "closedness, nerve identities, cyclic covers and Hurewicz checks");
    add_file(validate);
    validate->add_option("--depth", vopt.depth, "nerve truncation depth")->capture_default_str();
    validate->add_option("--cyclic", vopt.cyclic, "cover degree (repeatable)")->capture_default_str();
    validate->add_option("--seed", vopt.seed, "random seed")->capture_default_str();
    validate->add_option("--samples", vopt.samples, "minimum nerve samples per class")->capture_default_str();
    validate->add_option("--loops", vopt.loops, "G-loops per class for the Hurewicz check")->capture_default_str();
    auto* perturb = app.add_subcommand("perturb", "rank-1 approximation from decimal shadows");
    add_file(perturb);
    perturb->add_option("--class", cls, "cocycle name")->required();
    perturb->add_option("--precision", precision, "decimal digits kept from each shadow")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    const CliContext cx{out, json};
    try {
        const OrbifoldDocument d = load_document(file);
        if (homology->parsed()) return cmd_homology(cx, d, transforms);
        if (periods->parsed()) return cmd_periods(cx, d, cls);
        if (novikov->parsed())
            return cmd_novikov(cx, d, cls, critical, novikov_counts->count() ? std::optional(counts) : std::nullopt);
        if (check->parsed())
            return cmd_check(cx, d, critical, check_class->count() ? std::optional(cls) : std::nullopt,
                             check_counts->count() ? std::optional(counts) : std::nullopt);
        if (validate->parsed()) return cmd_validate(cx, d, vopt);
        if (perturb->parsed()) return cmd_perturb(cx, d, cls, precision);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ValidationError& e) {
        err << "validation failed: " << e.what() << "\n";
        return kValidation;
    } catch (const UnsupportedOperation& e) {
        err << "unsupported: " << e.what() << "\n";
        return kUnsupported;
    } catch (const std::exception& e) {
        err << "internal check failed: " << e.what() << "\n";
        return kValidation;
    }
    return kUsage;
}

}  // namespace novikov::cli
