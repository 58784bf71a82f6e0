#include "novikov/cli/commands.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace novikov;
using namespace novikov::cli;

namespace {

const std::string kCorpus = NOVIKOV_CORPUS_DIR;

std::string corpus(const std::string& name) { return kCorpus + "/" + name + ".json"; }

struct Run {
    int code;
    std::string out, err;
    Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

Json raw(const std::string& name) {
    std::ifstream in(corpus(name));
    return Json::parse(in);
}

std::string write_temp(const std::string& stem, const Json& j) {
    auto path = std::filesystem::temp_directory_path() / ("novikov_test_" + stem + ".json");
    std::ofstream(path) << j.dump();
    return path.string();
}

std::string parse_error(const Json& j) {
    try {
        parse_document(j);
    } catch (const InvalidInput& e) {
        return e.what();
    }
    return "";
}

const std::vector<std::string> kAll{"circle", "rp2", "torus7", "klein", "hexagon_z2", "mirror_square", "pillowcase", "mirror_cylinder"};

}  // namespace

TEST(Document, RoundTripOnCorpus) {
    for (const auto& name : kAll) {
        auto d = load_document(corpus(name));
        Json once = serialize(d);
        Json twice = serialize(parse_document(once));
        EXPECT_EQ(once, twice) << name;
        auto again = parse_document(once);
        for (const auto& [cls, _] : d.cocycles) EXPECT_EQ(cochain(d, cls), cochain(again, cls)) << name << " " << cls;
        EXPECT_EQ(again.space, d.space);
    }
}

TEST(Document, CanonicalizesReversedEdges) {
    Json j = raw("circle");
    Json& v = j["cocycles"]["dtheta"]["values"][0];
    auto u = v["edge"][0], w = v["edge"][1];
    v["edge"] = {w, u};
    v["value"] = "-1/3";
    auto d = parse_document(j);
    EXPECT_EQ(serialize(d)["cocycles"]["dtheta"], serialize(load_document(corpus("circle")))["cocycles"]["dtheta"]);
}

TEST(Document, ShadowsStayDecimal) {
    auto j = serialize(load_document(corpus("torus7")));
    EXPECT_EQ(j["period_basis"][0]["shadow"], "1.41421356");
}

TEST(Document, ErrorsCarryFieldPaths) {
    Json j = raw("circle");
    j["cocycles"]["dtheta"]["values"][1]["value"] = "1/0x";
    EXPECT_NE(parse_error(j).find("cocycles.dtheta.values[1].value"), std::string::npos);

    j = raw("circle");
    j["cocycles"]["dtheta"]["values"][0]["edge"][0] = "nowhere";
    EXPECT_NE(parse_error(j).find("cocycles.dtheta.values[0].edge[0]"), std::string::npos);

    j = raw("circle");
    j.erase("orbit");
    EXPECT_NE(parse_error(j).find("exactly one"), std::string::npos);

    j = raw("hexagon_z2");
    j["action"]["group"]["table"][1][1] = "q";
    EXPECT_NE(parse_error(j).find("action.group.table[1][1]"), std::string::npos);

    j = raw("circle");
    j["critical_data"]["angle"]["counts"][0] = -1;
    EXPECT_NE(parse_error(j).find("critical_data.angle.counts[0]"), std::string::npos);

    j = raw("torus7");
    j["cocycles"]["e1"]["values"][0]["value"] = Json::array({"1"});
    EXPECT_NE(parse_error(j).find("expected 2 coordinates"), std::string::npos);

    EXPECT_THROW(parse_document_text("{ not json"), InvalidInput);
}

TEST(Document, RejectsNonEdgesAndBadActions) {
    Json j = raw("torus7");
    j["cocycles"]["zero"]["values"] = Json::array({{{"edge", {"0", "0"}}, {"value", "1"}}});
    EXPECT_NE(parse_error(j).find("not an edge"), std::string::npos);

    j = raw("hexagon_z2");
    j["action"]["vertex_maps"]["s"].erase("0");
    EXPECT_NE(parse_error(j).find("no image for vertex"), std::string::npos);
}

TEST(Homology, CorpusExamples) {
    auto circle = run({"homology", corpus("circle"), "--json"});
    ASSERT_EQ(circle.code, 0);
    EXPECT_EQ(circle.json()["betti"], Json({1, 1}));

    auto rp2 = run({"homology", corpus("rp2"), "--json"}).json();
    EXPECT_EQ(rp2["betti"], Json({1, 0, 0}));
    EXPECT_EQ(rp2["torsion"][1], Json({"2"}));

    auto pillow = run({"homology", corpus("pillowcase"), "--json"}).json();
    EXPECT_EQ(pillow["betti"], Json({1, 0, 1}));
}

TEST(Homology, TransformsReproduceTheDiagonal) {
    auto j = run({"homology", corpus("rp2"), "--json", "--transforms"}).json();
    ASSERT_EQ(j["transforms"].size(), 2u);
    auto d = load_document(corpus("rp2"));
    auto cc = chain_complex(*d.orbit);
    for (const auto& t : j["transforms"]) {
        const int k = t["degree"].get<int>();
        auto to_matrix = [](const Json& rows) {
            IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = Integer(rows[i][c].get<std::string>());
            return m;
        };
        IntMatrix prod = to_matrix(t["left"]) * cc.boundary(k) * to_matrix(t["right"]);
        for (std::size_t i = 0; i < prod.rows(); ++i)
            for (std::size_t c = 0; c < prod.cols(); ++c) {
                Integer want = i == c ? Integer(t["diagonal"][i].get<std::string>()) : Integer(0);
                EXPECT_EQ(prod(i, c), want);
            }
    }
}

TEST(Novikov, CorpusExamples) {
    auto dtheta = run({"novikov", corpus("circle"), "--class", "dtheta", "--json"});
    ASSERT_EQ(dtheta.code, 0);
    auto j = dtheta.json();
    EXPECT_EQ(j["periods"]["rank"], 1);
    EXPECT_TRUE(j["periods"]["integral"].get<bool>());
    EXPECT_EQ(j["numbers"]["b"], Json({0, 0}));
    EXPECT_EQ(j["numbers"]["q"], Json({0, 0}));
    ASSERT_EQ(j["inequalities"].size(), 1u);
    EXPECT_TRUE(j["inequalities"][0]["all_hold"].get<bool>());

    auto zero = run({"novikov", corpus("torus7"), "--class", "zero", "--json"}).json();
    EXPECT_EQ(zero["numbers"]["b"], Json({1, 2, 1}));
    EXPECT_EQ(zero["numbers"]["q"], Json({0, 0, 0}));

    auto e1 = run({"novikov", corpus("torus7"), "--class", "e1", "--json"}).json();
    EXPECT_EQ(e1["numbers"]["b"], Json({0, 0, 0}));
    EXPECT_EQ(e1["numbers"]["q"], Json({0, 0, 0}));
}

TEST(Novikov, RankTwoIsBettiOnlyWithExitThree) {
    auto r = run({"novikov", corpus("torus7"), "--class", "irr", "--json"});
    EXPECT_EQ(r.code, 3);
    auto j = r.json();
    EXPECT_EQ(j["numbers"]["rank"], 2);
    EXPECT_TRUE(j["numbers"]["q"].is_null());
    EXPECT_EQ(j["numbers"]["b"], Json({0, 0, 0}));
}

TEST(Novikov, CountsFromCommandLine) {
    auto r = run({"novikov", corpus("rp2"), "--class", "zero", "--counts", "1,0,1", "--json"});
    ASSERT_EQ(r.code, 0);
    auto j = r.json();
    EXPECT_FALSE(j["inequalities"].back()["all_hold"].get<bool>());
}

TEST(CheckInequalities, ExitCodes) {
    auto pillow = run({"check-inequalities", corpus("pillowcase"), "--critical", "height", "--json"});
    EXPECT_EQ(pillow.code, 0);
    for (const auto& v : pillow.json()["reports"][0]["weak"]) EXPECT_EQ(v["slack"], 0);

    auto bad = run({"check-inequalities", corpus("pillowcase"), "--critical", "inconsistent"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.out.find("VIOLATED"), std::string::npos);

    EXPECT_EQ(run({"check-inequalities", corpus("pillowcase"), "--critical", "nope"}).code, 1);
    EXPECT_EQ(run({"check-inequalities", corpus("rp2"), "--counts", "1,1,1"}).code, 1);
    EXPECT_EQ(run({"check-inequalities", corpus("rp2"), "--class", "zero", "--counts", "1,1,1"}).code, 0);
}

TEST(Validate, HexagonPasses) {
    auto r = run({"validate", corpus("hexagon_z2"), "--depth", "3", "--cyclic", "3"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Validate, AllCorpusPassesAtDefaults) {
    for (const auto& name : kAll) {
        auto r = run({"validate", corpus(name)});
        EXPECT_EQ(r.code, 0) << name << "\n" << r.out << r.err;
    }
}

TEST(Validate, SeedDoesNotChangeVerdicts) {
    auto a = run({"validate", corpus("mirror_cylinder"), "--seed", "1"});
    auto b = run({"validate", corpus("mirror_cylinder"), "--seed", "98765"});
    EXPECT_EQ(a.out, b.out);
    auto c = run({"validate", corpus("mirror_cylinder"), "--seed", "7", "--json"});
    auto d = run({"validate", corpus("mirror_cylinder"), "--seed", "7", "--json"});
    EXPECT_EQ(c.out, d.out);
}

TEST(Validate, CorruptedCocycleFails) {
    Json j = raw("torus7");
    j["cocycles"]["e1"]["values"][0]["value"] = Json::array({"5/7", "0"});
    auto path = write_temp("corrupt", j);
    auto r = run({"validate", path});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("FAIL  class e1: closed"), std::string::npos);
    EXPECT_EQ(run({"novikov", path, "--class", "e1"}).code, 2);
}

TEST(Validate, NonBasicCocycleFails) {
    Json j = raw("hexagon_z2");
    j["cocycles"]["angle"]["values"][0]["value"] = "1/3";
    j["cocycles"]["angle"]["values"][1]["value"] = "0";
    auto path = write_temp("nonbasic", j);
    auto r = run({"validate", path});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("FAIL  class angle: basic"), std::string::npos);
}

TEST(Validate, CoverCapIsUnsupported) { EXPECT_EQ(run({"validate", corpus("circle"), "--cyclic", "13"}).code, 3); }

TEST(Perturb, TorusIrrational) {
    auto r = run({"perturb", corpus("torus7"), "--class", "irr", "--precision", "2", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = r.json();
    EXPECT_EQ(j["original_rank"], 2);
    EXPECT_EQ(j["substitution"]["alpha"], "1.41");
    EXPECT_EQ(j["numbers"]["rank"], 1);
    EXPECT_EQ(j["numbers"]["b"], Json({0, 0, 0}));
    EXPECT_EQ(run({"perturb", corpus("torus7"), "--class", "zero"}).code, 1);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    EXPECT_EQ(run({"novikov", corpus("circle")}).code, 1);
    EXPECT_EQ(run({"novikov", corpus("circle"), "--class", "missing"}).code, 1);
    EXPECT_EQ(run({"homology", "/nonexistent.json"}).code, 1);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, OutputIsDeterministic) {
    for (const auto& name : kAll) {
        auto a = run({"homology", corpus(name), "--json", "--transforms"});
        auto b = run({"homology", corpus(name), "--json", "--transforms"});
        EXPECT_EQ(a.out, b.out);
    }
}
