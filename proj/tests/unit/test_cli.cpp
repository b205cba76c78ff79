#include <cstdlib>
#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "lq/cli/app.hpp"
#include "lq/cli/input.hpp"
#include "lq/cli/report.hpp"
#include "lq/error.hpp"

using lq::cli::run;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
    json doc() const { return json::parse(out); }
};

Result lq_run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(LQ_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("FNV-1a reference values") {
    CHECK(lq::cli::fnv1a_hex("") == "cbf29ce484222325");
    CHECK(lq::cli::fnv1a_hex("a") == "af63dc4c8601ec8c");
    CHECK(lq::cli::fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("Laurent polynomial grammar") {
    using lq::cli::parse_laurent;
    using lq::dvr::Scalar;
    CHECK(parse_laurent("1 + 2t - t^-2", 5) == Scalar::laurent(5, {{0, 1}, {1, 2}, {-2, -1}}));
    CHECK(parse_laurent("3*t^2", 5) == Scalar::monomial(5, 3, 2));
    CHECK(parse_laurent("-t", 3) == Scalar::monomial(3, 2, 1));
    CHECK(parse_laurent("7", 7).is_zero());
    CHECK(parse_laurent("t + t", 2).is_zero());
    CHECK(parse_laurent("t^-1", 3).valuation() == -1);
    for (const char* bad : {"", "t^", "2**t", "1 2", "+", "t^x", "3*"}) CHECK_THROWS_AS(parse_laurent(bad, 3), lq::ParseError);
    try {
        parse_laurent("1 + t^", 3);
    } catch (const lq::ParseError& e) {
        CHECK(e.column == 7);
    }
}

TEST_CASE("counterexample command") {
    Result r = lq_run({"counterexample"});
    REQUIRE(r.code == 0);
    json j = r.doc();
    CHECK(j["minors_vanish"] == true);
    CHECK(j["linked"] == false);
    CHECK(j["discrepancy"] == true);
    CHECK(j["rank_one_disagreements"] == 0);
    CHECK(j["rank_one_pairs_checked"] == 225);
    for (const auto& w : j["component_witnesses"]) {
        CHECK(w["minors_vanish"] == true);
        CHECK(w["linked"] == true);
    }
    CHECK(lq_run({"counterexample", "--p", "2"}).code == 0);
    Result pretty = lq_run({"counterexample", "--pretty"});
    CHECK(pretty.out.find("minors_vanish: true") != std::string::npos);
    CHECK(pretty.out.find("linked: false") != std::string::npos);
}

TEST_CASE("analyze the two-lattice document") {
    Result r = lq_run({"analyze", data("two_point.json"), "-r", "2"});
    REQUIRE(r.code == 0);
    json a = r.doc()["analysis"];
    CHECK(a["ambient_multiplicities"] == json::array({3, 1}));
    CHECK(a["quiver"]["double_tree"] == true);
    CHECK(a["locally_linearly_independent"] == true);
    CHECK(a["strata"][0]["component_count"] == 2);
    CHECK(a["strata"][0]["maximal_equals_components"] == true);
    std::set<std::vector<int>> labels;
    for (const auto& c : a["strata"][0]["components"]) labels.insert(c["label"].get<std::vector<int>>());
    CHECK(labels == std::set<std::vector<int>>{{2, 0}, {1, 1}});

    Result l = lq_run({"analyze", data("two_point_lattices.json"), "-r", "2"});
    REQUIRE(l.code == 0);
    CHECK(l.doc()["analysis"] == a);

    json prov = r.doc()["provenance"];
    CHECK(prov["input_hash"] == lq::cli::fnv1a_hex(lq::cli::read_file(data("two_point.json"))));
    CHECK(prov["seed"] == 1);
    CHECK(prov["p"] == 3);
}

TEST_CASE("tree documents produce double trees") {
    Result r = lq_run({"analyze", data("star_tree.json")});
    REQUIRE(r.code == 0);
    CHECK(r.doc()["analysis"]["quiver"]["double_tree"] == true);
    CHECK(r.doc()["analysis"]["locally_linearly_independent"] == true);
}

TEST_CASE("input errors") {
    CHECK(lq_run({"analyze", data("empty_list.json")}).code == 1);
    Result syntax = lq_run({"analyze", data("bad_syntax.json")});
    CHECK(syntax.code == 1);
    CHECK(syntax.err.find("(line 4, column 28)") != std::string::npos);
    Result laurent = lq_run({"analyze", data("bad_laurent.json")});
    CHECK(laurent.code == 1);
    CHECK(laurent.err.find("line 6") != std::string::npos);
    CHECK(lq_run({"analyze", data("nonconvex.json")}).code == 1);
    Result closed = lq_run({"analyze", data("nonconvex.json"), "--close"});
    CHECK(closed.code == 0);
    CHECK(closed.doc()["analysis"]["classes"] == 3);
    CHECK(lq_run({"analyze", data("missing.json")}).code == 1);
    CHECK(lq_run({}).code == 1);
    CHECK(lq_run({"analyze"}).code == 1);
    CHECK(lq_run({"frobnicate"}).code == 1);
    CHECK(lq_run({"--help"}).code == 0);
    CHECK(lq_run({"strata", data("two_point.json")}).code == 1);
}

TEST_CASE("reports are deterministic") {
    for (std::vector<std::string> args : {std::vector<std::string>{"strata", data("two_point.json"), "-r", "2", "--realize", "--seed", "5"},
                                          std::vector<std::string>{"curve-example", "--n12", "2"}}) {
        Result a = lq_run(args), b = lq_run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
    Result s5 = lq_run({"strata", data("two_point.json"), "-r", "2", "--realize", "--seed", "5"});
    Result s6 = lq_run({"strata", data("two_point.json"), "-r", "2", "--realize", "--seed", "6"});
    CHECK(s5.doc()["provenance"]["seed"] == 5);
    CHECK(s6.doc()["provenance"]["seed"] == 6);
}

TEST_CASE("strata with witnesses and the enumeration oracle") {
    Result r = lq_run({"strata", data("two_point.json"), "-r", "2", "--realize", "--oracle", "2"});
    REQUIRE(r.code == 0);
    json j = r.doc();
    CHECK(j["ok"] == true);
    for (const auto& w : j["witnesses"]) {
        CHECK(w["phi_matches"] == true);
        bool component = w["tuple"] == json::array({2, 0}) || w["tuple"] == json::array({1, 1});
        CHECK(w["projective"] == component);
    }
    CHECK(j["oracle"]["ranks"][0]["stratum_set_agrees"] == true);
    CHECK(j["oracle"]["ranks"][0]["maximal_agrees"] == true);
}

TEST_CASE("bruteforce agreement and budgets") {
    for (auto [file, rank] : {std::pair<const char*, const char*>{"two_point.json", "2"}, {"chain3.json", "1"}, {"star_tree.json", "2"}}) {
        Result r = lq_run({"bruteforce", data(file), "-r", rank, "-q", "2"});
        CAPTURE(file);
        REQUIRE(r.code == 0);
        CHECK(r.doc()["ok"] == true);
    }
    CHECK(lq_run({"bruteforce", data("star_tree.json"), "-r", "2", "-q", "3", "--budget", "1000"}).code == 3);
    setenv("LQ_BUDGET", "10", 1);
    CHECK(lq_run({"bruteforce", data("chain3.json"), "-r", "1"}).code == 3);
    unsetenv("LQ_BUDGET");
    CHECK(lq_run({"bruteforce", data("chain3.json"), "-r", "1"}).code == 0);
}

TEST_CASE("tropical command") {
    Result r = lq_run({"tropical", data("triangle.json")});
    REQUIRE(r.code == 0);
    json j = r.doc();
    CHECK(j["closure_condition"] == true);
    CHECK(j["closure_equals_hull"] == true);
    std::set<std::vector<int>> degs;
    for (const auto& v : j["closure"]) degs.insert(v["multidegree"].get<std::vector<int>>());
    CHECK(degs == std::set<std::vector<int>>{{1, 1, 1}, {3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {-1, 2, 2}, {2, -1, 2}, {2, 2, -1}});

    Result u = lq_run({"tropical", data("under_concentrated.json")});
    REQUIRE(u.code == 0);
    CHECK(u.doc()["closure_condition"] == false);
    CHECK(u.doc()["closure_in_hull"] == true);
    CHECK(u.doc()["closure"].size() < u.doc()["hull"].size());
    Result fixed = lq_run({"tropical", data("under_concentrated.json"), "--auto-concentrate", "1"});
    REQUIRE(fixed.code == 0);
    CHECK(fixed.doc()["closure_condition"] == true);
    CHECK(fixed.doc()["closure_equals_hull"] == true);
}

TEST_CASE("hull command on multidegrees") {
    Result r = lq_run({"hull", data("triangle_hull.json")});
    REQUIRE(r.code == 0);
    std::set<std::vector<int>> degs;
    json j = r.doc();
    for (const auto& v : j["hull"]) degs.insert(v["multidegree"].get<std::vector<int>>());
    CHECK(degs == std::set<std::vector<int>>{{1, 1, 1}, {3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {-1, 2, 2}, {2, -1, 2}, {2, 2, -1}});
}

TEST_CASE("curve-example command") {
    struct Case {
        std::vector<std::string> args;
        std::size_t classes;
        bool chain;
    };
    for (const auto& c : {Case{{"--n12", "1", "--n13", "1", "--n23", "1"}, 4, false},
                          Case{{"--n12", "2", "--n13", "1", "--n23", "1"}, 4, false},
                          Case{{"--n12", "0", "--n13", "2", "--n23", "2", "--w0", "-1,-1,3"}, 3, true}}) {
        std::vector<std::string> args{"curve-example"};
        args.insert(args.end(), c.args.begin(), c.args.end());
        Result r = lq_run(args);
        REQUIRE(r.code == 0);
        json j = r.doc();
        CHECK(j["ok"] == true);
        CHECK(j["classes"] == c.classes);
        CHECK(j["star"] == true);
        CHECK(j["chain"] == c.chain);
        for (const auto& v : j["closure"]) CHECK(v["h0"] == j["expected_h0"]);
    }
    CHECK(lq_run({"curve-example", "--w0", "2,1,1"}).code == 1);
    Result an = lq_run({"curve-example", "--analyze", "-r", "1"});
    REQUIRE(an.code == 0);
    CHECK(an.doc()["analysis"]["locally_linearly_independent"] == true);
    CHECK(an.doc()["analysis"]["strata"][0]["component_count"] == 4);
}
