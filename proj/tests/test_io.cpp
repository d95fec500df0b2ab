#include "doctest.h"

#include "fixtures.hpp"
#include "veech2/io.hpp"
#include "veech2/svg.hpp"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <set>
#include <sstream>

using namespace veech2;
using fixtures::phi;
using fixtures::v;

namespace {

QElem s2() { return QElem::sqrt_d(2); }

std::vector<Surface> all_fixtures() {
    return {fixtures::torus(),
            fixtures::torus_triangles(),
            fixtures::rational_l(),
            fixtures::golden_l(),
            build_h2(1, phi(), 1, phi(), QElem::frac(3, -1, 2, 5), 0).surface,
            build_h2(1, 1 + s2(), s2() - 1, 1, 2 - s2(), 0).surface,
            build_h11(1, s2(), 2 * s2() - 1, 1, 1, 2 - s2(), 0, 0).surface,
            build_h11(1, 1, 1, 1, 1, 0, 0, 0).surface};
}

boost::property_tree::ptree parse_xml(const std::string& text) {
    std::istringstream in(text);
    boost::property_tree::ptree tree;
    boost::property_tree::read_xml(in, tree);
    return tree;
}

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
    return n;
}

std::set<std::string> labels(const boost::property_tree::ptree& tree) {
    std::set<std::string> out;
    for (const auto& [name, node] : tree.get_child("svg")) {
        if (name == "text") out.insert(node.data());
    }
    return out;
}

}  // namespace

TEST_CASE("field elements") {
    QElem x = QElem::frac(-3, 5, 4, 5);
    Json j = to_json(x);
    CHECK(j.dump() == R"(["-3","4","5","4"])");
    CHECK(qelem_from_json(j, 5) == x);
    CHECK(qelem_from_json(to_json(QElem(Rational(7, 3))), 0) == QElem(Rational(7, 3)));
    CHECK_THROWS_AS(qelem_from_json(j, 0), ParseError);
    CHECK_THROWS_AS(qelem_from_json(Json::parse(R"(["1","0","0","1"])"), 0), ParseError);
    CHECK_THROWS_AS(qelem_from_json(Json::parse(R"(["1.5","1","0","1"])"), 0), ParseError);
    CHECK_THROWS_AS(qelem_from_json(Json::parse(R"([1,1,0,1])"), 0), ParseError);
}

TEST_CASE("command line triples") {
    CHECK(parse_triple("3,-1,2", 5) == QElem::frac(3, -1, 2, 5));
    CHECK(parse_triple("0,0,1", 5) == QElem(0));
    CHECK(parse_triple("7", 0) == QElem(7));
    CHECK(parse_triple("1,1", 2) == 1 + s2());
    CHECK_THROWS_AS(parse_triple("1,1,0", 2), ParseError);
    CHECK_THROWS_AS(parse_triple("1,x", 2), ParseError);
    CHECK_THROWS_AS(parse_triple("1,1", 0), ParseError);
    CHECK_THROWS_AS(parse_triple("1,2,3,4", 2), ParseError);
}

TEST_CASE("surface round trip is byte-stable") {
    for (const Surface& s : all_fixtures()) {
        std::string text = dump(surface_json(s));
        Surface back = parse_surface(parse_json(text));
        CHECK(dump(surface_json(back)) == text);
        CHECK(back.d == s.d);
        CHECK(back.gluings == s.gluings);
        REQUIRE(back.polygons.size() == s.polygons.size());
        for (std::size_t i = 0; i < s.polygons.size(); ++i) CHECK(back.polygons[i].vertices == s.polygons[i].vertices);
        CHECK(validate(back).name() == validate(s).name());
    }
}

TEST_CASE("malformed surfaces") {
    CHECK_THROWS_AS(parse_surface(Json::parse(R"({"d": 4, "polygons": [], "gluings": []})")), ParseError);
    CHECK_THROWS_AS(parse_surface(Json::parse(R"({"d": null, "gluings": []})")), ParseError);
    CHECK_THROWS_AS(parse_surface(Json::parse(R"({"d": null, "polygons": [], "gluings": [[0, 1, 2]]})")), ParseError);
    CHECK_THROWS_AS(parse_json("{"), ParseError);
}

TEST_CASE("verdict round trip") {
    Verdict v;
    v.status = VerdictStatus::RefutedWithWitness;
    v.direction = fixtures::v(1, phi());
    v.equation = "height";
    v.residual = -2 * phi();
    v.detail = "example";
    std::string text = dump(verdict_json(v, 5));
    Verdict back = parse_verdict(parse_json(text));
    CHECK(back.status == v.status);
    CHECK(back.direction == v.direction);
    CHECK_FALSE(back.twist_direction);
    CHECK(back.equation == v.equation);
    CHECK(back.residual == v.residual);
    CHECK(dump(verdict_json(back, 5)) == text);

    Verdict p = is_veech_h2(fixtures::golden_l(), std::nullopt, 1);
    std::string pt = dump(verdict_json(p, 5));
    CHECK(dump(verdict_json(parse_verdict(parse_json(pt)), 5)) == pt);
}

TEST_CASE("solution set round trip") {
    SolutionSet s = solve_h2(0, 1, 2, 6);
    std::string text = dump(solution_set_json(s));
    SolutionSet back = parse_solution_set(parse_json(text));
    CHECK(back.solutions == s.solutions);
    CHECK(back.d == 2);
    CHECK(back.box == 6);
    CHECK(dump(solution_set_json(back)) == text);
}

TEST_CASE("svg export") {
    std::string torus = export_svg(fixtures::torus());
    auto t = parse_xml(torus);
    CHECK(count(torus, "class=\"polygon\"") == 1);
    CHECK(labels(t) == std::set<std::string>{"a", "b"});

    Surface golden = build_h2(1, phi(), 1, phi(), QElem::frac(3, -1, 2, 5), 0).surface;
    std::string g = export_svg(golden);
    auto gt = parse_xml(g);
    CHECK(count(g, "class=\"polygon\"") == 2);
    CHECK(labels(gt).size() == 5);

    auto r = decompose(golden, v(1, 0));
    REQUIRE(r.periodic());
    std::string gd = export_svg(golden, &*r.decomposition);
    CHECK_NOTHROW(parse_xml(gd));
    CHECK(count(gd, "class=\"cylinder\"") == 2);
    CHECK(count(gd, "class=\"core\"") == 2);
    CHECK(count(gd, "class=\"saddle\"") > 0);
    CHECK(export_svg(golden) == g);
}
