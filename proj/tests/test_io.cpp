#include "doctest.h"
#include "fixtures.hpp"
#include "hidecover/generators.hpp"
#include "hidecover/io.hpp"

#include <regex>

using namespace hidecover;
using fixtures::pt;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t k = 0;
    for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++k;
    return k;
}

SolutionDocument document(const std::vector<Point>& v) {
    const Classification c = classify(v);
    SolutionDocument doc;
    doc.polygon = validate_simple(v).vertices();
    doc.polygon_class = to_string(c.kind);
    doc.solution = c.funnel ? to_input_frame(solve_funnel(*c.funnel), c.relabel)
                            : to_input_frame(solve_pseudo(*c.pseudo), c.relabel);
    return doc;
}

}  // namespace

TEST_CASE("parse_polygon") {
    CHECK(parse_polygon("3\n0 0\n2 4\n4 0\n").vertices() == fixtures::f3());
    CHECK(parse_polygon("4\n0 0\n4 1\n6 4\n5 0\n").vertices() == fixtures::f4());
    CHECK(parse_polygon("# fixture\n3\n\n0 0   # origin\n2 4\n4 0\n").vertices() == fixtures::f3());
    CHECK(parse_polygon("3\n0 0\n1/2 1\n1 0\n").vertices() == std::vector<Point>{pt(0, 0), pt("1/2", "1"), pt(1, 0)});
    CHECK_THROWS_AS(parse_polygon("3\n0 0\n1 1\n2 2\n"), DegeneratePolygon);
    CHECK_THROWS_AS(parse_polygon("4\n0 0\n2 2\n2 0\n0 2\n"), NotSimple);
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            parse_points(text);
        } catch (const ParseError& e) {
            return e.line;
        }
        return 0;
    };
    CHECK(line_of("x\n") == 1);
    CHECK(line_of("3\n0 0\n1 q\n2 0\n") == 3);
    CHECK(line_of("3\n0 0\n1 1\n") > 0);
    CHECK(line_of("3\n0 0\n1 1 7\n2 0\n") == 3);
    CHECK_THROWS_AS(parse_polygon("2\n0 0\n1 1\n"), DegeneratePolygon);
    CHECK(line_of("3\n0 0\n1/0 1\n2 0\n") == 3);
}

TEST_CASE("parse without validation only fixes the winding") {
    const Polygon p = parse_polygon("3\n0 0\n4 0\n2 4\n", false);
    CHECK(p.vertices() == fixtures::f3());
    const Polygon collinear = parse_polygon("4\n0 0\n1 2\n2 4\n4 0\n", false);
    CHECK(collinear.size() == 4);
}

TEST_CASE("polygon text round-trips") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        GenConfig cfg;
        cfg.n = 3 + seed * 5;
        cfg.seed = seed;
        const Polygon p = gen_funnel(cfg).polygon;
        CHECK(parse_polygon(format_polygon(p.vertices())) == p);
    }
    const std::vector<Point> frac{pt(0, 0), pt("-1/3", "7/2"), pt("9/4", "1")};
    CHECK(parse_points(format_polygon(frac)) == frac);
}

TEST_CASE("solution documents round-trip through JSON") {
    for (const auto& v : {fixtures::f3(), fixtures::f4(), fixtures::f5(), fixtures::p6()}) {
        SolutionDocument doc = document(v);
        doc.source = "fixture.poly";
        doc.elapsed_ms = 1.25;
        doc.verdicts.hidden_set = true;
        doc.verdicts.cover = false;
        doc.verdicts.violations = 3;
        doc.solution.stats.predicates = 42;
        const SolutionDocument back = solution_from_json(to_json(doc));
        CHECK(back.polygon == doc.polygon);
        CHECK(back.polygon_class == doc.polygon_class);
        CHECK(back.source == doc.source);
        CHECK(back.solution.hidden.points == doc.solution.hidden.points);
        CHECK(back.solution.hidden.vertices == doc.solution.hidden.vertices);
        REQUIRE(back.solution.cover.size() == doc.solution.cover.size());
        for (std::size_t k = 0; k < doc.solution.cover.size(); ++k)
            CHECK(back.solution.cover.pieces[k].vertices == doc.solution.cover.pieces[k].vertices);
        CHECK(back.solution.cover.mode == doc.solution.cover.mode);
        CHECK(back.solution.split_point == doc.solution.split_point);
        CHECK(back.solution.stats.predicates == 42);
        CHECK(back.verdicts.hidden_set == std::optional<bool>(true));
        CHECK(back.verdicts.cover == std::optional<bool>(false));
        CHECK_FALSE(back.verdicts.homestead.has_value());
        CHECK(back.verdicts.violations == 3);
        CHECK(to_json(back) == to_json(doc));
    }
}

TEST_CASE("vertex solutions keep 1-based indices in JSON") {
    const Classification c = classify(fixtures::f5());
    SolutionDocument doc;
    doc.polygon = fixtures::f5();
    doc.solution = to_input_frame(solve_funnel_vertices(*c.funnel), c.relabel);
    const std::string json = to_json(doc);
    CHECK(std::regex_search(json, std::regex(R"("vertices"\s*:\s*\[\s*1\s*,\s*3\s*\])")));
    CHECK(solution_from_json(json).solution.hidden.vertices == std::vector<std::size_t>{0, 2});
}

TEST_CASE("malformed JSON documents") {
    CHECK_THROWS_AS(solution_from_json("{"), ParseError);
    CHECK_THROWS_AS(solution_from_json("[]"), ParseError);
    CHECK_THROWS_AS(solution_from_json(R"({"polygon": [["1", "x"]]})"), ParseError);
}

TEST_CASE("render_svg") {
    const std::string f3 = render_svg(document(fixtures::f3()));
    CHECK(count(f3, "class=\"piece\"") == 1);
    CHECK(count(f3, "<circle") == 1);
    CHECK(count(f3, "class=\"split-point\"") == 0);

    const std::string f5 = render_svg(document(fixtures::f5()));
    CHECK(count(f5, "class=\"piece\"") == 2);
    CHECK(count(f5, "<circle") == 2);

    const SolutionDocument p6 = document(fixtures::p6());
    const std::string svg = render_svg(p6);
    CHECK(count(svg, "class=\"piece\"") == 3);
    CHECK(count(svg, "<circle") == 2);
    CHECK(count(svg, "class=\"split-point\"") == 1);
    CHECK(count(svg, "class=\"polygon\"") == 1);
    // The cross is centred on (4.5, 4.5), drawn with y flipped.
    const double mark = 0.012 * 8;
    char expect[64];
    std::snprintf(expect, sizeof expect, "M%.9g,%.9g L%.9g,%.9g", 4.5 - mark, -4.5 - mark, 4.5 + mark, -4.5 + mark);
    CHECK(svg.find(expect) != std::string::npos);
    CHECK(svg == render_svg(p6));
    CHECK(svg.find("viewBox=\"-0.4 -6.4 8.8 6.8\"") != std::string::npos);
}
