#include "doctest.h"
#include "fixtures.hpp"
#include "hidecover/generators.hpp"

#include <algorithm>

using namespace hidecover;
using fixtures::points;
using fixtures::pt;

namespace {

std::vector<Point> rotated(std::vector<Point> v, std::size_t k) {
    std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k % v.size()), v.end());
    return v;
}

std::vector<Point> reversed(std::vector<Point> v) {
    std::reverse(v.begin(), v.end());
    return v;
}

std::size_t right_turns(const Polygon& p) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < p.size(); ++i) k += p.turn(i) == Orientation::Right;
    return k;
}

}  // namespace

TEST_CASE("validate_simple") {
    CHECK(validate_simple(fixtures::f3()).vertices() == fixtures::f3());
    const Polygon ccw = validate_simple(points({{0, 0}, {4, 0}, {2, 4}}));
    CHECK(signed_area2(ccw.vertices()).sign() < 0);
    CHECK(ccw.vertices() == points({{0, 0}, {2, 4}, {4, 0}}));
    CHECK_THROWS_AS(validate_simple(points({{0, 0}, {2, 2}, {2, 0}, {0, 2}})), NotSimple);
    CHECK_THROWS_AS(validate_simple(points({{0, 0}, {1, 1}, {2, 2}})), DegeneratePolygon);
    CHECK_THROWS_AS(validate_simple(points({{0, 0}, {0, 0}, {2, 4}, {4, 0}})), DegenerateVertex);
    CHECK_THROWS(validate_simple(points({{0, 0}, {1, 1}})));
}

TEST_CASE("validate_simple reports the crossing edge pair") {
    try {
        validate_simple(points({{0, 0}, {2, 2}, {2, 0}, {0, 2}}));
        FAIL("expected NotSimple");
    } catch (const NotSimple& e) {
        CHECK(e.edge_a != e.edge_b);
        CHECK(std::max(e.edge_a, e.edge_b) < 4);
    }
}

TEST_CASE("normalize_strict") {
    CHECK(normalize_strict(validate_simple(points({{0, 0}, {1, 2}, {2, 4}, {4, 0}}))).vertices() ==
          points({{0, 0}, {2, 4}, {4, 0}}));
    CHECK(normalize_strict(validate_simple(fixtures::f5())).vertices() == fixtures::f5());
    // Counter-clockwise input, so compare after the winding fix.
    const Polygon p = normalize_strict(validate_simple(points({{0, 0}, {1, 0}, {2, 0}, {1, 1}})));
    CHECK(p.size() == 3);
    CHECK(std::find(p.vertices().begin(), p.vertices().end(), pt(1, 0)) == p.vertices().end());
}

TEST_CASE("classify fixtures") {
    const Classification f5 = classify(fixtures::f5());
    REQUIRE(f5.kind == PolygonClass::Funnel);
    CHECK(f5.funnel->t() == 3);

    const Classification f3 = classify(fixtures::f3());
    REQUIRE(f3.kind == PolygonClass::Funnel);
    CHECK(f3.funnel->t() == 2);

    const Classification p6 = classify(fixtures::p6());
    REQUIRE(p6.kind == PolygonClass::Pseudotriangle);
    CHECK(p6.pseudo->t() == 3);
    CHECK(p6.pseudo->s() == 5);

    CHECK(classify(points({{0, 0}, {0, 1}, {1, 1}, {1, 0}})).kind == PolygonClass::OtherSimple);
    const Classification bow = classify(points({{0, 0}, {2, 2}, {2, 0}, {0, 2}}));
    CHECK(bow.kind == PolygonClass::NotSimple);
    CHECK_FALSE(bow.reason.empty());
}

TEST_CASE("classify canonicalizes a funnel with its longer chain second") {
    GenConfig cfg;
    cfg.n = 9;
    for (cfg.seed = 1;; ++cfg.seed) {
        const FunnelPolygon g = gen_funnel(cfg);
        const std::size_t short_edges = cfg.n - 1 - g.apex;
        if (short_edges == g.apex || short_edges < 2) continue;  // ties, and a one-edge chain is itself a convex base
        // Reflect through x -> -x and reverse so the long chain comes second.
        std::vector<Point> m;
        for (auto it = g.polygon.vertices().rbegin(); it != g.polygon.vertices().rend(); ++it) m.push_back({-it->x, it->y});
        const Classification c = classify(m);
        REQUIRE(c.kind == PolygonClass::Funnel);
        const FunnelPolygon& f = *c.funnel;
        CHECK(c.relabel.mirrored);
        CHECK(f.polygon == g.polygon);
        CHECK(f.t() == g.t());
        CHECK(is_funnel(f.polygon, f.apex));
        break;
    }
}

TEST_CASE("classify is invariant under rotation and reversal") {
    for (const auto& v : {fixtures::f3(), fixtures::f4(), fixtures::f5(), fixtures::p6()}) {
        const Classification base = classify(v);
        for (std::size_t k = 0; k < v.size(); ++k)
            for (const auto& w : {rotated(v, k), reversed(rotated(v, k))}) {
                const Classification c = classify(w);
                REQUIRE(c.kind == base.kind);
                if (c.funnel) {
                    CHECK(c.funnel->polygon == base.funnel->polygon);
                    CHECK(c.funnel->apex == base.funnel->apex);
                }
                if (c.pseudo) {
                    CHECK(c.pseudo->polygon == base.pseudo->polygon);
                    CHECK(c.pseudo->second == base.pseudo->second);
                    CHECK(c.pseudo->third == base.pseudo->third);
                }
                // The relabeling maps back onto the classified input.
                const Polygon& canon = c.funnel ? c.funnel->polygon : c.pseudo->polygon;
                const Polygon input = validate_simple(w);
                for (std::size_t i = 0; i < canon.size(); ++i)
                    CHECK(c.relabel.to_input(canon[i]) == input[c.relabel.source[i]]);
            }
    }
}

TEST_CASE("funnel and pseudotriangle turn structure") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        GenConfig cfg;
        cfg.n = 3 + seed * 7 % 60;
        cfg.seed = seed;
        const Classification c = classify(gen_funnel(cfg).polygon.vertices());
        REQUIRE(c.kind == PolygonClass::Funnel);
        const FunnelPolygon& f = *c.funnel;
        const std::size_t n = f.size();
        for (std::size_t i = 0; i < n; ++i) {
            const bool corner = i == 0 || i == f.apex || i == n - 1;
            CHECK(f.polygon.turn(i) == (corner ? Orientation::Right : Orientation::Left));
        }

        cfg.chains = {2 + seed % 9, 2 + seed % 5, 2 + seed % 3};
        std::sort(cfg.chains.rbegin(), cfg.chains.rend());
        const Classification p = classify(gen_pseudotriangle(cfg).polygon.vertices());
        REQUIRE(p.kind == PolygonClass::Pseudotriangle);
        CHECK(right_turns(p.pseudo->polygon) == 3);
        const Pseudotriangle& t = *p.pseudo;
        const std::size_t r1 = t.second, r2 = t.third - t.second, r3 = t.size() - t.third;
        CHECK(r1 >= r2);
        CHECK(r2 >= r3);
    }
}

TEST_CASE("is_funnel") {
    CHECK(is_funnel(Polygon::trusted(fixtures::f5()), 2));
    CHECK_FALSE(is_funnel(Polygon::trusted(fixtures::f5()), 1));
    CHECK_FALSE(is_funnel(Polygon::trusted(fixtures::p6()), 2));
}
