#include "doctest.h"
#include "fixtures.hpp"

#include <random>

using namespace hidecover;
using fixtures::pt;

namespace {

constexpr auto L = Orientation::Left;
constexpr auto R = Orientation::Right;
constexpr auto C = Orientation::Collinear;

Point random_point(std::mt19937_64& rng, long range) {
    std::uniform_int_distribution<long> d(-range, range);
    std::uniform_int_distribution<long> den(1, 7);
    return {Rational(d(rng), den(rng)), Rational(d(rng), den(rng))};
}

}  // namespace

TEST_CASE("rational canonical form") {
    const Rational r = Rational::parse("-6/4");
    CHECK(r.str() == "-3/2");
    CHECK(r.denominator() > 0);
    CHECK(Rational::parse("-10/5") == Rational(-2));
    CHECK(Rational::parse("0/7").str() == "0");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("6/-4"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
}

TEST_CASE("orientation examples") {
    CHECK(orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == L);
    CHECK(orientation(pt(0, 0), pt(1, 0), pt(2, 0)) == C);
    CHECK(orientation(pt(0, 0), pt(4, 1), pt(6, 4)) == L);
    CHECK(cross(pt(0, 0), pt(4, 1), pt(6, 4)) == Rational(10));
}

TEST_CASE("orientation near-degenerate inputs resolve exactly") {
    // Offsets far below double resolution at this magnitude.
    const Point a = pt("1000000000000000000000", "1");
    const Point b = pt("-1000000000000000000000", "-1");
    const Point on{Rational(0), Rational(0)};
    const Point above{Rational(0), Rational(1, 1000000000000)};
    CHECK(orientation(a, b, on) == C);
    CHECK(orientation(a, b, above) == R);
    CHECK(orientation(b, a, above) == L);
    const Point tiny = pt("1/3", "1/3");
    CHECK(orientation(pt(0, 0), pt(1, 1), tiny) == C);
    CHECK(orientation(pt(0, 0), pt(1, 1), pt("1/3", "333333333333333333/1000000000000000001")) == R);
}

TEST_CASE("orientation properties on random triples") {
    std::mt19937_64 rng(41);
    for (int k = 0; k < 2000; ++k) {
        const Point a = random_point(rng, 50), b = random_point(rng, 50), c = random_point(rng, 50);
        const Orientation o = orientation(a, b, c);
        CHECK((o == L) == (orientation(c, b, a) == R));
        CHECK((o == L) == (orientation(b, a, c) == R));
        CHECK(o == orientation(b, c, a));
        const Point t = random_point(rng, 1000);
        const Rational s(static_cast<long>(rng() % 97 + 1), 13);
        auto map = [&](const Point& p) { return Point{p.x * s + t.x, p.y * s + t.y}; };
        CHECK(orientation(map(a), map(b), map(c)) == o);
        const Rational exact = cross(a, b, c);
        CHECK(o == (exact.sign() > 0 ? L : exact.sign() < 0 ? R : C));
    }
}

TEST_CASE("midpoint") {
    CHECK(midpoint(pt(0, 0), pt(2, 4)) == pt(1, 2));
    CHECK(midpoint(pt(0, 0), pt(4, 1)) == pt("2", "1/2"));
    CHECK(midpoint(pt(2, 2), pt(3, 5)) == pt("5/2", "7/2"));
    std::mt19937_64 rng(42);
    for (int k = 0; k < 200; ++k) {
        const Point a = random_point(rng, 30), b = random_point(rng, 30);
        CHECK(midpoint(a, b) == midpoint(b, a));
        if (a != b) CHECK(orientation(a, b, midpoint(a, b)) == C);
    }
}

TEST_CASE("ray_edge_intersection examples") {
    const RayHit f4 = ray_edge_intersection(pt(0, 0), pt(4, 1), {pt(6, 4), pt(5, 0)});
    REQUIRE(f4.kind == RayHitKind::Hit);
    CHECK(f4.point == pt("16/3", "4/3"));
    const RayHit p6 = ray_edge_intersection(pt(0, 0), pt(3, 3), {pt(4, 6), pt(5, 3)});
    REQUIRE(p6);
    CHECK(p6.point == pt("9/2", "9/2"));
    CHECK(ray_edge_intersection(pt(0, 0), pt(1, 0), {pt(2, 1), pt(2, 2)}).kind == RayHitKind::Miss);
}

TEST_CASE("ray_edge_intersection degenerate outcomes") {
    // Parallel and disjoint.
    CHECK(ray_edge_intersection(pt(0, 0), pt(1, 0), {pt(0, 1), pt(5, 1)}).kind == RayHitKind::Miss);
    // Collinear overlap beyond `through`.
    CHECK(ray_edge_intersection(pt(0, 0), pt(1, 0), {pt(2, 0), pt(5, 0)}).kind == RayHitKind::Overlap);
    // Behind the origin.
    CHECK(ray_edge_intersection(pt(0, 0), pt(1, 0), {pt(-3, -1), pt(-3, 1)}).kind == RayHitKind::Miss);
    // Not strictly beyond `through`.
    CHECK(ray_edge_intersection(pt(0, 0), pt(2, 0), {pt(1, -1), pt(1, 1)}).kind == RayHitKind::Miss);
    // Endpoint hit.
    const RayHit corner = ray_edge_intersection(pt(0, 0), pt(1, 1), {pt(3, 3), pt(5, 0)});
    REQUIRE(corner);
    CHECK(corner.point == pt(3, 3));
}

TEST_CASE("ray_edge_intersection result lies on ray and edge") {
    std::mt19937_64 rng(43);
    int hits = 0;
    for (int k = 0; k < 3000; ++k) {
        const Point o = random_point(rng, 20), t = random_point(rng, 20);
        const Segment e{random_point(rng, 20), random_point(rng, 20)};
        if (o == t || e.a == e.b) continue;
        const RayHit h = ray_edge_intersection(o, t, e);
        if (h.kind != RayHitKind::Hit) continue;
        ++hits;
        CHECK(orientation(o, t, h.point) == C);
        CHECK(on_segment(h.point, e));
        // Strictly beyond `through`: t lies between o and the hit.
        CHECK(on_segment(t, {o, h.point}));
        CHECK(h.point != t);
    }
    CHECK(hits > 100);
}

TEST_CASE("segments_properly_intersect") {
    CHECK(segments_properly_intersect({pt(0, 0), pt(2, 2)}, {pt(0, 2), pt(2, 0)}));
    CHECK_FALSE(segments_properly_intersect({pt(0, 0), pt(1, 1)}, {pt(1, 1), pt(2, 0)}));
    CHECK(segments_properly_intersect({pt(0, 0), pt(2, 0)}, {pt(1, 0), pt(3, 0)}));
    CHECK(segments_properly_intersect({pt(0, 0), pt(2, 0)}, {pt(1, 0), pt(1, 5)}));  // T-junction
    CHECK_FALSE(segments_properly_intersect({pt(0, 0), pt(1, 0)}, {pt(2, 0), pt(3, 0)}));
    CHECK_THROWS_AS(segments_properly_intersect({pt(1, 1), pt(1, 1)}, {pt(0, 0), pt(2, 0)}), std::invalid_argument);
}

TEST_CASE("predicate tally counts orientation calls") {
    PredicateTally tally;
    orientation(pt(0, 0), pt(1, 0), pt(0, 1));
    orientation(pt(0, 0), pt(1, 0), pt(0, 1));
    CHECK(tally.elapsed() == 2);
    cross(pt(0, 0), pt(1, 0), pt(0, 1));
    CHECK(tally.elapsed() == 2);
}
