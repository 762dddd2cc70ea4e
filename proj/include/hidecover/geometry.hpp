#pragma once

#include "hidecover/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>

namespace hidecover {

struct Point {
    Rational x, y;

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

std::ostream& operator<<(std::ostream& os, const Point& p);

struct Segment {
    Point a, b;
};

enum class Orientation { Left, Right, Collinear };

// Sign of (b - a) x (c - a): Left means c lies left of the directed line a->b.
// Always exact; a floating-point filter settles the clear cases.
Orientation orientation(const Point& a, const Point& b, const Point& c);

struct ApproxPoint {
    double x = 0, y = 0;
    bool exact = false;  // both coordinates are exactly representable
};

ApproxPoint approx(const Point& p);

// orientation() with the caller's cached approximations, which must be approx() of the points.
Orientation orientation(const Point& a, const Point& b, const Point& c, const ApproxPoint& da,
                        const ApproxPoint& db, const ApproxPoint& dc);

// Twice the signed area of triangle abc, without touching the predicate tally.
Rational cross(const Point& a, const Point& b, const Point& c);

Point midpoint(const Point& a, const Point& b);

enum class RayHitKind { Hit, Miss, Overlap };

struct RayHit {
    RayHitKind kind = RayHitKind::Miss;
    Point point;

    explicit operator bool() const { return kind == RayHitKind::Hit; }
};

// Point where the ray from `origin` through `through`, strictly beyond `through`,
// meets the closed segment `edge`.  Overlap means the ray runs along the edge.
RayHit ray_edge_intersection(const Point& origin, const Point& through, const Segment& edge);

// True iff the closed segments share a point interior to at least one of them.
// Throws std::invalid_argument for a zero-length segment.
bool segments_properly_intersect(const Segment& s1, const Segment& s2);

// True iff p lies on the closed segment s.
bool on_segment(const Point& p, const Segment& s);

// Per-thread count of orientation and intersection evaluations.
std::uint64_t predicate_count();

class PredicateTally {
public:
    PredicateTally() : start_(predicate_count()) {}
    std::uint64_t elapsed() const { return predicate_count() - start_; }

private:
    std::uint64_t start_;
};

}  // namespace hidecover
