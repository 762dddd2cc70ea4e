#pragma once

#include "hidecover/errors.hpp"
#include "hidecover/geometry.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hidecover {

// Simple polygon, clockwise in the x-right/y-up frame.
class Polygon {
public:
    // Skips the simplicity check; callers vouch for the input (generators, timing runs).
    static Polygon trusted(std::vector<Point> clockwise_vertices);

    const std::vector<Point>& vertices() const { return v_; }
    std::size_t size() const { return v_.size(); }
    const Point& operator[](std::size_t i) const { return v_[i]; }
    const Point& next(std::size_t i) const { return v_[(i + 1) % v_.size()]; }
    const Point& prev(std::size_t i) const { return v_[(i + v_.size() - 1) % v_.size()]; }
    Segment edge(std::size_t i) const { return {v_[i], next(i)}; }

    // Turn at vertex i: Right is convex, Left is reflex.
    Orientation turn(std::size_t i) const { return orientation(prev(i), v_[i], next(i)); }

    friend bool operator==(const Polygon&, const Polygon&) = default;

private:
    explicit Polygon(std::vector<Point> v) : v_(std::move(v)) {}
    std::vector<Point> v_;
};

// Twice the signed area; negative for clockwise vertex order.
Rational signed_area2(const std::vector<Point>& vertices);

Polygon validate_simple(std::vector<Point> vertices);
Polygon normalize_strict(const Polygon& p);

// Maps relabeled vertex i back to the input: input index source[i], and if
// `mirrored`, coordinates were reflected through x -> -x.
struct Relabeling {
    std::vector<std::size_t> source;
    bool mirrored = false;

    Point to_input(const Point& p) const { return mirrored ? Point{-p.x, p.y} : p; }
};

// Convex edge from the last vertex to vertex 0; chains 0..apex and apex..n-1.
struct FunnelPolygon {
    Polygon polygon;
    std::size_t apex = 0;

    std::size_t t() const { return apex + 1; }
    std::size_t size() const { return polygon.size(); }
};

// Convex vertices at 0, second and third; chains run between them.
struct Pseudotriangle {
    Polygon polygon;
    std::size_t second = 0;
    std::size_t third = 0;

    std::size_t t() const { return second + 1; }
    std::size_t s() const { return third + 1; }
    std::size_t size() const { return polygon.size(); }
};

enum class PolygonClass { Funnel, Pseudotriangle, OtherSimple, NotSimple };

struct Classification {
    PolygonClass kind = PolygonClass::OtherSimple;
    std::optional<FunnelPolygon> funnel;
    std::optional<Pseudotriangle> pseudo;
    Relabeling relabel;  // from the canonical polygon back to the classified one
    std::string reason;  // set for NotSimple
};

Classification classify(const Polygon& p);

// Runs validate_simple and normalize_strict first; NotSimple instead of throwing.
Classification classify(std::vector<Point> vertices);

std::string to_string(PolygonClass kind);

// Checks the funnel invariants (used when a funnel is built by hand).
bool is_funnel(const Polygon& p, std::size_t apex);

}  // namespace hidecover
