#pragma once

#include "hidecover/polygon.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hidecover {

namespace detail {
struct Box;
}

// Precomputed edge boxes for repeated point-location and visibility queries
// against one polygon.  Boundary points count as inside.
class PolygonIndex {
public:
    explicit PolygonIndex(const Polygon& p);
    ~PolygonIndex();
    PolygonIndex(const PolygonIndex&) = delete;
    PolygonIndex& operator=(const PolygonIndex&) = delete;

    const Polygon& polygon() const { return poly_; }
    bool contains(const Point& p) const;
    bool on_boundary(const Point& p) const;

    // Closed visibility: the segment pq lies in the closed polygon region.
    // Throws OutsidePolygon if either endpoint is outside.
    bool sees(const Point& p, const Point& q) const;
    // sees() for endpoints the caller has already found inside.
    bool sees_from_inside(const Point& p, const Point& q) const;

    // A query point with its cached approximation and the boundary edges
    // through it, for points that take part in many visibility queries.
    struct Anchor {
        Point point;
        ApproxPoint approx;
        std::vector<std::size_t> edges;
    };
    Anchor anchor(const Point& p) const;
    bool sees_from_inside(const Anchor& p, const Anchor& q) const;

private:
    bool on_edge(std::size_t i, const Point& p, const ApproxPoint& dp) const;
    bool contains_unchecked_boundary(const Point& p, const ApproxPoint& dp) const;

    const Polygon& poly_;
    std::vector<detail::Box> boxes_;
    std::vector<ApproxPoint> approx_;
};

bool point_in_polygon(const Point& p, const Polygon& poly);
bool sees(const Point& p, const Point& q, const Polygon& poly);

class VisibilityGraph {
public:
    explicit VisibilityGraph(std::size_t n) : n_(n), adj_(n * n, 0) {}

    std::size_t size() const { return n_; }
    bool adjacent(std::size_t i, std::size_t j) const { return adj_[i * n_ + j] != 0; }
    void connect(std::size_t i, std::size_t j) { adj_[i * n_ + j] = adj_[j * n_ + i] = 1; }
    std::size_t edge_count() const;

private:
    std::size_t n_;
    std::vector<std::uint8_t> adj_;
};

VisibilityGraph visibility_graph(const Polygon& poly);

}  // namespace hidecover
