#pragma once

#include "hidecover/polygon.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace hidecover {

struct HiddenSet {
    std::vector<Point> points;
    std::optional<std::vector<std::size_t>> vertices;  // 0-based, vertex variant only

    std::size_t size() const { return points.size(); }
};

// Clockwise convex polygon; may contain one collinear triple.
struct ConvexPiece {
    std::vector<Point> vertices;
};

enum class CoverMode { Full, Vertex };

struct ConvexCover {
    std::vector<ConvexPiece> pieces;
    CoverMode mode = CoverMode::Full;

    std::size_t size() const { return pieces.size(); }
};

struct SolveStats {
    std::uint64_t predicates = 0;
};

struct Solution {
    HiddenSet hidden;
    ConvexCover cover;
    std::optional<Point> split_point;
    SolveStats stats;
};

// 1-based i: the quadrilateral v_i, v_{i+1}, v_{n-i}, v_{n-i+1} is convex and
// inside the funnel.  Throws std::out_of_range unless 1 <= i and the edge
// e_{n-i} lies on the second chain.
bool strongly_visible_pair(const FunnelPolygon& f, std::size_t i);

// Hidden points on edge midpoints and a convex decomposition of equal size.
Solution solve_funnel(const FunnelPolygon& f);

// Hidden vertices and a cover of the vertices by convex pieces, of equal size.
Solution solve_funnel_vertices(const FunnelPolygon& f);

struct PseudotriangleSplit {
    Point split_point;
    FunnelPolygon first;   // between vertex 1 and the split point
    FunnelPolygon second;  // the rest, with convex edge v_1 -> p
    Relabeling first_relabel;
    Relabeling second_relabel;
    // Index into the pseudotriangle for each vertex of the unrelabeled
    // subpolygons; nullopt marks a synthetic split point.
    std::vector<std::optional<std::size_t>> first_source;
    std::vector<std::optional<std::size_t>> second_source;
    std::size_t hit_edge = 0;  // 0-based start of the edge of the second chain containing p
};

PseudotriangleSplit split_pseudotriangle(const Pseudotriangle& p);

// The larger of the two funnel solutions' hidden sets, with the union of covers.
Solution solve_pseudo(const Pseudotriangle& p);
Solution solve_pseudo_vertices(const Pseudotriangle& p);

// Maps a solution computed on a relabeled polygon back to the classified input.
Solution to_input_frame(Solution s, const Relabeling& relabel);

}  // namespace hidecover
