#pragma once

#include "hidecover/solvers.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hidecover {

struct Violation {
    std::string kind;  // visible-pair, uncovered, non-convex, outside, overlap, area, size-mismatch
    std::vector<Point> witness;
    std::optional<std::size_t> piece;
};

struct VerificationReport {
    std::vector<Violation> violations;

    bool valid() const { return violations.empty(); }
    void merge(VerificationReport other);
};

// Every pair of hidden points is tested with sees().  Throws OutsidePolygon
// if a point is not in the closed polygon.
VerificationReport check_hidden_set(const Polygon& p, const HiddenSet& h);

// Full-cover check: convex pieces inside p, pairwise interior-disjoint, with
// areas summing to the polygon's, covering the vertices, edge midpoints and
// `samples` seeded random points of p.
VerificationReport check_cover(const Polygon& p, const ConvexCover& c, std::size_t samples = 1000,
                               std::uint64_t seed = 0x5eed);

// Vertex-cover check: convex pieces inside p whose union holds every vertex.
VerificationReport check_vertex_cover(const Polygon& p, const ConvexCover& c);

struct HiddenVertexSet {
    std::size_t size = 0;
    std::vector<std::size_t> vertices;  // 0-based, lexicographically first among the maximum
};

// Maximum independent set of the visibility graph.  Throws PreconditionError
// when p has more than `limit` vertices.
HiddenVertexSet brute_force_hvs(const Polygon& p, std::size_t limit = 18);

// Valid iff the hidden set and the cover (checked in the cover's mode) are
// both valid and have equal size.
VerificationReport certify_homestead(const Polygon& p, const Solution& sol, std::size_t samples = 1000);

}  // namespace hidecover
