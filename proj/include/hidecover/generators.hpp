#pragma once

#include "hidecover/polygon.hpp"

#include <array>
#include <cstddef>
#include <cstdint>

namespace hidecover {

struct GenConfig {
    std::size_t n = 3;                       // funnel vertex count
    std::array<std::size_t, 3> chains{2, 2, 2};  // pseudotriangle chain lengths in edges, largest first
    std::uint64_t seed = 1;
    std::int64_t coord_range = 1'000'000'000'000;  // bound on |coordinate|
};

// Integer funnel built from two sorted slope sequences, labeled with the
// longer chain first (either side of the shape may be the long one).  Throws std::invalid_argument for n < 3 or when the drawn
// coordinates exceed coord_range.
FunnelPolygon gen_funnel(const GenConfig& cfg);

// A funnel-shaped pair of chains closed by a symmetric inward arch in place of
// the convex edge.  Requires chains[0] >= chains[1] >= chains[2] >= 2.
Pseudotriangle gen_pseudotriangle(const GenConfig& cfg);

}  // namespace hidecover
