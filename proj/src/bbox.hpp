#pragma once

// Padded floating-point bounding boxes.  Used only to skip exact tests that
// cannot succeed; a box overlap never decides anything by itself.

#include "hidecover/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hidecover::detail {

inline double pad(double v) { return 1e-9 * (std::fabs(v) + 1.0); }

struct Box {
    double x0 = std::numeric_limits<double>::infinity();
    double y0 = std::numeric_limits<double>::infinity();
    double x1 = -std::numeric_limits<double>::infinity();
    double y1 = -std::numeric_limits<double>::infinity();

    void add(const Point& p) {
        const double x = p.x.to_double(), y = p.y.to_double();
        x0 = std::min(x0, x - pad(x));
        x1 = std::max(x1, x + pad(x));
        y0 = std::min(y0, y - pad(y));
        y1 = std::max(y1, y + pad(y));
    }

    static Box of(const Point& a, const Point& b) {
        Box box;
        box.add(a);
        box.add(b);
        return box;
    }

    bool overlaps(const Box& o) const { return x0 <= o.x1 && o.x0 <= x1 && y0 <= o.y1 && o.y0 <= y1; }
    bool may_contain(double x, double y) const { return x0 <= x && x <= x1 && y0 <= y && y <= y1; }
};

}  // namespace hidecover::detail
