#pragma once

// Test-side reference checks, deliberately naive and sharing no code with the
// library beyond the number and point types.

#include "hidecover/geometry.hpp"

#include <vector>

namespace independent {

using hidecover::Point;
using hidecover::Rational;

inline Rational turn(const Point& a, const Point& b, const Point& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline bool on_closed_segment(const Point& a, const Point& b, const Point& q) {
    return turn(a, b, q) == Rational(0) && std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y);
}

// Even-odd rule with a half-open upward crossing convention; boundary is inside.
inline bool inside_closed(const std::vector<Point>& poly, const Point& q) {
    bool in = false;
    for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
        const Point& a = poly[j];
        const Point& b = poly[i];
        if (on_closed_segment(a, b, q)) return true;
        if ((a.y > q.y) != (b.y > q.y)) {
            const Rational x = a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (q.x < x) in = !in;
        }
    }
    return in;
}

// Whether `samples` evenly spaced interior points of pq are all in the closed polygon.
inline bool sampled_sees(const std::vector<Point>& poly, const Point& p, const Point& q, int samples = 1000) {
    for (int k = 1; k <= samples; ++k) {
        const Rational t(k, samples + 1);
        if (!inside_closed(poly, {p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)})) return false;
    }
    return true;
}

inline Rational area2(const std::vector<Point>& v) {
    Rational s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        s += a.x * b.y - b.x * a.y;
    }
    return s;
}

}  // namespace independent
