#include "hidecover/polygon.hpp"

#include "bbox.hpp"

#include <algorithm>
#include <tuple>

namespace hidecover {

namespace {

constexpr auto C = Orientation::Collinear;

// Closed segments share at least one point.
bool segments_touch(const Segment& s1, const Segment& s2) {
    const Orientation o1 = orientation(s1.a, s1.b, s2.a);
    const Orientation o2 = orientation(s1.a, s1.b, s2.b);
    const Orientation o3 = orientation(s2.a, s2.b, s1.a);
    const Orientation o4 = orientation(s2.a, s2.b, s1.b);
    if (o1 == C && o2 == C) {
        auto lo = [](const Rational& a, const Rational& b) { return std::min(a, b); };
        auto hi = [](const Rational& a, const Rational& b) { return std::max(a, b); };
        return lo(s1.a.x, s1.b.x) <= hi(s2.a.x, s2.b.x) && lo(s2.a.x, s2.b.x) <= hi(s1.a.x, s1.b.x) &&
               lo(s1.a.y, s1.b.y) <= hi(s2.a.y, s2.b.y) && lo(s2.a.y, s2.b.y) <= hi(s1.a.y, s1.b.y);
    }
    auto straddles = [](Orientation p, Orientation q) { return p == C || q == C || p != q; };
    return straddles(o1, o2) && straddles(o3, o4);
}

// Adjacent edges a->b, b->c fold back onto each other.
bool folds_back(const Point& a, const Point& b, const Point& c) {
    if (orientation(a, b, c) != C) return false;
    Rational dot = (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y);
    return dot.sign() < 0;
}

void check_simple(const std::vector<Point>& v) {
    const std::size_t n = v.size();
    std::vector<detail::Box> boxes;
    boxes.reserve(n);
    for (std::size_t i = 0; i < n; ++i) boxes.push_back(detail::Box::of(v[i], v[(i + 1) % n]));

    for (std::size_t i = 0; i < n; ++i) {
        if (folds_back(v[i], v[(i + 1) % n], v[(i + 2) % n])) throw NotSimple(i, (i + 1) % n);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;  // adjacent through the wrap
            if (!boxes[i].overlaps(boxes[j])) continue;
            if (segments_touch({v[i], v[(i + 1) % n]}, {v[j], v[(j + 1) % n]})) throw NotSimple(i, j);
        }
    }
}

std::vector<Point> mirror(const std::vector<Point>& v) {
    std::vector<Point> out;
    out.reserve(v.size());
    for (auto it = v.rbegin(); it != v.rend(); ++it) out.push_back({-it->x, it->y});
    return out;
}

struct Labeling {
    std::vector<std::size_t> key;  // compared descending: larger is preferred
    bool mirrored = false;
    std::size_t start = 0;  // index into the (possibly mirrored) list
    std::vector<Point> sequence;

    // Geometry alone decides, so rotating or reversing the input changes nothing.
    bool better_than(const Labeling& o) const {
        if (key != o.key) return key > o.key;
        if (mirrored != o.mirrored) return !mirrored;
        return sequence < o.sequence;
    }
};

std::vector<std::size_t> convex_vertices(const std::vector<Point>& v) {
    std::vector<std::size_t> out;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i)
        if (orientation(v[(i + n - 1) % n], v[i], v[(i + 1) % n]) == Orientation::Right) out.push_back(i);
    return out;
}

Classification build(const std::vector<Point>& original, const Labeling& best, PolygonClass kind,
                     std::size_t second, std::size_t third) {
    const std::size_t n = original.size();
    const std::vector<Point> list = best.mirrored ? mirror(original) : original;
    std::vector<Point> out;
    Relabeling relabel;
    relabel.mirrored = best.mirrored;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = (best.start + i) % n;
        out.push_back(list[j]);
        relabel.source.push_back(best.mirrored ? n - 1 - j : j);
    }
    Classification c;
    c.kind = kind;
    c.relabel = std::move(relabel);
    Polygon poly = Polygon::trusted(std::move(out));
    if (kind == PolygonClass::Funnel)
        c.funnel = FunnelPolygon{std::move(poly), second};
    else
        c.pseudo = Pseudotriangle{std::move(poly), second, third};
    return c;
}

}  // namespace

Polygon Polygon::trusted(std::vector<Point> clockwise_vertices) { return Polygon(std::move(clockwise_vertices)); }

Rational signed_area2(const std::vector<Point>& v) {
    Rational sum;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % n];
        sum += a.x * b.y - b.x * a.y;
    }
    return sum;
}

Polygon validate_simple(std::vector<Point> v) {
    const std::size_t n = v.size();
    if (n < 3) throw DegeneratePolygon("a polygon needs at least 3 vertices");
    for (std::size_t i = 0; i < n; ++i)
        if (v[i] == v[(i + 1) % n]) throw DegenerateVertex(i);
    const Rational area = signed_area2(v);
    const bool flat = std::all_of(v.begin(), v.end(), [&](const Point& q) { return orientation(v[0], v[1], q) == C; });
    if (flat) throw DegeneratePolygon("polygon has zero area");
    check_simple(v);
    if (area.sign() == 0) throw DegeneratePolygon("polygon has zero area");
    if (area.sign() > 0) std::reverse(v.begin() + 1, v.end());  // keeps v[0] first
    return Polygon::trusted(std::move(v));
}

Polygon normalize_strict(const Polygon& p) {
    std::vector<Point> v = p.vertices();
    bool changed = true;
    while (changed && v.size() >= 3) {
        changed = false;
        const std::size_t n = v.size();
        std::vector<Point> kept;
        kept.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (orientation(v[(i + n - 1) % n], v[i], v[(i + 1) % n]) == C)
                changed = true;
            else
                kept.push_back(v[i]);
        }
        v = std::move(kept);
    }
    if (v.size() < 3) throw DegeneratePolygon("fewer than 3 vertices remain after removing collinear ones");
    return Polygon::trusted(std::move(v));
}

bool is_funnel(const Polygon& p, std::size_t apex) {
    const std::size_t n = p.size();
    if (n < 3 || apex == 0 || apex >= n - 1) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const bool corner = i == 0 || i == apex || i == n - 1;
        if (p.turn(i) != (corner ? Orientation::Right : Orientation::Left)) return false;
    }
    return true;
}

Classification classify(const Polygon& p) {
    const std::vector<Point>& v = p.vertices();
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i)
        if (p.turn(i) == C) return {};

    std::optional<Labeling> best;
    bool funnel = false;
    std::size_t second = 0, third = 0;

    for (bool mirrored : {false, true}) {
        const std::vector<Point> list = mirrored ? mirror(v) : v;
        const std::vector<std::size_t> cv = convex_vertices(list);
        if (cv.size() != 3) return {};
        auto adjacent = [n](std::size_t a, std::size_t b) { return (a + 1) % n == b; };
        for (std::size_t r = 0; r < 3; ++r) {
            // Rotation that starts at convex vertex cv[r].
            const std::size_t start = cv[r];
            const std::size_t b = cv[(r + 1) % 3];
            const std::size_t c = cv[(r + 2) % 3];
            const std::size_t l1 = (b + n - start) % n;
            const std::size_t l2 = (c + n - b) % n;
            const std::size_t l3 = (start + n - c) % n;
            const bool is_base = adjacent(c, start);  // convex edge last -> first
            Labeling cand;
            cand.mirrored = mirrored;
            cand.start = start;
            cand.sequence.reserve(n);
            for (std::size_t i = 0; i < n; ++i) cand.sequence.push_back(list[(start + i) % n]);
            if (is_base) {
                if (!funnel) best.reset();
                funnel = true;
                cand.key = {l1};
            } else {
                if (funnel) continue;
                const bool any_adjacent = adjacent(start, b) || adjacent(b, c) || adjacent(c, start);
                if (any_adjacent) continue;  // a funnel rotation exists and wins
                cand.key = {l1, l2, l3};
            }
            if (!best || cand.better_than(*best)) {
                best = cand;
                second = l1;
                third = l1 + l2;
            }
        }
    }
    if (!best) return {};
    return build(v, *best, funnel ? PolygonClass::Funnel : PolygonClass::Pseudotriangle, second, third);
}

Classification classify(std::vector<Point> vertices) {
    try {
        return classify(normalize_strict(validate_simple(std::move(vertices))));
    } catch (const Error& e) {
        Classification c;
        c.kind = PolygonClass::NotSimple;
        c.reason = e.what();
        return c;
    }
}

std::string to_string(PolygonClass kind) {
    switch (kind) {
        case PolygonClass::Funnel: return "funnel";
        case PolygonClass::Pseudotriangle: return "pseudotriangle";
        case PolygonClass::OtherSimple: return "other";
        case PolygonClass::NotSimple: return "not-simple";
    }
    return "other";
}

}  // namespace hidecover
