#include "hidecover/solvers.hpp"

#include <stdexcept>

namespace hidecover {

namespace {

// Ray parameter of a point on the line through origin and through.
Rational ray_param(const Point& origin, const Point& through, const Point& p) {
    const Rational dx = through.x - origin.x, dy = through.y - origin.y;
    return ((p.x - origin.x) * dx + (p.y - origin.y) * dy) / (dx * dx + dy * dy);
}

FunnelPolygon as_funnel(const std::vector<Point>& part, Relabeling& relabel) {
    Classification c = classify(Polygon::trusted(part));
    if (c.kind != PolygonClass::Funnel) throw std::logic_error("pseudotriangle split produced a non-funnel part");
    relabel = std::move(c.relabel);
    return std::move(*c.funnel);
}

void require_proper(const Pseudotriangle& p) {
    const std::size_t n = p.size();
    if (p.second == 1 || p.third == p.second + 1 || p.third + 1 == n)
        throw PreconditionError("pseudotriangle has two adjacent convex vertices; solve it as a funnel");
}

}  // namespace

PseudotriangleSplit split_pseudotriangle(const Pseudotriangle& pt) {
    require_proper(pt);
    const Polygon& poly = pt.polygon;
    const std::size_t n = poly.size();
    const Point& origin = poly[0];
    const Point& through = poly[1];

    std::optional<Point> best;
    std::optional<Rational> best_t;
    std::size_t edge = 0;
    for (std::size_t j = pt.second; j < pt.third; ++j) {
        const Segment e = poly.edge(j);
        RayHit hit = ray_edge_intersection(origin, through, e);
        if (hit.kind == RayHitKind::Miss) continue;
        if (hit.kind == RayHitKind::Overlap) {
            // The ray runs along the edge; its nearer endpoint is the first contact.
            Rational ta = ray_param(origin, through, e.a), tb = ray_param(origin, through, e.b);
            hit.point = ta < tb ? e.a : e.b;
        }
        Rational t = ray_param(origin, through, hit.point);
        if (!best_t || t < *best_t) {
            best_t = std::move(t);
            best = std::move(hit.point);
            edge = j;
        }
    }
    if (!best) throw std::logic_error("extension of the first edge misses the middle chain");

    // A hit exactly on a vertex makes that vertex the split point.
    std::optional<std::size_t> at_vertex;
    if (*best == poly[edge]) at_vertex = edge;
    else if (*best == poly[edge + 1]) at_vertex = edge + 1;

    std::vector<Point> first, second;
    std::vector<std::optional<std::size_t>> first_source, second_source;
    const std::size_t last1 = at_vertex ? *at_vertex : edge;
    for (std::size_t i = 1; i <= last1; ++i) {
        first.push_back(poly[i]);
        first_source.push_back(i);
    }
    if (!at_vertex) {
        first.push_back(*best);
        first_source.push_back(std::nullopt);
        second.push_back(*best);
        second_source.push_back(std::nullopt);
    }
    for (std::size_t i = at_vertex ? *at_vertex : edge + 1; i < n; ++i) {
        second.push_back(poly[i]);
        second_source.push_back(i);
    }
    second.push_back(poly[0]);
    second_source.push_back(0);

    Relabeling first_relabel, second_relabel;
    FunnelPolygon f1 = as_funnel(first, first_relabel);
    FunnelPolygon f2 = as_funnel(second, second_relabel);
    return PseudotriangleSplit{*best,
                               std::move(f1),
                               std::move(f2),
                               std::move(first_relabel),
                               std::move(second_relabel),
                               std::move(first_source),
                               std::move(second_source),
                               edge};
}

Solution solve_pseudo(const Pseudotriangle& p) {
    PredicateTally tally;
    const PseudotriangleSplit split = split_pseudotriangle(p);
    Solution a = to_input_frame(solve_funnel(split.first), split.first_relabel);
    Solution b = to_input_frame(solve_funnel(split.second), split.second_relabel);

    Solution s;
    s.hidden = a.hidden.size() >= b.hidden.size() ? std::move(a.hidden) : std::move(b.hidden);
    s.cover.mode = CoverMode::Full;
    s.cover.pieces = std::move(a.cover.pieces);
    for (ConvexPiece& piece : b.cover.pieces) s.cover.pieces.push_back(std::move(piece));
    s.split_point = split.split_point;
    s.stats.predicates = tally.elapsed();
    return s;
}

Solution solve_pseudo_vertices(const Pseudotriangle& p) {
    PredicateTally tally;
    const PseudotriangleSplit split = split_pseudotriangle(p);
    const std::size_t i = split.hit_edge;

    // Hidden vertices in pseudotriangle indices, with a synthetic split point
    // moved to the nearest true vertex on the other part's side.
    auto lift = [&](const Solution& part, const std::vector<std::optional<std::size_t>>& source,
                    std::size_t replacement) {
        std::vector<std::size_t> ids;
        for (std::size_t v : *part.hidden.vertices) ids.push_back(source.at(v).value_or(replacement));
        return ids;
    };
    Solution a = to_input_frame(solve_funnel_vertices(split.first), split.first_relabel);
    Solution b = to_input_frame(solve_funnel_vertices(split.second), split.second_relabel);
    std::vector<std::size_t> ha = lift(a, split.first_source, (i + 1) % p.size());
    std::vector<std::size_t> hb = lift(b, split.second_source, i);

    Solution s;
    std::vector<std::size_t> hidden = ha.size() >= hb.size() ? std::move(ha) : std::move(hb);
    for (std::size_t v : hidden) s.hidden.points.push_back(p.polygon[v]);
    s.hidden.vertices = std::move(hidden);
    s.cover.mode = CoverMode::Vertex;
    s.cover.pieces = std::move(a.cover.pieces);
    for (ConvexPiece& piece : b.cover.pieces) s.cover.pieces.push_back(std::move(piece));
    s.split_point = split.split_point;
    s.stats.predicates = tally.elapsed();
    return s;
}

}  // namespace hidecover
